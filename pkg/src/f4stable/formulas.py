"""Discriminant and coefficient formula tables.

Every formula is shipped as a term list (integer coefficient, monomial word
over a fixed letter frame) rather than re-derived at runtime.  The test
suite cross-validates each table against independent constructions
(symbolic re-expansion, determinant identities, Vandermonde products,
planted repeated factors).

Frames:
  ternary quadratic  A..F  <->  X^2, Y^2, Z^2, XY, XZ, YZ
  ternary cubic      A..J  <->  X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z, YZ^2, Z^3
  binary quartic     A..E  <->  X^4, X^3Y, X^2Y^2, XY^3, Y^4
  binary cubic       A..D  <->  X^3, X^2Y, XY^2, Y^3
"""

from __future__ import annotations

from .poly import SparsePoly
from .rings import ZZ


def _parse(table, frame):
    """(coef, word) pairs -> (coef, exponent tuple over frame)."""
    out = []
    for coef, word in table:
        exps = [0] * len(frame)
        for ch in word:
            exps[frame.index(ch)] += 1
        out.append((coef, tuple(exps)))
    return tuple(out)


# -- discriminant of the ternary quadratic AX^2+BY^2+CZ^2+DXY+EXZ+FYZ --------

TERN_QUAD_FRAME = "ABCDEF"
DISC2_TERNARY = _parse([
    (4, "ABC"), (1, "DEF"), (-1, "AFF"), (-1, "BEE"), (-1, "CDD"),
], TERN_QUAD_FRAME)


# -- binary quartic discriminant ---------------------------------------------

BIN_QUARTIC_FRAME = "ABCDE"
DISC4_BINARY = _parse([
    (1, "BBCCDD"), (-4, "ACCCDD"), (-4, "BBBDDD"), (18, "ABCDDD"),
    (-27, "AADDDD"), (-4, "BBCCCE"), (16, "ACCCCE"), (18, "BBBCDE"),
    (-80, "ABCCDE"), (-6, "ABBDDE"), (144, "AACDDE"), (-27, "BBBBEE"),
    (144, "ABBCEE"), (-128, "AACCEE"), (-192, "AABDEE"), (256, "AAAEEE"),
], BIN_QUARTIC_FRAME)


# -- ternary cubic: the degree-4 invariant S and degree-6 invariant T --------

TERN_CUBIC_FRAME = "ABCDEFGHIJ"

S_TERNARY_CUBIC = _parse([
    (1, "EEEE"), (-8, "DEEF"), (16, "DDFF"), (24, "CEFG"), (-48, "BFFG"),
    (-8, "CEEH"), (-16, "CDFH"), (24, "BEFH"), (16, "CCHH"), (-48, "AFHH"),
    (24, "CDEI"), (-8, "BEEI"), (-16, "BDFI"), (-48, "CCGI"), (144, "AFGI"),
    (-16, "BCHI"), (24, "AEHI"), (16, "BBII"), (-48, "ADII"), (-48, "CDDJ"),
    (24, "BDEJ"), (144, "BCGJ"), (-216, "AEGJ"), (-48, "BBHJ"), (144, "ADHJ"),
], TERN_CUBIC_FRAME)

T_TERNARY_CUBIC = _parse([
    (-1, "EEEEEE"), (12, "DEEEEF"), (-48, "DDEEFF"), (64, "DDDFFF"),
    (-36, "CEEEFG"), (144, "CDEFFG"), (72, "BEEFFG"), (-288, "BDFFFG"),
    (-216, "CCFFGG"), (864, "AFFFGG"), (12, "CEEEEH"), (-24, "CDEEFH"),
    (-36, "BEEEFH"), (-96, "CDDFFH"), (144, "BDEFFH"), (144, "CCEFGH"),
    (144, "BCFFGH"), (-864, "AEFFGH"), (-48, "CCEEHH"), (-96, "CCDFHH"),
    (144, "BCEFHH"), (72, "AEEFHH"), (-216, "BBFFHH"), (576, "ADFFHH"),
    (64, "CCCHHH"), (-288, "ACFHHH"), (-36, "CDEEEI"), (12, "BEEEEI"),
    (144, "CDDEFI"), (-24, "BDEEFI"), (-96, "BDDFFI"), (72, "CCEEGI"),
    (144, "CCDFGI"), (-720, "BCEFGI"), (648, "AEEFGI"), (576, "BBFFGI"),
    (-864, "ADFFGI"), (144, "CCDEHI"), (-24, "BCEEHI"), (-36, "AEEEHI"),
    (-48, "BCDFHI"), (144, "BBEFHI"), (-720, "ADEFHI"), (-288, "CCCGHI"),
    (1296, "ACFGHI"), (-96, "BCCHHI"), (144, "ACEHHI"), (144, "ABFHHI"),
    (-216, "CCDDII"), (144, "BCDEII"), (-48, "BBEEII"), (72, "ADEEII"),
    (-96, "BBDFII"), (576, "ADDFII"), (576, "BCCGII"), (-864, "ACEGII"),
    (-864, "ABFGII"), (-96, "BBCHII"), (144, "ACDHII"), (144, "ABEHII"),
    (-216, "AAHHII"), (64, "BBBIII"), (-288, "ABDIII"), (864, "AAGIII"),
    (72, "CDDEEJ"), (-36, "BDEEEJ"), (-288, "CDDDFJ"), (144, "BDDEFJ"),
    (-864, "CCDEGJ"), (648, "BCEEGJ"), (-540, "AEEEGJ"), (1296, "BCDFGJ"),
    (-864, "BBEFGJ"), (1296, "ADEFGJ"), (864, "CCCGGJ"), (-3888, "ACFGGJ"),
    (576, "CCDDHJ"), (-720, "BCDEHJ"), (72, "BBEEHJ"), (648, "ADEEHJ"),
    (144, "BBDFHJ"), (-864, "ADDFHJ"), (-864, "BCCGHJ"), (1296, "ACEGHJ"),
    (1296, "ABFGHJ"), (576, "BBCHHJ"), (-864, "ACDHHJ"), (-864, "ABEHHJ"),
    (864, "AAHHHJ"), (144, "BCDDIJ"), (144, "BBDEIJ"), (-864, "ADDEIJ"),
    (-864, "BBCGIJ"), (1296, "ACDGIJ"), (1296, "ABEGIJ"), (-288, "BBBHIJ"),
    (1296, "ABDHIJ"), (-3888, "AAGHIJ"), (-216, "BBDDJJ"), (864, "ADDDJJ"),
    (864, "BBBGJJ"), (-3888, "ABDGJJ"), (5832, "AAGGJJ"),
], TERN_CUBIC_FRAME)


# -- the 3-grading: ternary-cubic coefficients A..J of disc2(v) in a..r ------

M3_LABELS = "abcdefghijklmnopqr"
M3_CUBIC_COEFFS = tuple(_parse(t, M3_LABELS) for t in [
    [(4, "adg"), (-1, "gjj"), (-1, "dmm"), (1, "jmp"), (-1, "app")],
    [(4, "bdg"), (4, "aeg"), (4, "adh"), (-1, "hjj"), (-2, "gjk"), (-1, "emm"),
     (-2, "dmn"), (1, "kmp"), (1, "jnp"), (-1, "bpp"), (1, "jmq"), (-2, "apq")],
    [(4, "cdg"), (4, "afg"), (4, "adi"), (-1, "ijj"), (-2, "gjl"), (-1, "fmm"),
     (-2, "dmo"), (1, "lmp"), (1, "jop"), (-1, "cpp"), (1, "jmr"), (-2, "apr")],
    [(4, "beg"), (4, "bdh"), (4, "aeh"), (-2, "hjk"), (-1, "gkk"), (-2, "emn"),
     (-1, "dnn"), (1, "knp"), (1, "kmq"), (1, "jnq"), (-2, "bpq"), (-1, "aqq")],
    [(4, "ceg"), (4, "bfg"), (4, "cdh"), (4, "afh"), (4, "bdi"), (4, "aei"),
     (-2, "ijk"), (-2, "hjl"), (-2, "gkl"), (-2, "fmn"), (-2, "emo"), (-2, "dno"),
     (1, "lnp"), (1, "kop"), (1, "lmq"), (1, "joq"), (-2, "cpq"), (1, "kmr"),
     (1, "jnr"), (-2, "bpr"), (-2, "aqr")],
    [(4, "cfg"), (4, "cdi"), (4, "afi"), (-2, "ijl"), (-1, "gll"), (-2, "fmo"),
     (-1, "doo"), (1, "lop"), (1, "lmr"), (1, "jor"), (-2, "cpr"), (-1, "arr")],
    [(4, "beh"), (-1, "hkk"), (-1, "enn"), (1, "knq"), (-1, "bqq")],
    [(4, "ceh"), (4, "bfh"), (4, "bei"), (-1, "ikk"), (-2, "hkl"), (-1, "fnn"),
     (-2, "eno"), (1, "lnq"), (1, "koq"), (-1, "cqq"), (1, "knr"), (-2, "bqr")],
    [(4, "cfh"), (4, "cei"), (4, "bfi"), (-2, "ikl"), (-1, "hll"), (-2, "fno"),
     (-1, "eoo"), (1, "loq"), (1, "lnr"), (1, "kor"), (-2, "cqr"), (-1, "brr")],
    [(4, "cfi"), (-1, "ill"), (-1, "foo"), (1, "lor"), (-1, "crr")],
])


# -- the 4-grading: binary-quartic coefficients A..E in a..n -----------------

M4_LABELS = "abcdefghijklmn"
M4_QUARTIC_COEFFS = tuple(_parse(t, M4_LABELS) for t in [
    [(4, "acem"), (-1, "eggm"), (-1, "akkm"), (1, "gikm"), (-1, "ciim")],
    [(4, "bcem"), (4, "adem"), (4, "acfm"), (-1, "fggm"), (-2, "eghm"),
     (-1, "bkkm"), (-2, "aklm"), (4, "acen"), (-1, "eggn"), (-1, "akkn"),
     (1, "hikm"), (1, "gilm"), (1, "gikn"), (-1, "diim"), (-1, "ciin"),
     (1, "gjkm"), (-2, "cijm")],
    [(4, "bdem"), (4, "bcfm"), (4, "adfm"), (-2, "fghm"), (-1, "ehhm"),
     (-2, "bklm"), (-1, "allm"), (4, "bcen"), (4, "aden"), (4, "acfn"),
     (-1, "fggn"), (-2, "eghn"), (-1, "bkkn"), (-2, "akln"), (1, "hilm"),
     (1, "hikn"), (1, "giln"), (-1, "diin"), (1, "hjkm"), (1, "gjlm"),
     (1, "gjkn"), (-2, "dijm"), (-2, "cijn"), (-1, "cjjm")],
    [(4, "bdfm"), (-1, "fhhm"), (-1, "bllm"), (4, "bden"), (4, "bcfn"),
     (4, "adfn"), (-2, "fghn"), (-1, "ehhn"), (-2, "bkln"), (-1, "alln"),
     (1, "hiln"), (1, "hjlm"), (1, "hjkn"), (1, "gjln"), (-2, "dijn"),
     (-1, "djjm"), (-1, "cjjn")],
    [(4, "bdfn"), (-1, "fhhn"), (-1, "blln"), (1, "hjln"), (-1, "djjn")],
])


# -- the 6-grading: disc2(v) coefficients beta_1..beta_6 in a..r subset ------

M6_LABELS = "abdeghjkor"
M6_BETAS = tuple(_parse(t, M6_LABELS) for t in [
    [(4, "adg"), (-1, "gjj")],
    [(4, "bdg"), (4, "aeg"), (4, "adh"), (-1, "hjj"), (-2, "gjk")],
    [(4, "beg"), (4, "bdh"), (4, "aeh"), (-2, "hjk"), (-1, "gkk")],
    [(4, "beh"), (-1, "hkk")],
    [(-1, "arr"), (-1, "doo"), (1, "jor")],
    [(-1, "brr"), (-1, "eoo"), (1, "kor")],
])


# -- the 8-grading: Delta_8 = (f^2 g (b^2-4ac)(cd^2-bde+ae^2))^2 -------------

M8_LABELS = "abcdefg"
M8_INNER = _parse([
    (1, "bbcddffg"), (-1, "bbbdeffg"), (1, "abbeeffg"),
    (-4, "accddffg"), (4, "abcdeffg"), (-4, "aaceeffg"),
], M8_LABELS)


def eval_table(table, values, zero):
    """Sum coef * prod(values[i]^e_i) over the table, in the values' ring.

    `zero` seeds the accumulator (0, field zero, or a zero polynomial);
    powers are cached per slot, so repeated evaluation of the big tables
    stays cheap for polynomial inputs too.
    """
    pow_cache = [dict() for _ in values]

    def vpow(i, e):
        cache = pow_cache[i]
        got = cache.get(e)
        if got is None:
            got = values[i] ** e
            cache[e] = got
        return got

    acc = zero
    for coef, exps in table:
        term = None
        for i, e in enumerate(exps):
            if e:
                term = vpow(i, e) if term is None else term * vpow(i, e)
        if term is None:
            acc = acc + coef
        else:
            acc = acc + term * coef
    return acc


def table_poly(table, frame, names=None) -> SparsePoly:
    """The table as a generic SparsePoly over Z in its frame letters."""
    names = tuple(names) if names is not None else tuple(frame)
    return SparsePoly(ZZ, names, {e: c for c, e in table})
