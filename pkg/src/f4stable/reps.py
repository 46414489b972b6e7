"""The representations V_m in their pinned coordinate bases, and the action
of the degree-0 group generators on them.

A vector is a coefficient tuple aligned with the displayed coefficient
letters.  Unipotent and Weyl generators act by linear variable substitution
inside the tensor-factor polynomials; torus generators scale each label by
its cocharacter weight.  Entries may be ints (over Z), FieldElem, or
SparsePoly (symbolic mode), and the same action code serves all three.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .poly import SparsePoly
from .rings import ZZ, FieldElem, RingMismatch
from .rootsys import Cocharacter, cochar_weights, frame_for

LABELS = {
    3: tuple("abcdefghijklmnopqr"),
    4: tuple("abcdefghijklmn"),
    6: tuple("abdeghjkor"),
    8: tuple("abcdefg"),
    12: ("c1", "c2", "c3", "c4", "c5"),
}

DIMS = {m: len(ls) for m, ls in LABELS.items()}

# spoken names of the tensor slots, for introspection and error messages
FRAME_VARS = {
    3: ("X", "Y", "Z", "T", "U", "W"),
    4: ("X", "Y", "Z", "U", "W", "T"),
    6: ("X", "Y", "Z", "T", "U", "W"),
    8: ("X", "Y", "Z", "W"),
}

# variable groups on which an SL block acts by substitution
BLOCKS = {
    3: (("X", "Y", "Z"), ("T", "U", "W")),
    4: (("X", "Y", "Z"), ("U", "W")),
    6: (("X", "Y"), ("T", "U")),
    8: (("X", "Y"),),
    12: (),
}


def _mono(m, word):
    exps = [0] * len(FRAME_VARS[m])
    for ch in word:
        exps[FRAME_VARS[m].index(ch)] += 1
    return tuple(exps)


@lru_cache(maxsize=None)
def label_monomials(m: int) -> dict:
    """label -> exponent vector of its basis monomial in FRAME_VARS[m]."""
    if m == 3:
        words = ["XTT", "YTT", "ZTT", "XUU", "YUU", "ZUU", "XWW", "YWW", "ZWW",
                 "XTU", "YTU", "ZTU", "XTW", "YTW", "ZTW", "XUW", "YUW", "ZUW"]
    elif m == 4:
        words = ["XXU", "XXW", "YYU", "YYW", "ZZU", "ZZW", "XYU", "XYW",
                 "XZU", "XZW", "YZU", "YZW", "UT", "WT"]
    elif m == 6:
        words = ["XTT", "YTT", "XUU", "YUU", "XWW", "YWW", "XTU", "YTU",
                 "ZTW", "ZUW"]
    elif m == 8:
        words = ["XX", "XY", "YY", "X", "Y", "Z", "W"]
    else:
        raise ValueError(f"no monomial frame for m={m}")
    return dict(zip(LABELS[m], (_mono(m, w) for w in words)))


@lru_cache(maxsize=None)
def _label_by_mono(m):
    return {mono: lab for lab, mono in label_monomials(m).items()}


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VmVector:
    m: int
    entries: tuple

    def __post_init__(self):
        if self.m not in LABELS:
            raise ValueError(f"unsupported grading m={self.m}")
        if len(self.entries) != DIMS[self.m]:
            raise ValueError(
                f"V_{self.m} needs {DIMS[self.m]} entries, got {len(self.entries)}")

    def entry(self, label):
        return self.entries[LABELS[self.m].index(label)]

    def support(self):
        return tuple(l for l, e in zip(LABELS[self.m], self.entries) if e)

    def to_dict(self):
        return {l: e for l, e in zip(LABELS[self.m], self.entries) if e}


def vector(m: int, ring, assignments: dict) -> VmVector:
    """Build a vector over a ring from a label -> value mapping."""
    zero = 0 if ring is ZZ else ring.from_int(0)
    vals = []
    for l in LABELS[m]:
        x = assignments.get(l, zero)
        if isinstance(x, int) and ring is not ZZ:
            x = ring.from_int(x)
        vals.append(x)
    unknown = set(assignments) - set(LABELS[m])
    if unknown:
        raise KeyError(f"labels {sorted(unknown)} not in V_{m}")
    return VmVector(m, tuple(vals))


def symbolic_vector(m: int, extra_vars=()) -> VmVector:
    """The generic vector: each label is its own variable over Z."""
    names = LABELS[m] + tuple(extra_vars)
    return VmVector(m, tuple(
        SparsePoly.variable(ZZ, names, l) for l in LABELS[m]))


def entry_zero(v: VmVector):
    for e in v.entries:
        if isinstance(e, FieldElem):
            return e.ring.from_int(0)
        if isinstance(e, SparsePoly):
            return SparsePoly.zero(e.ring, e.vars)
    return 0


def entries_ring(v: VmVector):
    """The common coefficient ring of the entries (Z for plain ints)."""
    ring = None
    for e in v.entries:
        r = e.ring if isinstance(e, (FieldElem, SparsePoly)) else ZZ
        if isinstance(e, SparsePoly):
            r = e.ring
        if ring is None:
            ring = r
        elif r != ring and not (r is ZZ and isinstance(e, int)):
            raise RingMismatch(f"mixed entry rings {ring} vs {r}")
    return ring if ring is not None else ZZ


def is_symbolic(v: VmVector) -> bool:
    return any(isinstance(e, SparsePoly) for e in v.entries)


# ---------------------------------------------------------------------------
# group generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Unipotent:
    """Variable substitution dst -> dst + param * src inside one SL block."""
    m: int
    src: str
    dst: str
    param: object

    def __post_init__(self):
        for block in BLOCKS[self.m]:
            if self.src in block and self.dst in block:
                if self.src != self.dst:
                    return
        raise ValueError(
            f"({self.src}->{self.dst}) is not a unipotent direction of the "
            f"m={self.m} group")


@dataclass(frozen=True)
class WeylSwap:
    """Determinant-one coordinate swap: a -> b, b -> -a."""
    m: int
    a: str
    b: str

    def __post_init__(self):
        for block in BLOCKS[self.m]:
            if self.a in block and self.b in block and self.a != self.b:
                return
        raise ValueError(f"({self.a},{self.b}) is not a Weyl pair for m={self.m}")


@dataclass(frozen=True)
class TorusScale:
    m: int
    lam: Cocharacter
    t: object

    def __post_init__(self):
        if self.lam.frame != frame_for(self.m):
            raise ValueError("cocharacter frame does not match m")


def invert_generator(g):
    if isinstance(g, Unipotent):
        return Unipotent(g.m, g.src, g.dst, -g.param)
    if isinstance(g, WeylSwap):
        return WeylSwap(g.m, g.b, g.a)
    if isinstance(g, TorusScale):
        t = g.t
        if isinstance(t, FieldElem):
            tinv = t.inverse()
        elif t in (1, -1):
            tinv = t
        else:
            raise ValueError(f"torus scalar {t!r} is not invertible")
        return TorusScale(g.m, g.lam, tinv)
    raise TypeError(f"not a generator: {g!r}")


def act(g, v: VmVector) -> VmVector:
    """Image of v under a single generator."""
    if isinstance(g, Unipotent):
        return _act_unipotent(g, v)
    if isinstance(g, WeylSwap):
        return _act_weyl(g, v)
    if isinstance(g, TorusScale):
        return _act_torus(g, v)
    raise TypeError(f"not a generator: {g!r}")


def act_word(word, v: VmVector) -> VmVector:
    """Apply a group word left-to-right."""
    for g in word:
        v = act(g, v)
    return v


def _act_unipotent(g: Unipotent, v: VmVector):
    if g.m != v.m:
        raise ValueError(f"generator for m={g.m} applied to V_{v.m}")
    monos = label_monomials(v.m)
    by_mono = _label_by_mono(v.m)
    fv = FRAME_VARS[v.m]
    si, di = fv.index(g.src), fv.index(g.dst)
    x = g.param
    xpow = {0: None, 1: x}  # None marks "multiply by 1"
    labels = LABELS[v.m]
    out = [None] * len(labels)

    def add(idx, val):
        out[idx] = val if out[idx] is None else out[idx] + val

    for pos, lab in enumerate(labels):
        c = v.entries[pos]
        if not c:
            continue
        exps = monos[lab]
        d = exps[di]
        if d == 0:
            add(pos, c)
            continue
        # dst^d -> sum_i C(d,i) x^i src^i dst^(d-i)
        for i in range(d + 1):
            tgt = list(exps)
            tgt[di] = d - i
            tgt[si] += i
            tgt_lab = by_mono.get(tuple(tgt))
            if tgt_lab is None:
                raise AssertionError(
                    f"substitution left the representation: {lab} -> {tgt} (m={v.m})")
            if i not in xpow:
                xpow[i] = xpow[i - 1] * x
            piece = c * comb(d, i)
            if i:
                piece = piece * xpow[i] if not isinstance(xpow[i], SparsePoly) \
                    else xpow[i] * piece
            add(labels.index(tgt_lab), piece)

    zero = entry_zero(v)
    return VmVector(v.m, tuple(zero if e is None else e for e in out))


def _act_weyl(g: WeylSwap, v: VmVector):
    if g.m != v.m:
        raise ValueError(f"generator for m={g.m} applied to V_{v.m}")
    monos = label_monomials(v.m)
    by_mono = _label_by_mono(v.m)
    fv = FRAME_VARS[v.m]
    ai, bi = fv.index(g.a), fv.index(g.b)
    labels = LABELS[v.m]
    out = [None] * len(labels)
    for pos, lab in enumerate(labels):
        c = v.entries[pos]
        if not c:
            continue
        exps = list(monos[lab])
        ea, eb = exps[ai], exps[bi]
        exps[ai], exps[bi] = eb, ea
        tgt_lab = by_mono.get(tuple(exps))
        if tgt_lab is None:
            raise AssertionError(f"swap left the representation: {lab} (m={v.m})")
        sign = -1 if eb % 2 else 1
        out[labels.index(tgt_lab)] = c * sign if sign < 0 else c
    zero = entry_zero(v)
    return VmVector(v.m, tuple(zero if e is None else e for e in out))


def _act_torus(g: TorusScale, v: VmVector):
    if g.m != v.m:
        raise ValueError(f"generator for m={g.m} applied to V_{v.m}")
    weights = cochar_weights(v.m, g.lam)
    t = g.t
    tinv = None
    out = []
    for w, c in zip(weights, v.entries):
        if not c or w == 0:
            out.append(c)
            continue
        if w > 0:
            out.append(c * t ** w)
        else:
            if tinv is None:
                if isinstance(t, FieldElem):
                    tinv = t.inverse()
                elif t in (1, -1):
                    tinv = t
                else:
                    raise ValueError(f"torus scalar {t!r} is not invertible")
            out.append(c * tinv ** (-w))
    return VmVector(v.m, tuple(out))


# ---------------------------------------------------------------------------
# dual cyclic vectors
# ---------------------------------------------------------------------------

DUAL_CYCLIC_LABELS = {
    3: ("a", "e", "h", "l", "p"),
    4: ("a", "d", "j", "k", "m"),
    6: ("b", "j", "e", "g", "r"),
    12: ("c1", "c2", "c3", "c4", "c5"),
}


def dual_cyclic(m: int, constants) -> VmVector:
    """The 5-coordinate dual cyclic pattern with the given constants.

    m=8 has no dual cyclic pattern (8 does not divide the Coxeter number's
    quotient lattice of gradings) and is rejected.
    """
    if m not in DUAL_CYCLIC_LABELS:
        raise ValueError(f"no dual cyclic pattern for m={m}")
    constants = tuple(constants)
    if len(constants) != 5:
        raise ValueError("need exactly 5 constants")
    assignments = dict(zip(DUAL_CYCLIC_LABELS[m], constants))
    zero = None
    for c in constants:
        if isinstance(c, FieldElem):
            zero = c.ring.from_int(0)
            break
        if isinstance(c, SparsePoly):
            zero = SparsePoly.zero(c.ring, c.vars)
            break
    if zero is None:
        zero = 0
    vals = tuple(assignments.get(l, zero) for l in LABELS[m])
    return VmVector(m, vals)


def dual_cyclic_symbolic(m: int) -> VmVector:
    """Dual cyclic with its five labels as symbols over Z."""
    names = DUAL_CYCLIC_LABELS[m]
    gens = [SparsePoly.variable(ZZ, names, n) for n in names]
    return dual_cyclic(m, gens)


# ---------------------------------------------------------------------------
# text grammar:  m=<m>; <label>=<value>, ...   (omitted labels are zero)
# ---------------------------------------------------------------------------


class VectorParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        super().__init__(message if position is None
                         else f"{message} (at char {position})")


def parse_assignments(text: str):
    """Parse the grammar into (m or None, {label: value string})."""
    text = text.strip()
    m = None
    if text.startswith("m="):
        head, _, rest = text.partition(";")
        try:
            m = int(head[2:].strip())
        except ValueError:
            raise VectorParseError(f"bad m in {head!r}", 2)
        text = rest.strip()
    assignments = {}
    if not text:
        return m, assignments
    offset = 0
    for chunk in text.split(","):
        piece = chunk.strip()
        if not piece:
            offset += len(chunk) + 1
            continue
        if "=" not in piece:
            raise VectorParseError(f"expected label=value, got {piece!r}", offset)
        lab, _, val = piece.partition("=")
        lab, val = lab.strip(), val.strip()
        if not lab or not val:
            raise VectorParseError(f"empty side in {piece!r}", offset)
        if lab in assignments:
            raise VectorParseError(f"label {lab!r} assigned twice", offset)
        assignments[lab] = val
        offset += len(chunk) + 1
    return m, assignments


def parse_value(text: str, ring):
    """A coefficient: integer, or polynomial in w over an extension field."""
    text = text.strip()
    try:
        n = int(text)
        return n if ring is ZZ else ring.from_int(n)
    except ValueError:
        pass
    if ring is ZZ or not getattr(ring, "degree", 1) > 1:
        raise VectorParseError(f"cannot read {text!r} as a value in {ring!r}")
    coeffs = [0] * ring.k
    for piece in text.replace("-", "+-").split("+"):
        piece = piece.strip()
        if not piece:
            continue
        neg = piece.startswith("-")
        if neg:
            piece = piece[1:].strip()
        coef, star, tail = piece.partition("*")
        if not star:
            coef, tail = ("1", piece) if "w" in piece else (piece, "")
        if tail and not tail.startswith("w"):
            raise VectorParseError(f"cannot read {text!r} as a field value")
        try:
            c = int(coef)
        except ValueError:
            raise VectorParseError(f"bad coefficient in {text!r}")
        e = 0
        if tail:
            e = 1 if tail == "w" else int(tail[2:]) if tail.startswith("w^") else None
            if e is None:
                raise VectorParseError(f"bad power in {text!r}")
        if e >= ring.k:
            raise VectorParseError(f"w^{e} out of range for {ring!r}")
        coeffs[e] += -c if neg else c
    return ring.elem(coeffs)


def parse_vector(text: str, ring, m: int | None = None) -> VmVector:
    m_in, raw = parse_assignments(text)
    if m_in is not None and m is not None and m_in != m:
        raise VectorParseError(f"vector declares m={m_in}, expected m={m}")
    m = m if m is not None else m_in
    if m is None:
        raise VectorParseError("no grading: prefix the vector with m=<m>;")
    if m not in LABELS:
        raise VectorParseError(f"unsupported grading m={m}")
    bad = [l for l in raw if l not in LABELS[m]]
    if bad:
        raise VectorParseError(f"labels {bad} not in V_{m}")
    return vector(m, ring, {l: parse_value(s, ring) for l, s in raw.items()})


def render_value(x) -> str:
    if isinstance(x, FieldElem):
        from .rings import render_field_elem
        return render_field_elem(x)
    if isinstance(x, SparsePoly):
        return x.render()
    return str(x)


def render_vector(v: VmVector) -> str:
    body = ", ".join(f"{l}={render_value(e)}"
                     for l, e in zip(LABELS[v.m], v.entries) if e)
    return f"m={v.m}; {body}" if body else f"m={v.m};"
