"""Stability deciders and constructive instability witnesses.

A vector over a finite field is stable iff Delta_m is nonzero there
(nonvanishing in F_q certifies nonvanishing over the algebraic closure).
For unstable vectors, destabilize() follows the reduction moves of the
classification proofs: it locates repeated roots / singular points over a
bounded extension, moves them to coordinate positions with explicit SL
words, and emits a cocharacter under which the transformed vector has no
negative weights.  Every witness is re-checked mechanically before being
returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import formulas as fm
from .invariants import delta, delta6_quartic
from .kernels import delta_mod, kernel_supports
from .poly import SparsePoly
from .reps import (LABELS, Unipotent, VmVector, act_word, dual_cyclic,
                   entries_ring, vector)
from .rings import (ExtField, FieldElem, PrimeField, extension_of,
                    field_sqrt_char2)
from .rootsys import Cocharacter, cochar, cochar_weights


class ReductionFailed(RuntimeError):
    """destabilize could not finish within the allowed extension degree."""


class DeltaNonzero(ValueError):
    """destabilize was handed a stable vector."""


@dataclass(frozen=True)
class Witness:
    word: tuple          # Unipotent generators over `field`
    lam: Cocharacter
    ext_degree: int      # degree of `field` over the vector's base field
    field: object        # the finite field the word lives in


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    delta_value: object
    witness: Witness | None = None


def _field_of(v: VmVector):
    ring = entries_ring(v)
    if not getattr(ring, "is_field", lambda: False)() or ring.char == 0:
        raise ValueError("stability deciders need entries in a finite field")
    return ring


def is_stable(v: VmVector) -> StabilityVerdict:
    """Verdict by Delta_m evaluation in the vector's own field."""
    F = _field_of(v)
    if isinstance(F, PrimeField) and kernel_supports(F.p):
        val = F.from_int(delta_mod(v.m, [e.val for e in v.entries], F.p))
    else:
        val = delta(v)
    return StabilityVerdict(bool(val), val)


# ---------------------------------------------------------------------------
# Hilbert-Mumford weight tests
# ---------------------------------------------------------------------------


def no_negative_weights(v: VmVector, lam: Cocharacter) -> bool:
    """True iff every label with nonzero coefficient has weight >= 0."""
    weights = cochar_weights(v.m, lam)
    return all(w >= 0 for w, e in zip(weights, v.entries) if e)


@lru_cache(maxsize=None)
def _mask_scan(m: int, box: int):
    """Deduplicated (negative-label mask, s) pairs in lex scan order."""
    seen = {}
    order = []
    for s in product(range(-box, box + 1), repeat=4):
        if s == (0, 0, 0, 0):
            continue
        ws = cochar_weights(m, cochar(m, s))
        mask = 0
        for i, w in enumerate(ws):
            if w < 0:
                mask |= 1 << i
        if mask not in seen:
            seen[mask] = s
            order.append((mask, s))
    return tuple(order)


def _support_mask(v: VmVector) -> int:
    mask = 0
    for i, e in enumerate(v.entries):
        if e:
            mask |= 1 << i
    return mask


def hm_search(v: VmVector, box: int):
    """Lex-first nontrivial cocharacter in the box with no negative weights
    on v's support, or None."""
    if box < 1:
        raise ValueError("box must be >= 1")
    support = _support_mask(v)
    for mask, s in _mask_scan(v.m, box):
        if mask & support == 0:
            return cochar(v.m, s)
    return None


def verify_witness(v: VmVector, w: Witness) -> bool:
    """Mechanical check: lam nontrivial and act(word, v) has no negative
    weights under lam (v lifted into the witness field first)."""
    if w.lam.is_trivial():
        return False
    F = _field_of(v)
    if w.ext_degree == 1:
        vk = v
    else:
        K, emb = extension_of(F, w.ext_degree)
        if K != w.field:
            raise ValueError(f"witness field {w.field} is not the degree-"
                             f"{w.ext_degree} extension of {F}")
        vk = VmVector(v.m, tuple(emb(e) for e in v.entries))
    return no_negative_weights(act_word(w.word, vk), w.lam)


# ---------------------------------------------------------------------------
# small exact linear algebra over a field
# ---------------------------------------------------------------------------


def _mat_mul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)),
                 start=A[0][0].ring.from_int(0)) for j in range(n)]
            for i in range(n)]


def _identity(n, K):
    return [[K.from_int(1 if i == j else 0) for j in range(n)] for i in range(n)]


def elementary_word(m: int, block, M, K):
    """Factor an SL matrix into Unipotent generators for the given block.

    M is the variable-substitution matrix (var_i -> sum_j M[i][j] var_j);
    the returned word applies the same substitution via act_word.
    """
    n = len(block)
    A = [row[:] for row in M]
    ops = []

    def rowop(dst, src, x):
        # record E = I + x e_{dst,src} and set A := E^{-1} A
        if not x:
            return
        for j in range(n):
            A[dst][j] = A[dst][j] - x * A[src][j]
        ops.append((dst, src, x))

    # forward: upper triangular (pivot fill-ins only use rows below, so the
    # zeros already produced in earlier columns survive)
    for col in range(n):
        if not A[col][col]:
            pivot = next((r for r in range(col + 1, n) if A[r][col]), None)
            if pivot is None:
                raise ValueError("singular matrix")
            rowop(col, pivot, K.from_int(-1))
        for r in range(col + 1, n):
            if A[r][col]:
                rowop(r, col, A[r][col] / A[col][col])
    # backward: clear above the diagonal, last column first
    for col in range(n - 1, 0, -1):
        for r in range(col - 1, -1, -1):
            if A[r][col]:
                rowop(r, col, A[r][col] / A[col][col])
    # A is diagonal with det 1; clear it with 2x2 Whitehead blocks:
    # diag(u, 1/u) = U(u) L(-1/u) U(u) U(-1) L(1) U(-1) on rows (i, i+1)
    one = K.from_int(1)
    for i in range(n - 1):
        u = A[i][i]
        if u == one:
            continue
        for dst, src, x in ((i, i + 1, u), (i + 1, i, -(u.inverse())),
                            (i, i + 1, u), (i, i + 1, -one),
                            (i + 1, i, one), (i, i + 1, -one)):
            rowop(dst, src, x)
    if A != _identity(n, K):
        raise AssertionError("elementary factorization failed")
    word = tuple(Unipotent(m, block[src], block[dst], x) for dst, src, x in ops)
    # reconstruct and re-check the factorization
    check = _identity(n, K)
    for dst, src, x in ops:
        E = _identity(n, K)
        E[dst][src] = x
        check = _mat_mul(check, E)
    if check != [row[:] for row in M]:
        raise AssertionError("elementary word does not reproduce the matrix")
    return word


def _complete_col(pt, K, which):
    """2x2 SL matrix whose column `which` (0 or 1) is pt."""
    x0, y0 = pt
    one = K.from_int(1)
    zero = K.from_int(0)
    if which == 0:
        if x0:
            return [[x0, zero], [y0, x0.inverse()]]
        return [[x0, -(y0.inverse())], [y0, zero]]
    if y0:
        return [[y0.inverse(), x0], [zero, y0]]
    return [[zero, x0], [-(x0.inverse()), y0]]


def _det3(M):
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _complete_col3(pt, K):
    """3x3 SL matrix with first column pt (nonzero)."""
    zero, one = K.from_int(0), K.from_int(1)
    i = next(i for i in range(3) if pt[i])
    others = [j for j in range(3) if j != i]
    cols = [list(pt)]
    for j in others:
        cols.append([one if r == j else zero for r in range(3)])
    M = [[cols[c][r] for c in range(3)] for r in range(3)]
    d = _det3(M)
    dinv = d.inverse()
    for r in range(3):
        M[r][1] = M[r][1] * dinv
    assert _det3(M) == one
    return M


def _kernel_vector(rows, K):
    """A nonzero kernel vector of a singular square matrix, deterministic."""
    n = len(rows)
    A = [row[:] for row in rows]
    pivots = []  # (row, col)
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, n) if A[i][col]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = A[r][col].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and A[i][col]:
                c = A[i][col]
                A[i] = [x - c * y for x, y in zip(A[i], A[r])]
        pivots.append((r, col))
        r += 1
    pivot_cols = {c for _, c in pivots}
    free = next((c for c in range(n) if c not in pivot_cols), None)
    if free is None:
        raise ValueError("matrix is invertible")
    vec = [K.from_int(0)] * n
    vec[free] = K.from_int(1)
    for row, col in pivots:
        vec[col] = -A[row][free]
    return vec


# ---------------------------------------------------------------------------
# root and singular-point searches (exhaustive, desk scale)
# ---------------------------------------------------------------------------


def _projective_points_2(K):
    for x in K.elements():
        yield (x, K.from_int(1))
    yield (K.from_int(1), K.from_int(0))


def _binary_multiplicity(coeffs, pt, K):
    """Multiplicity of the projective zero pt in the binary form with the
    given X-descending coefficients."""
    d = len(coeffs) - 1
    x0, y0 = pt
    if not y0:
        mult = 0
        for c in coeffs:
            if c:
                break
            mult += 1
        return mult
    t0 = x0 / y0
    poly = list(reversed(coeffs))  # poly[i] = coeff of t^i with t = X/Y
    mult = 0
    while any(poly):
        rem = K.from_int(0)
        quot = [K.from_int(0)] * (len(poly) - 1)
        for i in range(len(poly) - 1, -1, -1):
            rem = rem * t0 + poly[i]
            if i:
                quot[i - 1] = rem
        if rem:
            break
        mult += 1
        poly = quot
    return mult


def _repeated_root_binary(coeffs, base, max_ext):
    """(point, K, embed, e) for a multiplicity->=2 zero over ext degree <= max_ext."""
    for e in range(1, max_ext + 1):
        K, emb = extension_of(base, e)
        cs = [emb(c) for c in coeffs]
        for pt in _projective_points_2(K):
            if _binary_multiplicity(cs, pt, K) >= 2:
                return pt, K, emb, e
    return None


def _conic_value(q, P):
    A, B, C, D, E, F = q
    x, y, z = P
    return (A * x * x + B * y * y + C * z * z + D * x * y + E * x * z + F * y * z)


def _conic_polar_matrix(q):
    A, B, C, D, E, F = q
    two = A.ring.from_int(2)
    return [[two * A, D, E], [D, two * B, F], [E, F, two * C]]


def _radical_point_conic(q, K):
    """P with q(P) = 0 and polar(P, .) = 0, for a ternary quadratic with
    disc2 = 0.  Rational over K in every characteristic."""
    A, B, C, D, E, F = q
    if K.char != 2:
        P = _kernel_vector(_conic_polar_matrix(q), K)
    else:
        if D or E or F:
            P = [F, E, D]
        else:
            sa, sb, sc = (field_sqrt_char2(x) for x in (A, B, C))
            if sa or sb:
                P = [sb, sa, K.from_int(0)]
            elif sc:
                P = [K.from_int(1), K.from_int(0), K.from_int(0)]
            else:
                P = [K.from_int(1), K.from_int(0), K.from_int(0)]
    assert not _conic_value(q, P), "radical point does not lie on the conic"
    M = _conic_polar_matrix(q)
    for row in M:
        assert not sum((rc * pc for rc, pc in zip(row, P)),
                       start=K.from_int(0)), "point not in the polar radical"
    return P


def _cubic_partials(c):
    """Value and gradient coefficient tables of the ternary cubic frame."""
    A, B, C, D, E, F, G, H, I, J = c

    def val(P):
        x, y, z = P
        return (A * x**3 + B * x**2 * y + C * x**2 * z + D * x * y**2
                + E * x * y * z + F * x * z**2 + G * y**3 + H * y**2 * z
                + I * y * z**2 + J * z**3)

    def grad(P):
        x, y, z = P
        gx = (3 * (A * x * x) + 2 * (B * x * y) + 2 * (C * x * z)
              + D * y * y + E * y * z + F * z * z)
        gy = (B * x * x + 2 * (D * x * y) + E * x * z + 3 * (G * y * y)
              + 2 * (H * y * z) + I * z * z)
        gz = (C * x * x + E * x * y + 2 * (F * x * z) + H * y * y
              + 2 * (I * y * z) + 3 * (J * z * z))
        return gx, gy, gz

    return val, grad


def _projective_points_3(K):
    one = K.from_int(1)
    zero = K.from_int(0)
    for y in K.elements():
        for z in K.elements():
            yield (one, y, z)
    for z in K.elements():
        yield (zero, one, z)
    yield (zero, zero, one)


def _singular_point_cubic(coeffs, base, max_ext):
    """A point with value and full gradient zero, over ext degree <= max_ext.

    The value condition is part of the definition (in characteristic 3 it
    is not implied by the vanishing of the partials).
    """
    for e in range(1, max_ext + 1):
        K, emb = extension_of(base, e)
        cs = [emb(c) for c in coeffs]
        val, grad = _cubic_partials(cs)
        for P in _projective_points_3(K):
            if not val(P) and not any(grad(P)):
                return P, K, emb, e
    return None


# ---------------------------------------------------------------------------
# destabilization
# ---------------------------------------------------------------------------


def destabilize(v: VmVector, max_ext: int = 4) -> Witness:
    """A verified instability witness for a vector with Delta_m(v) = 0."""
    F = _field_of(v)
    if is_stable(v).stable:
        raise DeltaNonzero(f"Delta_{v.m}(v) != 0: v is stable")
    if not any(v.entries):
        lam = hm_search(v, 1)
        w = Witness((), lam, 1, F)
    else:
        reducer = {3: _destab3, 4: _destab4, 6: _destab6, 8: _destab8,
                   12: _destab12}[v.m]
        word, lam, K, ext = reducer(v, F, max_ext)
        w = Witness(tuple(word), lam, ext, K)
    if not verify_witness(v, w):
        raise AssertionError("internal error: witness failed verification")
    return w


def _embed_vm(v, emb):
    return VmVector(v.m, tuple(emb(e) for e in v.entries))


def _need_ext(e, max_ext, what):
    if e is None:
        raise ReductionFailed(
            f"no {what} found within extension degree {max_ext}; "
            f"raise max_ext")


def _destab12(v, F, max_ext):
    zeros = [l for l, e in zip(LABELS[12], v.entries) if not e]
    lead = zeros[0]
    if lead == "c5":
        lam = cochar(12, (-1, 0, 0, 0))
    else:
        s = [0, 0, 0, 0]
        s[int(lead[1]) - 1] = 1
        lam = cochar(12, tuple(s))
    return (), lam, F, 1


def _destab8(v, F, max_ext):
    a, b, c, d, e, f, g = v.entries
    if not g:
        return (), cochar(8, (-1, 0, 0, 0)), F, 1
    if not f:
        return (), cochar(8, (1, 0, 0, 0)), F, 1
    disc_f1 = b * b - 4 * (a * c)
    if not disc_f1:
        word = ()
        if a or b or c:
            found = _repeated_root_binary([a, b, c], F, 1)
            _need_ext(found, 1, "repeated root of the quadratic part")
            pt, K, emb, _ = found
            M = _complete_col(pt, K, 0)
            word = elementary_word(8, ("X", "Y"), M, K)
        return word, cochar(8, (0, 2, -1, 0)), F, 1
    if not d and not e:
        return (), cochar(8, (0, 0, 0, 1)), F, 1
    # the linear part divides the quadratic part; move its zero to [1:0]
    M = _complete_col((e, -d), F, 0)
    word = elementary_word(8, ("X", "Y"), M, F)
    return word, cochar(8, (0, 1, -1, 1)), F, 1


def _destab4(v, F, max_ext):
    word = []
    K, ext = F, 1
    vk = v
    quart = [fm.eval_table(t, list(vk.entries), K.from_int(0))
             for t in fm.M4_QUARTIC_COEFFS]
    if any(quart):
        found = _repeated_root_binary(quart, F, min(2, max_ext))
        _need_ext(found, min(2, max_ext), "repeated root of the (U,W) quartic")
        pt, K, emb, ext = found
        if ext > 1:
            vk = _embed_vm(vk, emb)
        M = _complete_col(pt, K, 0)
        step = elementary_word(4, ("U", "W"), M, K)
        word += step
        vk = act_word(step, vk)
        quart = [fm.eval_table(t, list(vk.entries), K.from_int(0))
                 for t in fm.M4_QUARTIC_COEFFS]
    assert not quart[0] and not quart[1], "U^4 and U^3 W coefficients survive"
    f1 = [vk.entry(l) for l in "acegik"]  # U-part as X2,Y2,Z2,XY,XZ,YZ
    d1 = fm.eval_table(fm.DISC2_TERNARY, f1, K.from_int(0))
    if d1:
        assert not vk.entry("m") and not vk.entry("n")
        return word, cochar(4, (-1, 0, 0, 0)), K, ext
    P = _radical_point_conic(f1, K)
    M3 = _complete_col3(P, K)
    step = elementary_word(4, ("X", "Y", "Z"), M3, K)
    word += step
    vk = act_word(step, vk)
    assert not vk.entry("a") and not vk.entry("g") and not vk.entry("i")
    if not vk.entry("b"):
        return word, cochar(4, (-1, 2, -1, 0)), K, ext
    if not vk.entry("m"):
        return word, cochar(4, (-2, 2, -1, 0)), K, ext
    cc, kk, ee = vk.entry("c"), vk.entry("k"), vk.entry("e")
    assert not (4 * (cc * ee) - kk * kk), "4ce - k^2 must vanish here"
    if cc or kk or ee:
        found = _repeated_root_binary([cc, kk, ee], K, 1)
        _need_ext(found, 1, "repeated root of the (Y,Z) quadratic")
        pt, _, _, _ = found
        M = _complete_col(pt, K, 0)
        step = elementary_word(4, ("Y", "Z"), M, K)
        word += step
        vk = act_word(step, vk)
    assert not vk.entry("c") and not vk.entry("k")
    return word, cochar(4, (-2, 2, 0, -1)), K, ext


def _m6_betas(vk, K):
    return [fm.eval_table(t, list(vk.entries), K.from_int(0)) for t in fm.M6_BETAS]


def _destab6(v, F, max_ext):
    if F.char == 2:
        return _destab6_char2(v, F, max_ext)
    word = []
    K, ext = F, 1
    vk = v
    q = delta6_quartic(vk)
    quart = [q.A, q.B, q.C, q.D, q.E]
    if any(quart):
        found = _repeated_root_binary(quart, F, min(2, max_ext))
        _need_ext(found, max_ext, "repeated root of F1*F2")
        pt, K, emb, ext = found
        if ext > 1:
            vk = _embed_vm(vk, emb)
        M = _complete_col(pt, K, 1)  # send [0:1] to the double root
        step = elementary_word(6, ("X", "Y"), M, K)
        word += step
        vk = act_word(step, vk)
    b1, b2, b3, b4, b5, b6 = _m6_betas(vk, K)
    assert not b4 * b6 and not (b3 * b6 + b4 * b5), \
        "Y^4 and XY^3 coefficients of F1*F2 survive"
    bb, kk, ee = vk.entry("b"), vk.entry("k"), vk.entry("e")
    if not (kk * kk - 4 * (bb * ee)):
        if bb or kk or ee:
            found = _repeated_root_binary([bb, kk, ee], K, 1)
            _need_ext(found, 1, "repeated root of the Y-slot quadratic")
            pt, _, _, _ = found
            M = _complete_col(pt, K, 1)
            step = elementary_word(6, ("T", "U"), M, K)
            word += step
            vk = act_word(step, vk)
        assert not vk.entry("e") and not vk.entry("k")
        if not vk.entry("b"):
            return word, cochar(6, (1, 0, 0, 0)), K, ext
        if not vk.entry("d"):
            return word, cochar(6, (1, -1, 1, -1)), K, ext
        if not vk.entry("h"):
            return word, cochar(6, (2, -2, 1, -1)), K, ext
        assert not vk.entry("r"), "beta3*beta6 = -4 b^2 d h r^2 must vanish"
        return word, cochar(6, (2, -2, 1, 0)), K, ext
    b1, b2, b3, b4, b5, b6 = _m6_betas(vk, K)
    if b6:
        assert not vk.entry("g") and not vk.entry("h")
        return word, cochar(6, (-1, 0, 0, 0)), K, ext
    oo, rr = vk.entry("o"), vk.entry("r")
    if not oo and not rr:
        return word, cochar(6, (0, 0, 0, 1)), K, ext
    M = _complete_col((rr, -oo), K, 1)  # zero of oT + rU to [0:1]
    step = elementary_word(6, ("T", "U"), M, K)
    word += step
    vk = act_word(step, vk)
    assert not vk.entry("r") and vk.entry("o")
    assert not vk.entry("e"), "beta6 = -e o^2 must vanish with o nonzero"
    if not vk.entry("d"):
        return word, cochar(6, (0, -1, 1, 0)), K, ext
    assert not vk.entry("h"), "beta4*beta5 = h k^2 d o^2 must vanish"
    return word, cochar(6, (1, -2, 1, 0)), K, ext


def _destab6_char2(v, F, max_ext):
    word = []
    vk = v
    gg, hh = vk.entry("g"), vk.entry("h")
    if not gg and not hh:
        return word, cochar(6, (-1, 0, 0, 0)), F, 1
    if hh:
        M = _complete_col((hh, gg), F, 1)  # char 2: (h, -g) = (h, g)
        step = elementary_word(6, ("X", "Y"), M, F)
        word += step
        vk = act_word(step, vk)
        assert not vk.entry("h")
    oo, rr = vk.entry("o"), vk.entry("r")
    if not oo and not rr:
        return word, cochar(6, (0, 0, 0, 1)), F, 1
    if rr:
        M = _complete_col((rr, oo), F, 1)
        step = elementary_word(6, ("T", "U"), M, F)
        word += step
        vk = act_word(step, vk)
        assert not vk.entry("r")
    if not vk.entry("o"):
        return word, cochar(6, (0, 0, 0, 1)), F, 1
    if not vk.entry("e"):
        return word, cochar(6, (1, -2, 1, 0)), F, 1
    if not vk.entry("g"):
        return word, cochar(6, (-1, 0, 0, 0)), F, 1
    # e, g, o all nonzero now; h = r = 0
    ee, kk = vk.entry("e"), vk.entry("k")
    if not kk:
        x = field_sqrt_char2(vk.entry("b") / ee)
        step = (Unipotent(6, "T", "U", x),)
        word += step
        vk = act_word(step, vk)
        assert not vk.entry("b") and not vk.entry("k")
        return word, cochar(6, (2, 0, -1, 0)), F, 1
    jj, dd = vk.entry("j"), vk.entry("d")
    w0 = (Unipotent(6, "X", "Y", jj / kk),)
    if ee * jj + dd * kk == 0:
        word += w0
        vk = act_word(w0, vk)
        assert not vk.entry("d") and not vk.entry("j")
        return word, cochar(6, (-2, 0, 1, 0)), F, 1
    word += w0
    vk = act_word(w0, vk)
    assert not vk.entry("j") and vk.entry("d")
    y = field_sqrt_char2(vk.entry("a") / vk.entry("d"))
    z1 = (Unipotent(6, "T", "U", y),)
    word += z1
    vk = act_word(z1, vk)
    assert not vk.entry("a")
    assert not vk.entry("b"), "Delta_6 = 0 forces b = 0 after the moves"
    return word, cochar(6, (-1, 2, -1, 0)), F, 1


def _destab3(v, F, max_ext):
    word = []
    K, ext = F, 1
    vk = v
    cubic = [fm.eval_table(t, list(vk.entries), K.from_int(0))
             for t in fm.M3_CUBIC_COEFFS]
    if any(cubic):
        found = _singular_point_cubic(cubic, F, max_ext)
        _need_ext(found, max_ext, "singular point of the (X,Y,Z) cubic")
        P, K, emb, ext = found
        if ext > 1:
            vk = _embed_vm(vk, emb)
        M3 = _complete_col3(P, K)
        step = elementary_word(3, ("X", "Y", "Z"), M3, K)
        word += step
        vk = act_word(step, vk)
    cubic = [fm.eval_table(t, list(vk.entries), K.from_int(0))
             for t in fm.M3_CUBIC_COEFFS]
    assert not any(cubic[:3]), "X^3, X^2Y, X^2Z coefficients survive"
    fx = [vk.entry(l) for l in "adgjmp"]  # X-slot conic in T2,U2,W2,TU,TW,UW
    assert not fm.eval_table(fm.DISC2_TERNARY, fx, K.from_int(0))
    P = _radical_point_conic(fx, K)
    M3 = _complete_col3(P, K)
    step = elementary_word(3, ("T", "U", "W"), M3, K)
    word += step
    vk = act_word(step, vk)
    assert not vk.entry("a") and not vk.entry("j") and not vk.entry("m")
    dd, gg, pp = vk.entry("d"), vk.entry("g"), vk.entry("p")
    if 4 * (dd * gg) - pp * pp:
        assert not vk.entry("b") and not vk.entry("c")
        return word, cochar(3, (-2, 1, -2, 1)), K, ext
    if dd or pp or gg:
        found = _repeated_root_binary([dd, pp, gg], K, 1)
        _need_ext(found, 1, "repeated root of the (U,W) quadratic")
        pt, _, _, _ = found
        M = _complete_col(pt, K, 1)  # make the form a multiple of U^2
        step = elementary_word(3, ("U", "W"), M, K)
        word += step
        vk = act_word(step, vk)
    assert not vk.entry("p") and not vk.entry("g")
    assert not vk.entry("a") and not vk.entry("j") and not vk.entry("m")
    return word, cochar(3, (-4, 2, -1, 2)), K, ext


# ---------------------------------------------------------------------------
# the embedding conjecture table
# ---------------------------------------------------------------------------

COXETER_NUMBER = 12


def check_conjecture(m: int, p: int) -> bool:
    """Dual cyclic all-ones over F_p is stable iff p does not divide 12/m."""
    if m not in (3, 4, 6):
        raise ValueError("the table covers m in {3, 4, 6}")
    F = PrimeField(p)
    v = dual_cyclic(m, [F.from_int(1)] * 5)
    expected = (COXETER_NUMBER // m) % p != 0
    return is_stable(v).stable == expected
