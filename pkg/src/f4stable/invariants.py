"""The discriminant catalog and the composite invariants Delta_m.

Everything is exact and works over Z, prime fields, extension fields, and
symbolic polynomial entries.  disc3 and Delta_6 involve exact divisions by
1728 and 16 that only make sense over Z, so in positive characteristic the
computation lifts to Z (or Z[w] over an extension field), divides exactly,
and reduces back; this matches viewing each Delta_m as one fixed polynomial
over Z.  disc3's division is the generic-cubic identity S^3 - T^2 =
1728*disc3, so it may lift its ten inputs directly; Delta_6's division by 16
holds only for quartics built from the ten labels, so delta6 lifts the label
entries and runs the whole chain over the lift.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from . import formulas as fm
from .poly import SparsePoly
from .rings import ZZ, ExtField, FieldElem, PrimeField
from .reps import VmVector


@dataclass(frozen=True)
class TernaryQuadratic:
    """AX^2 + BY^2 + CZ^2 + DXY + EXZ + FYZ."""
    A: object
    B: object
    C: object
    D: object
    E: object
    F: object


@dataclass(frozen=True)
class TernaryCubic:
    """AX^3 + BX^2Y + CX^2Z + DXY^2 + EXYZ + FXZ^2 + GY^3 + HY^2Z + IYZ^2 + JZ^3."""
    A: object
    B: object
    C: object
    D: object
    E: object
    F: object
    G: object
    H: object
    I: object
    J: object


@dataclass(frozen=True)
class BinaryQuartic:
    """AX^4 + BX^3Y + CX^2Y^2 + DXY^3 + EY^4."""
    A: object
    B: object
    C: object
    D: object
    E: object


# ---------------------------------------------------------------------------
# integer lift / reduction for the divided discriminants
# ---------------------------------------------------------------------------

_W = ("w",)


def _fields(obj):
    return [getattr(obj, f.name) for f in fields(obj)]


def _lift(x):
    """Lift to Z, Z[w], or a Z-coefficient polynomial, preserving shape."""
    if isinstance(x, int):
        return x
    if isinstance(x, FieldElem):
        if isinstance(x.ring, PrimeField):
            return x.val
        return SparsePoly(ZZ, _W, {(e,): c for e, c in enumerate(x.val) if c})
    if isinstance(x, SparsePoly):
        if x.ring == ZZ:
            return x
        if isinstance(x.ring, PrimeField):
            return SparsePoly(ZZ, x.vars, {e: c.val for e, c in x.terms.items() if c.val})
        if isinstance(x.ring, ExtField):
            vars2 = x.vars + _W
            terms = {}
            for e, c in x.terms.items():
                for we, cw in enumerate(c.val):
                    if cw:
                        terms[e + (we,)] = cw
            return SparsePoly(ZZ, vars2, terms)
    raise TypeError(f"cannot lift {x!r}")


def _lower(x, like):
    """Reduce a lifted result back into the ring of the sample value."""
    if isinstance(like, int):
        return x
    if isinstance(like, FieldElem):
        ring = like.ring
        if isinstance(ring, PrimeField):
            return ring.from_int(x)
        acc = ring.from_int(0)
        gen = ring.gen()
        if isinstance(x, int):
            return ring.from_int(x)
        for (e,), c in x.terms.items():
            acc = acc + gen ** e * (c % ring.p)
        return acc
    if isinstance(like, SparsePoly):
        ring = like.ring
        if ring == ZZ:
            return x
        if isinstance(ring, PrimeField):
            terms = {}
            for e, c in x.terms.items():
                cv = ring.from_int(c)
                if cv:
                    terms[e] = cv
            return SparsePoly(ring, like.vars, terms)
        if isinstance(ring, ExtField):
            gen = ring.gen()
            terms = {}
            for e, c in x.terms.items():
                base, we = e[:-1], e[-1]
                cv = gen ** we * (c % ring.p)
                if not cv:
                    continue
                acc = terms.get(base)
                acc = cv if acc is None else acc + cv
                if acc:
                    terms[base] = acc
                elif base in terms:
                    del terms[base]
            return SparsePoly(ring, like.vars, terms)
    raise TypeError(f"cannot lower into {like!r}")


def _exact_div(x, c: int):
    if isinstance(x, SparsePoly):
        return x.exact_div_int(c)
    q, r = divmod(x, c)
    if r:
        raise ValueError(f"{x} not divisible by {c}")
    return q


def _zero_like(values):
    for v in values:
        if isinstance(v, FieldElem):
            return v.ring.from_int(0)
        if isinstance(v, SparsePoly):
            return SparsePoly.zero(v.ring, v.vars)
    return 0


def _needs_lift(values):
    return any(isinstance(v, FieldElem)
               or (isinstance(v, SparsePoly) and v.ring != ZZ)
               for v in values)


# ---------------------------------------------------------------------------
# the discriminant catalog
# ---------------------------------------------------------------------------


def disc2_ternary(q: TernaryQuadratic):
    """4ABC + DEF - AF^2 - BE^2 - CD^2, exactly, in the inputs' ring."""
    vals = _fields(q)
    return fm.eval_table(fm.DISC2_TERNARY, vals, _zero_like(vals))


def disc4_binary(q: BinaryQuartic):
    """The 16-term binary-quartic discriminant, in the inputs' ring."""
    vals = _fields(q)
    return fm.eval_table(fm.DISC4_BINARY, vals, _zero_like(vals))


def disc3_ternary(c: TernaryCubic):
    """(S^3 - T^2)/1728 via integer lift, well-defined in every characteristic."""
    vals = _fields(c)
    sample = vals[0]
    lifted = [_lift(v) for v in vals] if _needs_lift(vals) else vals
    zero = _zero_like(lifted)
    S = fm.eval_table(fm.S_TERNARY_CUBIC, lifted, zero)
    T = fm.eval_table(fm.T_TERNARY_CUBIC, lifted, zero)
    num = S ** 3 - T ** 2
    try:
        disc = _exact_div(num, 1728)
    except ValueError as exc:  # impossible per the generic identity
        raise AssertionError(f"S^3 - T^2 not divisible by 1728: {exc}") from exc
    return _lower(disc, sample) if lifted is not vals else disc


# ---------------------------------------------------------------------------
# the invariants Delta_m
# ---------------------------------------------------------------------------


def _require(v: VmVector, m: int):
    if v.m != m:
        raise ValueError(f"vector lives in V_{v.m}, expected V_{m}")


def delta3(v: VmVector):
    """disc3 of the ternary cubic disc2_(T,U,W)(v)."""
    _require(v, 3)
    vals = list(v.entries)
    zero = _zero_like(vals)
    coeffs = [fm.eval_table(t, vals, zero) for t in fm.M3_CUBIC_COEFFS]
    return disc3_ternary(TernaryCubic(*coeffs))


def delta4(v: VmVector):
    """disc4 of (mU + nW) * disc2_(X,Y,Z)(F_v)."""
    _require(v, 4)
    vals = list(v.entries)
    zero = _zero_like(vals)
    coeffs = [fm.eval_table(t, vals, zero) for t in fm.M4_QUARTIC_COEFFS]
    return disc4_binary(BinaryQuartic(*coeffs))


def delta6(v: VmVector):
    """disc4_(X,Y)(F1*F2)/16, computed over an integer lift of the labels.

    The 16-divisibility is a property of quartics arising from the ten
    labels, so the lift must happen before the betas, not after.
    """
    _require(v, 6)
    vals = list(v.entries)
    sample = vals[0]
    lifted = [_lift(x) for x in vals] if _needs_lift(vals) else vals
    zero = _zero_like(lifted)
    b1, b2, b3, b4, b5, b6 = (fm.eval_table(t, lifted, zero) for t in fm.M6_BETAS)
    quartic = BinaryQuartic(b1 * b5, b1 * b6 + b2 * b5, b2 * b6 + b3 * b5,
                            b3 * b6 + b4 * b5, b4 * b6)
    disc = disc4_binary(quartic)
    try:
        result = _exact_div(disc, 16)
    except ValueError as exc:
        raise AssertionError(f"disc4(F1*F2) not divisible by 16: {exc}") from exc
    return _lower(result, sample) if lifted is not vals else result


def delta6_quartic(v: VmVector) -> BinaryQuartic:
    """The quartic F1*F2 attached to v in v's own ring (helper for tests)."""
    _require(v, 6)
    vals = list(v.entries)
    zero = _zero_like(vals)
    b1, b2, b3, b4, b5, b6 = (fm.eval_table(t, vals, zero) for t in fm.M6_BETAS)
    return BinaryQuartic(b1 * b5, b1 * b6 + b2 * b5, b2 * b6 + b3 * b5,
                         b3 * b6 + b4 * b5, b4 * b6)


def delta8(v: VmVector):
    """(f^2 g (b^2 - 4ac)(cd^2 - bde + ae^2))^2, the closed form."""
    _require(v, 8)
    vals = list(v.entries)
    inner = fm.eval_table(fm.M8_INNER, vals, _zero_like(vals))
    return inner * inner


def delta12(v: VmVector):
    """Product of the five coordinates."""
    _require(v, 12)
    acc = None
    for e in v.entries:
        acc = e if acc is None else acc * e
    return acc


DELTAS = {3: delta3, 4: delta4, 6: delta6, 8: delta8, 12: delta12}

DELTA_DEGREES = {3: 36, 4: 24, 6: 36, 8: 16, 12: 5}


def delta(v: VmVector):
    """Delta_m(v) for whichever m the vector lives in."""
    return DELTAS[v.m](v)
