"""The F4 root system, its gradings at rho-check/m, and cocharacter weights.

Simple roots are numbered along the diagram "a1 a2 => a3 a4" (a1, a2 long),
and every root is a 4-vector of integer coordinates in the simple-root
basis.  The root set is generated once by reflection closure from the
Cartan matrix and frozen.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

# Cartan matrix, CARTAN[i][j] = <alpha_i, alphacheck_j>
CARTAN = ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))

HIGHEST_ROOT = (2, 3, 4, 2)

# marks of the affine diagram, node 0 first
AFFINE_MARKS = (1, 2, 3, 4, 2)

GRADINGS = (3, 4, 6, 8, 12)


@dataclass(frozen=True)
class Root:
    coords: tuple

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self):
        return Root(tuple(-c for c in self.coords))

    def pairing(self, s) -> int:
        """alpha(lambda) for lambda = sum s_i omegacheck_i."""
        return sum(c * si for c, si in zip(self.coords, s))


def _coroot_pairing(coords, j):
    return sum(c * CARTAN[i][j] for i, c in enumerate(coords))


def _reflect(coords, j):
    out = list(coords)
    out[j] -= _coroot_pairing(coords, j)
    return tuple(out)


@lru_cache(maxsize=1)
def generate_roots() -> frozenset:
    """All 48 roots of F4: reflection closure of the simple roots."""
    simples = [tuple(1 if i == j else 0 for i in range(4)) for j in range(4)]
    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for r in frontier:
            for j in range(4):
                s = _reflect(r, j)
                if s not in roots:
                    new.add(s)
        roots |= new
        frontier = new
    roots |= {tuple(-c for c in r) for r in roots}
    return frozenset(Root(r) for r in roots)


# ---------------------------------------------------------------------------
# gradings
# ---------------------------------------------------------------------------

# Root <-> coefficient-label correspondence for the degree-1 pieces, in the
# frozen order of the displayed coefficient vectors.  Derived by matching
# -alpha(lambda) against the shipped weight goldens (re-verified in tests).
_LABEL_ROOTS = {
    4: (
        ("a", (0, 1, 0, 0)), ("b", (1, 1, 0, 0)), ("c", (0, 1, 2, 0)),
        ("d", (1, 1, 2, 0)), ("e", (0, 1, 2, 2)), ("f", (1, 1, 2, 2)),
        ("g", (0, 1, 1, 0)), ("h", (1, 1, 1, 0)), ("i", (0, 1, 1, 1)),
        ("j", (1, 1, 1, 1)), ("k", (0, 1, 2, 1)), ("l", (1, 1, 2, 1)),
        ("m", (-2, -3, -4, -2)), ("n", (-1, -3, -4, -2)),
    ),
    6: (
        ("a", (0, 1, 0, 0)), ("b", (1, 1, 0, 0)), ("d", (0, 1, 2, 0)),
        ("e", (1, 1, 2, 0)), ("g", (-2, -3, -4, -2)), ("h", (-1, -3, -4, -2)),
        ("j", (0, 1, 1, 0)), ("k", (1, 1, 1, 0)), ("o", (0, 0, 0, 1)),
        ("r", (0, 0, 1, 1)),
    ),
    8: (
        ("a", (0, 1, 0, 0)), ("b", (0, 1, 1, 0)), ("c", (0, 1, 2, 0)),
        ("d", (0, 0, 0, 1)), ("e", (0, 0, 1, 1)), ("f", (1, 0, 0, 0)),
        ("g", (-2, -3, -4, -2)),
    ),
    12: (
        ("c1", (1, 0, 0, 0)), ("c2", (0, 1, 0, 0)), ("c3", (0, 0, 1, 0)),
        ("c4", (0, 0, 0, 1)), ("c5", (-2, -3, -4, -2)),
    ),
}


def grading_basis(m: int):
    """Roots of height = 1 mod m, ordered to match the coefficient labels.

    The 3-grading has no displayed root<->letter table, so its basis is
    frozen in canonical (height, coords) order.
    """
    if m not in GRADINGS:
        raise ValueError(f"unsupported grading m={m}")
    if m == 3:
        sel = [r for r in generate_roots() if r.height % 3 == 1]
        return tuple(sorted(sel, key=lambda r: (r.height, r.coords)))
    basis = tuple(Root(c) for _, c in _LABEL_ROOTS[m])
    assert all(r.height % m == 1 % m for r in basis)
    return basis


def label_roots(m: int):
    """(label, Root) pairs for the degree-1 basis of the m-grading."""
    if m == 3:
        from .reps import LABELS
        return tuple(zip(LABELS[3], grading_basis(3)))
    return tuple((l, Root(c)) for l, c in _LABEL_ROOTS[m])


# ---------------------------------------------------------------------------
# Kac coordinates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KacPoint:
    m: int
    labels: tuple  # (a0, a1, a2, a3, a4)

    def __post_init__(self):
        if len(self.labels) != 5 or any(a < 0 for a in self.labels):
            raise ValueError("need 5 non-negative labels")
        total = sum(mark * a for mark, a in zip(AFFINE_MARKS, self.labels))
        if total != self.m:
            raise ValueError(
                f"mark identity violated: sum marks*labels = {total} != m = {self.m}")


SHIPPED_KAC_POINTS = {
    3: KacPoint(3, (0, 0, 1, 0, 0)),
    4: KacPoint(4, (1, 0, 1, 0, 0)),
    6: KacPoint(6, (1, 0, 1, 0, 1)),
    8: KacPoint(8, (1, 1, 1, 0, 1)),
}


def kac_grading_dims(k: KacPoint) -> dict:
    """Dimension of each graded piece at y_m; degree 0 includes the torus.

    alpha(y_m) = sum coords(alpha)_i * a_i / m, so the degree of a root
    space is sum coords*a_i mod m.
    """
    if SHIPPED_KAC_POINTS.get(k.m) != k:
        raise ValueError(f"unknown Kac point {k}")
    a = k.labels[1:]
    dims = {j: 0 for j in range(k.m)}
    for r in generate_roots():
        j = sum(c * ai for c, ai in zip(r.coords, a)) % k.m
        dims[j] += 1
    dims[0] += 4
    return dims


# ---------------------------------------------------------------------------
# cocharacters and weights
# ---------------------------------------------------------------------------

OMEGA_FRAME = "omega"  # lambda = s1*w1 + s2*w2 + s3*w3 + s4*w4 (coweights)
DIAG_FRAME = "diag"    # m=3: diagonal torus of SL3 x SL3, parameters s1..s4


@dataclass(frozen=True)
class Cocharacter:
    frame: str
    s: tuple

    def __post_init__(self):
        if self.frame not in (OMEGA_FRAME, DIAG_FRAME):
            raise ValueError(f"unknown frame {self.frame}")
        if len(self.s) != 4:
            raise ValueError("need 4 integer parameters")

    def is_trivial(self):
        return not any(self.s)


def frame_for(m: int) -> str:
    return DIAG_FRAME if m == 3 else OMEGA_FRAME


def cochar(m: int, s) -> Cocharacter:
    return Cocharacter(frame_for(m), tuple(s))


@lru_cache(maxsize=None)
def weight_table(m: int) -> dict:
    """Shipped weight goldens: label -> coefficients of (s1..s4)."""
    if m == 12:
        return {l: tuple(-c for c in coords) for l, coords in _LABEL_ROOTS[12]}
    text = resources.files("f4stable.data").joinpath(f"weights_m{m}.json").read_text()
    return {k: tuple(v) for k, v in json.loads(text).items()}


def cochar_weights(m: int, lam: Cocharacter):
    """One integer weight per basis label of V_m under lam.

    For m in {4,6,8,12} the weight of the dual vector f_alpha is
    -alpha(lam), computed from root coordinates; for m=3 the shipped
    diagonal-torus table is authoritative.
    """
    if lam.frame != frame_for(m):
        raise ValueError(f"cocharacter frame {lam.frame} does not match m={m}")
    if m == 3:
        table = weight_table(3)
        from .reps import LABELS
        return tuple(sum(c * si for c, si in zip(table[l], lam.s)) for l in LABELS[3])
    return tuple(-r.pairing(lam.s) for _, r in label_roots(m))
