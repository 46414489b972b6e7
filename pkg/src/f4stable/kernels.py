"""Backend selection for the hot Delta kernels.

`from f4stable import _kernels` picks up the compiled extension when the
package was built with Cython and the pure-Python module otherwise (both
come from the same source file).  `load_pure_backend()` always loads the
uncompiled version, for cross-checking and benchmarks.
"""

from __future__ import annotations

import importlib.util
import pathlib

from . import _kernels

BACKEND = "compiled" if _kernels.COMPILED else "pure"
P_LIMIT = _kernels.P_LIMIT

DIMS = dict(_kernels.DIMS)


def load_pure_backend():
    """The pure-Python kernel module, regardless of what is installed."""
    path = pathlib.Path(__file__).with_name("_kernels.py")
    spec = importlib.util.spec_from_file_location("f4stable._kernels_pure", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert not mod.COMPILED
    return mod


def kernel_supports(p: int) -> bool:
    return 2 <= p <= P_LIMIT


def delta_mod(m: int, coeffs, p: int) -> int:
    """Delta_m of canonical residues mod p, as an integer in [0, p)."""
    if m not in DIMS:
        raise ValueError(f"unsupported grading m={m}")
    if not kernel_supports(p):
        raise ValueError(f"prime {p} outside kernel range; use the generic path")
    if len(coeffs) != DIMS[m]:
        raise ValueError(f"need {DIMS[m]} coefficients for m={m}")
    return _kernels.KERNEL_FNS[m](tuple(coeffs), p)


def index_to_coeffs(m: int, index: int, p: int) -> tuple:
    """Base-p digits of the sweep index, first label most significant."""
    dim = DIMS[m]
    out = [0] * dim
    for i in range(dim - 1, -1, -1):
        out[i] = index % p
        index //= p
    return tuple(out)


def coeffs_to_index(m: int, coeffs, p: int) -> int:
    n = 0
    for c in coeffs:
        n = n * p + int(c)
    return n


def sweep(m: int, p: int, start: int = 0, stop: int | None = None,
          collect_zeros: bool = False, want_hist: bool = False):
    """Exhaustive Delta_m scan over V_m(F_p) indices [start, stop).

    Returns (stable_count, first_stable_index or None, zero_indices or None,
    histogram or None).  Deterministic order: index n is the vector of
    base-p digits of n.
    """
    if not kernel_supports(p):
        raise ValueError(f"prime {p} outside kernel range")
    total = p ** DIMS[m]
    stop = total if stop is None else stop
    if not (0 <= start <= stop <= total):
        raise ValueError(f"bad index range [{start}, {stop}) for size {total}")
    stable, first, zeros, hist = _kernels.sweep(
        m, p, start, stop, collect_zeros, want_hist)
    return stable, (None if first < 0 else first), zeros, hist
