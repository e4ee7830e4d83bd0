"""Minimum-weight enumeration kernels: compiled extension with pure fallback."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from ..errors import DimensionTooLargeError
from .. import gf2

MAX_ENUM_RANK = 24

try:  # pragma: no cover - exercised indirectly
    from ._minweight import min_weight_outside as _kernel_impl

    KERNEL_BACKEND = "cython"
except Exception:  # pragma: no cover
    from ._minweight_py import min_weight_outside as _kernel_impl

    KERNEL_BACKEND = "python"

from ._minweight_py import min_weight_outside as _python_impl

__all__ = [
    "KERNEL_BACKEND",
    "MAX_ENUM_RANK",
    "min_weight_outside_span",
    "min_weight_outside_span_python",
]


def _prepare(
    a_rows: Sequence[Tuple[int, int]],
    b_rows: Sequence[Tuple[int, int]],
    n: int,
):
    combined_a = [x | (z << n) for x, z in a_rows]
    basis_a, _ = gf2.rref(combined_a, 2 * n)
    if len(basis_a) > MAX_ENUM_RANK:
        raise DimensionTooLargeError(
            f"span rank {len(basis_a)} exceeds exhaustive bound {MAX_ENUM_RANK}"
        )
    mask = (1 << n) - 1
    ax = [row & mask for row in basis_a]
    az = [row >> n for row in basis_a]
    combined_b = [x | (z << n) for x, z in b_rows]
    basis_b, piv_b = gf2.rref(combined_b, 2 * n)
    bx = [row & mask for row in basis_b]
    bz = [row >> n for row in basis_b]
    return ax, az, bx, bz, piv_b


def min_weight_outside_span(
    a_rows: Sequence[Tuple[int, int]],
    b_rows: Sequence[Tuple[int, int]],
    n: int,
) -> Optional[int]:
    """Minimum weight over span(A) \\ span(B) as (x, z) int-pair rows.

    Weight of a row is |supp(x) u supp(z)|. Returns None (plus-infinity
    sentinel) when the set difference is empty.
    """
    ax, az, bx, bz, piv = _prepare(a_rows, b_rows, n)
    w = _kernel_impl(ax, az, bx, bz, piv, n)
    return None if w < 0 else w


def min_weight_outside_span_python(
    a_rows: Sequence[Tuple[int, int]],
    b_rows: Sequence[Tuple[int, int]],
    n: int,
) -> Optional[int]:
    """Pure-Python counterpart, kept callable for cross-checks/benchmarks."""
    ax, az, bx, bz, piv = _prepare(a_rows, b_rows, n)
    w = _python_impl(ax, az, bx, bz, piv, n)
    return None if w < 0 else w
