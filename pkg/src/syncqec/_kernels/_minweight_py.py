"""Pure-Python Gray-code minimum-weight enumeration kernel."""

from __future__ import annotations

from typing import List, Sequence

__all__ = ["min_weight_outside"]


def min_weight_outside(
    ax: Sequence[int],
    az: Sequence[int],
    bx: Sequence[int],
    bz: Sequence[int],
    bpiv: Sequence[int],
    n: int,
) -> int:
    """Minimum weight |supp(x) OR supp(z)| over nonzero span(A) elements outside
    span(B); -1 if the set difference is empty.

    A is given as an independent basis (ax[i], az[i]); B as an RREF basis with
    combined pivot positions bpiv (pivot p < n indexes x, p >= n indexes z).
    """
    k = len(ax)
    nb = len(bx)
    ax = list(ax)
    az = list(az)
    best = -1
    cx = 0
    cz = 0
    for i in range(1, 1 << k):
        j = (i & -i).bit_length() - 1
        cx ^= ax[j]
        cz ^= az[j]
        w = (cx | cz).bit_count()
        if best != -1 and w >= best:
            continue
        tx, tz = cx, cz
        for r in range(nb):
            p = bpiv[r]
            bit = (tx >> p) & 1 if p < n else (tz >> (p - n)) & 1
            if bit:
                tx ^= bx[r]
                tz ^= bz[r]
        if tx | tz:
            best = w
    return best
