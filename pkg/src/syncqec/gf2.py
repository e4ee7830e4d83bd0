"""Bit-packed GF(2) linear algebra on int bitsets (bit i = coordinate i)."""

from __future__ import annotations

from typing import List, Optional, Tuple

__all__ = [
    "dot",
    "weight",
    "rref",
    "rank",
    "reduce_vector",
    "is_in_span",
    "solve_combination",
    "nullspace",
    "sum_basis",
    "intersect",
    "span_equal",
    "span_contains_span",
    "enumerate_span",
]


def dot(a: int, b: int) -> int:
    """GF(2) dot product of two bit-packed vectors."""
    return (a & b).bit_count() & 1


def weight(v: int) -> int:
    """Hamming weight of a bit-packed vector."""
    return v.bit_count()


def rref(rows: List[int], width: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form; returns (basis_rows, pivot_columns)."""
    basis: List[int] = []
    pivots: List[int] = []
    for row in rows:
        for b, p in zip(basis, pivots):
            if (row >> p) & 1:
                row ^= b
        if row:
            p = row.bit_length() - 1
            # Keep basis fully reduced above the new pivot as well.
            for i, b in enumerate(basis):
                if (b >> p) & 1:
                    basis[i] = b ^ row
            basis.append(row)
            pivots.append(p)
    order = sorted(range(len(pivots)), key=lambda i: -pivots[i])
    return [basis[i] for i in order], [pivots[i] for i in order]


def rank(rows: List[int], width: int) -> int:
    """Rank over GF(2)."""
    return len(rref(rows, width)[0])


def reduce_vector(v: int, basis: List[int], pivots: List[int]) -> int:
    """Reduce v against an RREF basis; zero result means membership."""
    for b, p in zip(basis, pivots):
        if (v >> p) & 1:
            v ^= b
    return v


def is_in_span(v: int, rows: List[int], width: int) -> bool:
    """Check membership of v in the row span."""
    basis, pivots = rref(rows, width)
    return reduce_vector(v, basis, pivots) == 0


def solve_combination(v: int, rows: List[int], width: int) -> Optional[List[int]]:
    """Indices of rows whose XOR equals v, or None if v is outside the span."""
    basis: List[int] = []
    pivots: List[int] = []
    combos: List[int] = []  # bitmask over original row indices
    for idx, row in enumerate(rows):
        mask = 1 << idx
        for b, p, m in zip(basis, pivots, combos):
            if (row >> p) & 1:
                row ^= b
                mask ^= m
        if row:
            basis.append(row)
            pivots.append(row.bit_length() - 1)
            combos.append(mask)
    mask = 0
    for b, p, m in zip(basis, pivots, combos):
        if (v >> p) & 1:
            v ^= b
            mask ^= m
    if v:
        return None
    return [i for i in range(len(rows)) if (mask >> i) & 1]


def nullspace(rows: List[int], width: int) -> List[int]:
    """Basis of {v : dot(v, row) = 0 for every row}."""
    basis, pivots = rref(rows, width)
    pivot_set = set(pivots)
    out: List[int] = []
    for col in range(width):
        if col in pivot_set:
            continue
        v = 1 << col
        for b, p in zip(basis, pivots):
            if dot(b, v):
                # flip pivot coordinate p to restore orthogonality with b
                v ^= 1 << p
        # re-check: rows are fully reduced so one pass per basis row suffices
        out.append(v)
    for v in out:
        for b in basis:
            assert dot(v, b) == 0
    return out


def sum_basis(rows_a: List[int], rows_b: List[int], width: int) -> List[int]:
    """RREF basis of the sum of two row spans."""
    return rref(list(rows_a) + list(rows_b), width)[0]


def intersect(rows_a: List[int], rows_b: List[int], width: int) -> List[int]:
    """Basis of the intersection of two row spans (Zassenhaus algorithm)."""
    # Stack (v, v) for A rows and (v, 0) for B rows; first block in high bits.
    aug: List[int] = [r | (r << width) for r in rows_a]
    aug += [r << width for r in rows_b]
    basis, pivots = rref(aug, 2 * width)
    mask = (1 << width) - 1
    out = []
    for b, p in zip(basis, pivots):
        if p >= width:
            continue
        # Rows with zero high part carry intersection elements in the low part.
        if (b >> width) == 0:
            out.append(b & mask)
    return rref(out, width)[0]


def span_equal(rows_a: List[int], rows_b: List[int], width: int) -> bool:
    """Whether two row spans coincide."""
    a = rref(rows_a, width)[0]
    b = rref(rows_b, width)[0]
    return a == b


def span_contains_span(outer: List[int], inner: List[int], width: int) -> bool:
    """Whether span(outer) contains span(inner)."""
    basis, pivots = rref(outer, width)
    return all(reduce_vector(v, basis, pivots) == 0 for v in inner)


def enumerate_span(rows: List[int], width: int, limit: int = 1 << 24):
    """Yield every vector in the span (Gray-code walk); rank-capped by limit."""
    basis, _ = rref(rows, width)
    k = len(basis)
    if 1 << k > limit:
        raise ValueError(f"span too large to enumerate: rank {k}")
    cur = 0
    yield 0
    for i in range(1, 1 << k):
        j = (i & -i).bit_length() - 1
        cur ^= basis[j]
        yield cur
