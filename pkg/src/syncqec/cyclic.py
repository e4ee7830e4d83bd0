"""Classical cyclic and linear codes over GF(2): generator/check polynomials
and matrices, duals, nesting checks, minimum distance, generator-set
decompositions for nested pairs, and a divisor-pair search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import gf2
from ._kernels import min_weight_outside_span
from .errors import NotAGeneratorError, SyncqecError
from .gf2poly import (
    BinaryPolynomial,
    cyclic_shift,
    format_poly,
    parse_poly,
    poly_divmod,
    poly_mul,
    reverse_coefficients,
)
from .gf2poly import BitVector

__all__ = [
    "LinearCode",
    "CyclicCode",
    "CyclicCodePair",
    "GeneratorDecomposition",
    "from_generator_poly",
    "dual",
    "min_distance",
    "min_weight_excluding",
    "decompose_generators",
    "factor_x_n_minus_1",
    "search_pairs",
    "parse_code_spec",
    "format_code_spec",
]


def _x_n_minus_1(n: int) -> BinaryPolynomial:
    return BinaryPolynomial((1 << n) | 1)


class LinearCode:
    """Binary linear code stored as a canonical RREF basis of int rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if any(r >> n for r in rows):
            raise ValueError("row has bits beyond length n")
        basis, _ = gf2.rref(list(rows), n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(basis))

    def __setattr__(self, *args):
        raise AttributeError("LinearCode is immutable")

    @property
    def k(self) -> int:
        return len(self.rows)

    def contains(self, v: int) -> bool:
        return gf2.is_in_span(v, list(self.rows), self.n)

    def contains_code(self, other: "LinearCode") -> bool:
        return gf2.span_contains_span(list(self.rows), list(other.rows), self.n)

    def dual(self) -> "LinearCode":
        return LinearCode(self.n, gf2.nullspace(list(self.rows), self.n))

    def __add__(self, other: "LinearCode") -> "LinearCode":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return LinearCode(self.n, list(self.rows) + list(other.rows))

    def intersect(self, other: "LinearCode") -> "LinearCode":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return LinearCode(self.n, gf2.intersect(list(self.rows), list(other.rows), self.n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"

    def generator_matrix(self) -> List[Tuple[int, ...]]:
        return [BitVector(self.n, r).to_tuple() for r in self.rows]


class CyclicCode:
    """Cyclic code of length n defined by a generator polynomial dividing x^n-1."""

    __slots__ = ("n", "gen_poly", "k", "check_poly", "reversed_check")

    def __init__(self, n: int, gen_poly: BinaryPolynomial):
        if n <= 0:
            raise ValueError("invalid modulus: n must be positive")
        if gen_poly.is_zero():
            raise NotAGeneratorError("zero polynomial cannot generate a cyclic code")
        if gen_poly.bits.bit_length() - 1 >= n:
            raise NotAGeneratorError("generator polynomial degree must be below n")
        quotient, remainder = poly_divmod(_x_n_minus_1(n), gen_poly)
        if not remainder.is_zero():
            raise NotAGeneratorError(
                f"{format_poly(gen_poly)} does not divide x^{n}-1"
            )
        k = n - (gen_poly.bits.bit_length() - 1)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gen_poly", gen_poly)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "check_poly", quotient)
        object.__setattr__(
            self, "reversed_check", reverse_coefficients(quotient, k)
        )
        assert self.reversed_check.degree == k

    def __setattr__(self, *args):
        raise AttributeError("CyclicCode is immutable")

    def generator_rows(self) -> List[int]:
        """Rows p_i = shift of p by i-1, i = 1..k (bit-packed)."""
        base = BitVector(self.n, self.gen_poly.bits)
        return [cyclic_shift(base, i).value for i in range(self.k)]

    def check_rows(self) -> List[int]:
        """Rows of the check matrix: shifts of the reversed check polynomial."""
        if self.k == self.n:
            return []
        base = BitVector(self.n, self.reversed_check.bits)
        return [cyclic_shift(base, i).value for i in range(self.n - self.k)]

    def as_linear(self) -> LinearCode:
        return LinearCode(self.n, self.generator_rows())

    def contains(self, v: int) -> bool:
        return gf2.is_in_span(v, self.generator_rows(), self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclicCode)
            and self.n == other.n
            and self.gen_poly == other.gen_poly
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gen_poly))

    def __repr__(self) -> str:
        return f"CyclicCode(n={self.n}, k={self.k}, p={format_poly(self.gen_poly)})"

    def to_json_dict(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "gen_poly": format_poly(self.gen_poly),
            "check_poly": format_poly(self.check_poly),
            "G": [BitVector(self.n, r).to_tuple() for r in self.generator_rows()],
            "H": [BitVector(self.n, r).to_tuple() for r in self.check_rows()],
        }


def from_generator_poly(n: int, p: BinaryPolynomial) -> CyclicCode:
    """Build a cyclic code from its generator polynomial."""
    return CyclicCode(n, p)


def dual(code: CyclicCode) -> CyclicCode:
    """Dual cyclic code, generated by the reversed check polynomial."""
    if code.k == code.n:
        return _zero_code(code.n)
    return CyclicCode(code.n, code.reversed_check)


class _ZeroCode(CyclicCode):
    """The [n, 0] code (no nonzero codewords)."""

    def __init__(self, n: int):  # noqa: D401 - bypass divisibility machinery
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gen_poly", _x_n_minus_1(n))
        object.__setattr__(self, "k", 0)
        object.__setattr__(self, "check_poly", BinaryPolynomial(1))
        object.__setattr__(self, "reversed_check", BinaryPolynomial(1))

    def generator_rows(self) -> List[int]:
        return []

    def check_rows(self) -> List[int]:
        base = BitVector(self.n, 1)
        return [cyclic_shift(base, i).value for i in range(self.n)]


def _zero_code(n: int) -> CyclicCode:
    return _ZeroCode(n)


CodeLike = Union[LinearCode, CyclicCode]


def _rows_of(code: CodeLike) -> Tuple[List[int], int]:
    if isinstance(code, CyclicCode):
        return code.generator_rows(), code.n
    return list(code.rows), code.n


def min_distance(code: CodeLike):
    """Minimum Hamming weight over nonzero codewords (math.inf for zero code)."""
    rows, n = _rows_of(code)
    w = min_weight_outside_span([(r, 0) for r in rows], [], n)
    return math.inf if w is None else w


def min_weight_excluding(code: CodeLike, excluded: CodeLike):
    """Minimum weight over codewords of `code` not in `excluded` (math.inf if empty)."""
    rows, n = _rows_of(code)
    erows, en = _rows_of(excluded)
    if n != en:
        raise ValueError("length mismatch")
    w = min_weight_outside_span([(r, 0) for r in rows], [(r, 0) for r in erows], n)
    return math.inf if w is None else w


class CyclicCodePair:
    """Nested pair of cyclic codes with dual(C) strictly inside C strictly inside D."""

    __slots__ = ("C", "D")

    def __init__(self, C: CyclicCode, D: CyclicCode):
        if C.n != D.n:
            raise ValueError("length mismatch between C and D")
        n = C.n
        # C strictly inside D: q divides p, with k_c < k_d.
        _, rem = poly_divmod(C.gen_poly, D.gen_poly)
        if not rem.is_zero() or C.k >= D.k:
            raise SyncqecError("pair invariant violated: C must be a strict subcode of D")
        # dual(C) strictly inside C: p divides the reversed check polynomial.
        _, rem = poly_divmod(C.reversed_check, C.gen_poly)
        if not rem.is_zero():
            raise SyncqecError("pair invariant violated: dual(C) not contained in C")
        if 2 * C.k - n < 1:
            raise SyncqecError("pair invariant violated: need 2*k_c - n >= 1")
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "D", D)

    def __setattr__(self, *args):
        raise AttributeError("CyclicCodePair is immutable")

    @property
    def n(self) -> int:
        return self.C.n

    @property
    def k_c(self) -> int:
        return self.C.k

    @property
    def k_d(self) -> int:
        return self.D.k

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclicCodePair)
            and self.C == other.C
            and self.D == other.D
        )

    def __hash__(self) -> int:
        return hash((self.C, self.D))

    def __repr__(self) -> str:
        return (
            f"CyclicCodePair(n={self.n}, p={format_poly(self.C.gen_poly)}, "
            f"q={format_poly(self.D.gen_poly)})"
        )


@dataclass(frozen=True)
class GeneratorDecomposition:
    """Nested generator sets for dual(D), dual(C), C, D (bit-packed rows)."""

    n: int
    q_tilde: Tuple[int, ...]  # i = 1..n-k_d, generate dual(D)
    p_tilde: Tuple[int, ...]  # j = 1..k_d-k_c, with q_tilde generate dual(C)
    p_rows: Tuple[int, ...]  # l = 1..2k_c-n, extend to generate C
    q_rows: Tuple[int, ...]  # m = 1..k_d-k_c, extend to generate D


def decompose_generators(pair: CyclicCodePair) -> GeneratorDecomposition:
    """Nested generator sets (representation with shifted rows); span-verified."""
    n = pair.n
    C, D = pair.C, pair.D
    q_tilde = D.check_rows()
    p_tilde_all = C.check_rows()
    p_tilde = p_tilde_all[: pair.k_d - pair.k_c]
    p_rows = C.generator_rows()[: 2 * pair.k_c - n]
    q_rows = D.generator_rows()[: pair.k_d - pair.k_c]
    dec = GeneratorDecomposition(
        n, tuple(q_tilde), tuple(p_tilde), tuple(p_rows), tuple(q_rows)
    )
    # Span checks of the four nested equalities.
    acc: List[int] = list(q_tilde)
    if not gf2.span_equal(acc, dual(D).generator_rows(), n):
        raise SyncqecError("decomposition span check failed for dual(D)")
    acc += list(p_tilde)
    if not gf2.span_equal(acc, dual(C).generator_rows(), n):
        raise SyncqecError("decomposition span check failed for dual(C)")
    acc += list(p_rows)
    if not gf2.span_equal(acc, C.generator_rows(), n):
        raise SyncqecError("decomposition span check failed for C")
    acc += list(q_rows)
    if not gf2.span_equal(acc, D.generator_rows(), n):
        raise SyncqecError("decomposition span check failed for D")
    if gf2.rank(acc, n) != len(acc):
        raise SyncqecError("decomposition rows not linearly independent")
    return dec


@lru_cache(maxsize=None)
def factor_x_n_minus_1(n: int) -> Tuple[BinaryPolynomial, ...]:
    """Irreducible factors of x^n - 1 over GF(2), by trial division."""
    rem = _x_n_minus_1(n)
    factors: List[BinaryPolynomial] = []
    while rem.bits != 1:
        deg_rem = rem.bits.bit_length() - 1
        smallest = None
        for d in range(1, deg_rem // 2 + 1):
            for bits in range(1 << d, 1 << (d + 1)):
                cand = BinaryPolynomial(bits)
                quo, r = poly_divmod(rem, cand)
                if r.is_zero():
                    smallest = (cand, quo)
                    break
            if smallest is not None:
                break
        if smallest is None:
            factors.append(rem)
            break
        factors.append(smallest[0])
        rem = smallest[1]
    # sanity: product reconstructs x^n - 1
    prod = BinaryPolynomial(1)
    for f in factors:
        prod = poly_mul(prod, f)
    assert prod == _x_n_minus_1(n)
    return tuple(sorted(factors, key=lambda f: (f.bits.bit_length(), f.bits)))


def search_pairs(
    n: int,
    min_dd: Optional[int] = None,
    min_gap: int = 1,
) -> List[CyclicCodePair]:
    """Enumerate all valid nested pairs from divisor products of x^n - 1.

    min_dd filters on the distance of D (requires k_d within the exhaustive
    bound; pairs whose distance cannot be computed are dropped when min_dd > 1).
    min_gap filters on k_d - k_c.
    """
    factors = factor_x_n_minus_1(n)
    nf = len(factors)
    if len(set(f.bits for f in factors)) != nf:
        raise SyncqecError(
            f"x^{n}-1 has repeated factors; only square-free lengths are supported"
        )
    pairs: List[CyclicCodePair] = []
    seen = set()
    for p_mask in range(1, 1 << nf):
        p = BinaryPolynomial(1)
        for i in range(nf):
            if (p_mask >> i) & 1:
                p = poly_mul(p, factors[i])
        if p.bits.bit_length() - 1 >= n:
            continue
        try:
            C = CyclicCode(n, p)
        except SyncqecError:
            continue
        if 2 * C.k - n < 1:
            continue
        _, rem = poly_divmod(C.reversed_check, p)
        if not rem.is_zero():
            continue  # dual(C) not inside C
        # iterate proper submasks of p_mask (including 0)
        q_masks = []
        m = p_mask
        while True:
            m = (m - 1) & p_mask
            q_masks.append(m)
            if m == 0:
                break
        for q_mask in q_masks:
            q = BinaryPolynomial(1)
            for i in range(nf):
                if (q_mask >> i) & 1:
                    q = poly_mul(q, factors[i])
            D = CyclicCode(n, q)
            if D.k - C.k < min_gap:
                continue
            if min_dd is not None and min_dd > 1:
                if D.k > 24:
                    continue
                if min_distance(D) < min_dd:
                    continue
            key = (p.bits, q.bits)
            if key in seen:
                continue
            seen.add(key)
            pairs.append(CyclicCodePair(C, D))
    pairs.sort(key=lambda pr: (pr.C.gen_poly.bits, pr.D.gen_poly.bits))
    return pairs


def parse_code_spec(text: str) -> CyclicCodePair:
    """Parse a pair spec like "n=7; p=1+x+x^3; q=1"."""
    fields: Dict[str, str] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"bad code-spec field {part!r}")
        key, _, val = part.partition("=")
        key = key.strip()
        if key in fields:
            raise ValueError(f"duplicate code-spec field {key!r}")
        fields[key] = val.strip()
    missing = {"n", "p", "q"} - set(fields)
    if missing:
        raise ValueError(f"code-spec missing fields: {sorted(missing)}")
    unknown = set(fields) - {"n", "p", "q"}
    if unknown:
        raise ValueError(f"code-spec unknown fields: {sorted(unknown)}")
    n = int(fields["n"])
    C = CyclicCode(n, parse_poly(fields["p"]))
    D = CyclicCode(n, parse_poly(fields["q"]))
    return CyclicCodePair(C, D)


def format_code_spec(pair: CyclicCodePair) -> str:
    """Inverse of parse_code_spec."""
    return (
        f"n={pair.n}; p={format_poly(pair.C.gen_poly)}; "
        f"q={format_poly(pair.D.gen_poly)}"
    )
