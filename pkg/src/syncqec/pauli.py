"""Binary-symplectic representation of N-qubit Pauli operators with phases,
commutation tests, and group-span membership."""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

from . import gf2
from ._kernels import min_weight_outside_span
from .errors import LengthMismatchError

__all__ = [
    "PauliOperator",
    "PauliGroupSpan",
    "identity",
    "pauli_x",
    "pauli_z",
    "symplectic_product",
    "multiply",
    "inverse",
    "centralizer_basis",
    "min_weight_in_set_difference",
]


class PauliOperator:
    """N-qubit Pauli operator i^phase * X(x) * Z(z), bit-packed x/z parts."""

    __slots__ = ("n", "x", "z", "phase")

    def __init__(self, n: int, x: int, z: int, phase: int = 0):
        if x >> n or z >> n or x < 0 or z < 0:
            raise ValueError("x/z support beyond n qubits")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "phase", phase & 3)

    def __setattr__(self, *args):
        raise AttributeError("PauliOperator is immutable")

    def weight(self) -> int:
        """Number of non-identity tensor factors."""
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliOperator)
            and (self.n, self.x, self.z, self.phase)
            == (other.n, other.x, other.z, other.phase)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.x, self.z, self.phase))

    def __repr__(self) -> str:
        return f"PauliOperator({self.to_string()!r})"

    def to_string(self) -> str:
        """Human-readable form like '+XIZZY'; sign from the phase exponent."""
        sign = {0: "+", 1: "+i", 2: "-", 3: "-i"}[self.phase]
        letters = []
        for i in range(self.n):
            xb = (self.x >> i) & 1
            zb = (self.z >> i) & 1
            letters.append("IXZY"[xb + 2 * zb])
        return sign + "".join(letters)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 0)


def pauli_x(n: int, v: int, phase: int = 0) -> PauliOperator:
    """X(v) with an optional phase exponent (power of i)."""
    return PauliOperator(n, v, 0, phase)


def pauli_z(n: int, v: int, phase: int = 0) -> PauliOperator:
    """Z(v) with an optional phase exponent (power of i)."""
    return PauliOperator(n, 0, v, phase)


def symplectic_product(u: PauliOperator, v: PauliOperator) -> int:
    """0 iff the operators commute, 1 iff they anticommute."""
    if u.n != v.n:
        raise LengthMismatchError("operators act on different qubit counts")
    return (gf2.dot(u.x, v.z) + gf2.dot(u.z, v.x)) & 1


def multiply(u: PauliOperator, v: PauliOperator) -> PauliOperator:
    """Matrix product u*v with exact phase bookkeeping (power of i)."""
    if u.n != v.n:
        raise LengthMismatchError("operators act on different qubit counts")
    phase = (u.phase + v.phase + 2 * gf2.dot(u.z, v.x)) & 3
    return PauliOperator(u.n, u.x ^ v.x, u.z ^ v.z, phase)


def inverse(u: PauliOperator) -> PauliOperator:
    """Group inverse: u * inverse(u) is the +1 identity."""
    return PauliOperator(u.n, u.x, u.z, (-u.phase + 2 * gf2.dot(u.x, u.z)) & 3)


class PauliGroupSpan:
    """Span of Pauli generators with a cached reduced basis and phase ledger.

    Phase-exact queries reduce a candidate by actual Pauli multiplication
    against the cached basis; they are order-independent (hence well-defined)
    exactly when the generators mutually commute, which holds for every
    stabilizer group in this package.
    """

    __slots__ = ("n", "generators", "basis", "pivots", "_row_basis", "_row_pivots")

    def __init__(self, n: int, generators: Sequence[PauliOperator]):
        for g in generators:
            if g.n != n:
                raise LengthMismatchError("generator qubit count mismatch")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", tuple(generators))
        basis: List[PauliOperator] = []
        pivots: List[int] = []
        for g in generators:
            red = self._reduce_against(g, basis, pivots)
            if not red.is_identity():
                key = red.x | (red.z << n)
                basis.append(red)
                pivots.append(key.bit_length() - 1)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "pivots", tuple(pivots))
        rows = [g.x | (g.z << n) for g in generators]
        rb, rp = gf2.rref(rows, 2 * n)
        object.__setattr__(self, "_row_basis", tuple(rb))
        object.__setattr__(self, "_row_pivots", tuple(rp))

    def __setattr__(self, *args):
        raise AttributeError("PauliGroupSpan is immutable")

    @staticmethod
    def _reduce_against(
        op: PauliOperator, basis: Sequence[PauliOperator], pivots: Sequence[int]
    ) -> PauliOperator:
        n = op.n
        red = op
        changed = True
        while changed:
            changed = False
            key = red.x | (red.z << n)
            for b, p in zip(basis, pivots):
                if (key >> p) & 1:
                    red = multiply(red, b)
                    key = red.x | (red.z << n)
                    changed = True
        return red

    @property
    def rank(self) -> int:
        return len(self.basis)

    def rows(self) -> List[Tuple[int, int]]:
        return [(g.x, g.z) for g in self.generators]

    def reduce(self, op: PauliOperator) -> PauliOperator:
        """Reduce op against the basis by Pauli multiplication."""
        if op.n != self.n:
            raise LengthMismatchError("operator qubit count mismatch")
        return self._reduce_against(op, self.basis, self.pivots)

    def contains(self, op: PauliOperator, mode: str = "ignore-phase") -> bool:
        """Span membership; mode 'exact-phase' also matches the phase exponent."""
        red = self.reduce(op)
        if not red.is_identity():
            return False
        if mode == "exact-phase":
            return red.phase == 0
        if mode == "ignore-phase":
            return True
        raise ValueError(f"unknown mode {mode!r}")

    def decompose(self, op: PauliOperator) -> Optional[List[int]]:
        """Generator indices whose product matches op's x/z parts, or None."""
        return gf2.solve_combination(
            op.x | (op.z << self.n), [g.x | (g.z << self.n) for g in self.generators], 2 * self.n
        )

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            symplectic_product(gens[i], gens[j]) == 0
            for i in range(len(gens))
            for j in range(i + 1, len(gens))
        )

    def contains_minus_identity(self) -> bool:
        """Whether the generated group contains -I (or +-iI).

        Valid for mutually commuting generator sets: any generator subset whose
        x/z parts cancel must then carry phase 0 mod 4.
        """
        for g in self.generators:
            red = self.reduce(g)
            if red.is_identity() and red.phase != 0:
                return True
        return False

    def is_valid_stabilizer_group(self) -> bool:
        """Abelian, phases +-1 only, and -I not in the generated group."""
        return (
            self.is_abelian()
            and all(g.phase in (0, 2) for g in self.generators)
            and not self.contains_minus_identity()
        )

    def span_equal(self, other: "PauliGroupSpan", mode: str = "ignore-phase") -> bool:
        """Whether both generator sets generate the same group (of x/z spans
        for ignore-phase; of exact signed elements for exact-phase)."""
        if self.n != other.n:
            return False
        if mode == "ignore-phase":
            return self._row_basis == other._row_basis
        return all(other.contains(g, "exact-phase") for g in self.generators) and all(
            self.contains(g, "exact-phase") for g in other.generators
        )


def centralizer_basis(g: PauliGroupSpan, ambient_n: Optional[int] = None) -> PauliGroupSpan:
    """Basis of all Paulis commuting with every generator (phases set to +1)."""
    n = g.n if ambient_n is None else ambient_n
    # Symplectic-orthogonality: dot((x|z), (g.z|g.x)) = 0 for every generator.
    swapped = [gen.z | (gen.x << n) for gen in g.generators]
    kernel_rows = gf2.nullspace(swapped, 2 * n)
    mask = (1 << n) - 1
    ops = [PauliOperator(n, row & mask, row >> n, 0) for row in kernel_rows]
    return PauliGroupSpan(n, ops)


def min_weight_in_set_difference(a: PauliGroupSpan, b: PauliGroupSpan):
    """Minimum Pauli weight over span(A) \\ span(B), phase-ignoring.

    Returns math.inf when the set difference is empty.
    """
    if a.n != b.n:
        raise LengthMismatchError("group qubit counts differ")
    w = min_weight_outside_span(a.rows(), b.rows(), a.n)
    return math.inf if w is None else w
