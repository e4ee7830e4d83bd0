"""Polynomials over Z2 and the quotient ring Z2[x]/(x^n-1), with the
vector/polynomial correspondence and cyclic shifts."""

from __future__ import annotations

from typing import Iterable, Tuple

__all__ = [
    "NEG_INF",
    "BitVector",
    "BinaryPolynomial",
    "poly_mul",
    "poly_mul_mod",
    "poly_divmod",
    "vectorize",
    "devectorize",
    "cyclic_shift",
    "reverse_coefficients",
    "parse_poly",
    "format_poly",
]


class _NegInf:
    """Sentinel for degree of the zero polynomial."""

    def __repr__(self) -> str:
        return "-inf"

    def __lt__(self, other) -> bool:
        return not isinstance(other, _NegInf)

    def __le__(self, other) -> bool:
        return True

    def __gt__(self, other) -> bool:
        return False

    def __ge__(self, other) -> bool:
        return isinstance(other, _NegInf)

    def __eq__(self, other) -> bool:
        return isinstance(other, _NegInf)

    def __hash__(self) -> int:
        return hash("gf2poly-neg-inf")


NEG_INF = _NegInf()


class BitVector:
    """Immutable fixed-length vector over Z2, bit-packed little-endian."""

    __slots__ = ("n", "value")

    def __init__(self, n: int, value: int | Iterable[int] = 0):
        if n < 0:
            raise ValueError("length must be non-negative")
        if isinstance(value, int):
            packed = value
        else:
            packed = 0
            bits = list(value)
            if len(bits) != n:
                raise ValueError("length mismatch between bits and n")
            for i, b in enumerate(bits):
                if b not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                packed |= b << i
        if packed >> n:
            raise ValueError("value has bits beyond length n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "value", packed)

    def __setattr__(self, *args):
        raise AttributeError("BitVector is immutable")

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.value >> i) & 1

    def __iter__(self):
        return iter(self.to_tuple())

    def to_tuple(self) -> Tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.value ^ other.value)

    def dot(self, other: "BitVector") -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return (self.value & other.value).bit_count() & 1

    def weight(self) -> int:
        return self.value.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.n == other.n
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.n, self.value))

    def __repr__(self) -> str:
        return f"BitVector({self.n}, {self.to_tuple()})"


class BinaryPolynomial:
    """Immutable polynomial over Z2, coefficients bit-packed little-endian."""

    __slots__ = ("bits",)

    def __init__(self, bits: int | Iterable[int]):
        if isinstance(bits, int):
            packed = bits
        else:
            packed = 0
            for i, b in enumerate(bits):
                if b not in (0, 1):
                    raise ValueError("coefficients must be 0 or 1")
                packed |= b << i
        if packed < 0:
            raise ValueError("coefficient bitset must be non-negative")
        object.__setattr__(self, "bits", packed)

    def __setattr__(self, *args):
        raise AttributeError("BinaryPolynomial is immutable")

    @property
    def degree(self):
        """Degree; NEG_INF sentinel for the zero polynomial."""
        if self.bits == 0:
            return NEG_INF
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def coefficient(self, i: int) -> int:
        return (self.bits >> i) & 1 if i >= 0 else 0

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryPolynomial) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("BinaryPolynomial", self.bits))

    def __repr__(self) -> str:
        return f"BinaryPolynomial({format_poly(self)!r})"

    @staticmethod
    def x_to(k: int) -> "BinaryPolynomial":
        if k < 0:
            raise ValueError("exponent must be non-negative")
        return BinaryPolynomial(1 << k)

    @staticmethod
    def one() -> "BinaryPolynomial":
        return BinaryPolynomial(1)

    @staticmethod
    def zero() -> "BinaryPolynomial":
        return BinaryPolynomial(0)


def poly_mul(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Product in Z2[x] (carry-less multiplication)."""
    x, y = a.bits, b.bits
    out = 0
    while y:
        low = y & -y
        out ^= x << (low.bit_length() - 1)
        y ^= low
    return BinaryPolynomial(out)


def poly_mul_mod(a: BinaryPolynomial, b: BinaryPolynomial, n: int) -> BinaryPolynomial:
    """Product reduced mod (x^n - 1)."""
    if n <= 0:
        raise ValueError("invalid modulus: n must be positive")
    bits = poly_mul(a, b).bits
    mask = (1 << n) - 1
    out = 0
    while bits:
        out ^= bits & mask
        bits >>= n
    return BinaryPolynomial(out)


def poly_divmod(
    a: BinaryPolynomial, b: BinaryPolynomial
) -> Tuple[BinaryPolynomial, BinaryPolynomial]:
    """Quotient and remainder in Z2[x]; a = q*b + r with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = a.bits
    db = b.bits.bit_length() - 1
    q = 0
    while r.bit_length() - 1 >= db and r:
        shift = (r.bit_length() - 1) - db
        q |= 1 << shift
        r ^= b.bits << shift
    return BinaryPolynomial(q), BinaryPolynomial(r)


def vectorize(c: BinaryPolynomial, n: int) -> BitVector:
    """Coefficient vector (c_0, ..., c_{n-1}) of a polynomial of degree < n."""
    if c.degree >= n:
        raise ValueError("out of range: polynomial degree >= n")
    return BitVector(n, c.bits)


def devectorize(v: BitVector) -> BinaryPolynomial:
    """Inverse of vectorize."""
    return BinaryPolynomial(v.value)


def cyclic_shift(v: BitVector, alpha: int) -> BitVector:
    """Right cyclic shift by alpha positions (negative alpha shifts left)."""
    n = v.n
    if n == 0:
        return v
    a = alpha % n
    mask = (1 << n) - 1
    val = ((v.value << a) | (v.value >> (n - a))) & mask if a else v.value
    return BitVector(n, val)


def reverse_coefficients(p: BinaryPolynomial, upto_degree: int) -> BinaryPolynomial:
    """Coefficient reversal: returns sum of p_{upto_degree-i} x^i."""
    if p.degree > upto_degree:
        raise ValueError("polynomial degree exceeds upto_degree")
    out = 0
    for i in range(upto_degree + 1):
        if (p.bits >> (upto_degree - i)) & 1:
            out |= 1 << i
    return BinaryPolynomial(out)


def parse_poly(text: str) -> BinaryPolynomial:
    """Parse ascending-power text like "1+x+x^3"; "0" is the zero polynomial."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return BinaryPolynomial(0)
    bits = 0
    for term in s.split("+"):
        if term == "1":
            k = 0
        elif term == "x":
            k = 1
        elif term.startswith("x^"):
            exp = term[2:]
            if not exp.isdigit():
                raise ValueError(f"bad term {term!r}")
            k = int(exp)
        else:
            raise ValueError(f"bad term {term!r}")
        if (bits >> k) & 1:
            raise ValueError(f"duplicate term {term!r}")
        bits |= 1 << k
    return BinaryPolynomial(bits)


def format_poly(p: BinaryPolynomial) -> str:
    """Inverse of parse_poly (ascending powers)."""
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.bits.bit_length()):
        if (p.bits >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return "+".join(terms)
