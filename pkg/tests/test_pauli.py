"""Symplectic Pauli algebra, checked against a dense matrix oracle."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from syncqec.cyclic import CyclicCode
from syncqec.errors import LengthMismatchError
from syncqec.gf2poly import parse_poly
from syncqec.pauli import (
    PauliGroupSpan,
    PauliOperator,
    centralizer_basis,
    identity,
    inverse,
    min_weight_in_set_difference,
    multiply,
    pauli_x,
    pauli_z,
    symplectic_product,
)

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I = np.eye(2, dtype=complex)


def dense(op: PauliOperator) -> np.ndarray:
    """Dense matrix of i^phase * X(x) * Z(z), qubit 0 least significant."""
    m = np.array([[1]], dtype=complex)
    for i in range(op.n):
        f = _I
        if (op.x >> i) & 1:
            f = _X
        if (op.z >> i) & 1:
            f = f @ _Z
        m = np.kron(f, m)
    return (1j ** op.phase) * m


def _random_op(rng, n):
    return PauliOperator(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))


def test_multiply_matches_dense_oracle():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 3)
        u, v = _random_op(rng, n), _random_op(rng, n)
        assert np.allclose(dense(multiply(u, v)), dense(u) @ dense(v))


def test_inverse_matches_dense_oracle():
    rng = random.Random(6)
    for _ in range(40):
        n = rng.randint(1, 3)
        u = _random_op(rng, n)
        assert multiply(u, inverse(u)) == identity(n)
        assert np.allclose(dense(u) @ dense(inverse(u)), np.eye(1 << n))


def test_symplectic_product_is_commutation():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 3)
        u, v = _random_op(rng, n), _random_op(rng, n)
        commute = np.allclose(
            dense(u) @ dense(v), dense(v) @ dense(u)
        )
        assert symplectic_product(u, v) == (0 if commute else 1)
    with pytest.raises(LengthMismatchError):
        symplectic_product(pauli_x(2, 1), pauli_x(3, 1))


def test_to_string():
    op = PauliOperator(5, 0b00011, 0b00110, 2)
    assert op.to_string() == "-XYZII"
    assert identity(2).to_string() == "+II"
    assert PauliOperator(1, 1, 1, 1).to_string() == "+iY"


def test_operator_validation_and_weight():
    with pytest.raises(ValueError):
        PauliOperator(2, 0b100, 0)
    assert PauliOperator(3, 0b101, 0b011).weight() == 3


def test_span_membership_modes():
    gens = [pauli_x(2, 0b11), pauli_z(2, 0b11)]
    span = PauliGroupSpan(2, gens)
    assert span.is_abelian()
    prod = multiply(gens[0], gens[1])  # +X(11)Z(11)
    assert span.contains(prod, "exact-phase")
    flipped = PauliOperator(2, prod.x, prod.z, (prod.phase + 2) & 3)
    assert span.contains(flipped, "ignore-phase")
    assert not span.contains(flipped, "exact-phase")
    assert not span.contains(pauli_x(2, 0b01), "ignore-phase")
    with pytest.raises(ValueError):
        span.contains(prod, "bogus")


def test_minus_identity_detection():
    base = [pauli_x(2, 0b11), pauli_z(2, 0b11)]
    good = PauliGroupSpan(2, base + [multiply(base[0], base[1])])
    assert not good.contains_minus_identity()
    assert good.is_valid_stabilizer_group()
    bad_gen = PauliOperator(2, 0b11, 0b11, 2)  # -X(11)Z(11)
    bad = PauliGroupSpan(2, base + [bad_gen])
    assert bad.contains_minus_identity()
    assert not bad.is_valid_stabilizer_group()


def test_span_equal_modes():
    a = PauliGroupSpan(2, [pauli_x(2, 0b11), pauli_z(2, 0b11)])
    b = PauliGroupSpan(
        2, [pauli_x(2, 0b11), multiply(pauli_x(2, 0b11), pauli_z(2, 0b11))]
    )
    assert a.span_equal(b, "ignore-phase")
    assert a.span_equal(b, "exact-phase")
    c = PauliGroupSpan(2, [pauli_x(2, 0b11), pauli_z(2, 0b11, phase=2)])
    assert a.span_equal(c, "ignore-phase")
    assert not a.span_equal(c, "exact-phase")


def test_decompose_indices():
    gens = [pauli_x(3, 0b011), pauli_x(3, 0b110), pauli_z(3, 0b111)]
    span = PauliGroupSpan(3, gens)
    combo = span.decompose(PauliOperator(3, 0b101, 0b111))
    assert combo is not None
    acc = identity(3)
    for i in combo:
        acc = multiply(acc, gens[i])
    assert (acc.x, acc.z) == (0b101, 0b111)
    assert span.decompose(pauli_x(3, 0b001)) is None


def _steane_stabilizers():
    rows = CyclicCode(7, parse_poly("1+x+x^3")).check_rows()
    return [pauli_x(7, r) for r in rows] + [pauli_z(7, r) for r in rows]


def test_steane_centralizer_and_distance():
    group = PauliGroupSpan(7, _steane_stabilizers())
    assert group.rank == 6
    assert group.is_valid_stabilizer_group()
    cs = centralizer_basis(group)
    assert cs.rank == 2 * 7 - 6
    # every centralizer element commutes with every stabilizer
    assert all(
        symplectic_product(c, s) == 0
        for c in cs.generators
        for s in group.generators
    )
    assert min_weight_in_set_difference(cs, group) == 3
    assert min_weight_in_set_difference(group, cs) == math.inf
