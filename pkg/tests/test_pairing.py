"""Symplectic Gram-Schmidt pairing over GF(2) and its verified properties."""

from __future__ import annotations

import dataclasses
import json

import pytest

from syncqec import gf2
from syncqec.errors import DegenerateInputError, NoPartnerError
from syncqec.pairing import (
    build_pairing_basis,
    pair_gauges,
    pair_logicals,
    pairing_basis_to_json,
    verify_pairing_properties,
)


def test_n7_golden_basis(n7_basis):
    assert n7_basis.q_tilde == ()
    assert n7_basis.decomposition.p_tilde == (0b0011101, 0b0111010, 0b1110100)
    assert n7_basis.s_x == (0b0001011,)
    assert n7_basis.s_z == (0b0001011,)
    assert n7_basis.q_prime == (0b0001010, 0b0001001, 0b0000100)
    assert n7_basis.t_tilde == n7_basis.decomposition.p_tilde


def test_pair_logicals_basics():
    # odd self-overlap: vector pairs with itself
    s_x, s_z = pair_logicals([0b1])
    assert s_x == [0b1] and s_z == [0b1]
    # even self-overlap pair with odd mutual overlap
    s_x, s_z = pair_logicals([0b011, 0b001])
    assert len(s_x) == 2
    for a in range(2):
        for b in range(2):
            assert gf2.dot(s_x[a], s_z[b]) == (1 if a == b else 0)


def test_pair_logicals_degenerate():
    with pytest.raises(DegenerateInputError):
        pair_logicals([0b11])  # self-orthogonal and alone


def test_pair_gauges_pairing_matrix(n7_basis):
    tt, tx, tz = n7_basis.t_tilde, n7_basis.t_x, n7_basis.t_z
    for a in range(len(tt)):
        for b in range(len(tt)):
            want = 1 if a == b else 0
            assert gf2.dot(tt[a], tx[b]) == want
            assert gf2.dot(tt[a], tz[b]) == want


def test_pair_gauges_no_partner():
    with pytest.raises(NoPartnerError):
        pair_gauges([0b01], [0b10], 2)


def test_properties_hold_on_small_pairs(n7_basis, n15_pair):
    assert verify_pairing_properties(n7_basis) == []
    assert verify_pairing_properties(build_pairing_basis(n15_pair)) == []


def test_corrupted_basis_reports_property_failure(n7_basis):
    corrupted = dataclasses.replace(n7_basis, s_x=(n7_basis.s_x[0] ^ 1,))
    failures = verify_pairing_properties(corrupted)
    assert "property-5-s-pairing" in failures


def test_json_dump_shape(n7_basis):
    payload = json.loads(pairing_basis_to_json(n7_basis))
    assert payload["n"] == 7
    assert payload["s_x"] == [[1, 1, 0, 1, 0, 0, 0]]
    assert len(payload["q_prime"]) == 3
    assert all(len(row) == 7 for row in payload["q_prime"])
    assert set(payload) == {
        "n", "q_tilde", "t_tilde", "s_x", "s_z", "t_x", "t_z", "q_prime"
    }
