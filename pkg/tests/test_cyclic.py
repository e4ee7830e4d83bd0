"""Cyclic/linear codes, nested pairs, decompositions, and the pair search."""

from __future__ import annotations

import math

import pytest

from syncqec import gf2
from syncqec.cyclic import (
    CyclicCode,
    CyclicCodePair,
    LinearCode,
    decompose_generators,
    dual,
    factor_x_n_minus_1,
    format_code_spec,
    min_distance,
    min_weight_excluding,
    parse_code_spec,
    search_pairs,
)
from syncqec.errors import NotAGeneratorError, SyncqecError
from syncqec.gf2poly import parse_poly, poly_mul


def test_hamming_code_basics():
    code = CyclicCode(7, parse_poly("1+x+x^3"))
    assert code.k == 4
    assert code.check_poly == parse_poly("1+x+x^2+x^4")
    assert min_distance(code) == 3
    # golden check matrix: shifts of the reversed check polynomial
    assert code.check_rows() == [0b0011101, 0b0111010, 0b1110100]
    assert len(code.generator_rows()) == 4


def test_generator_must_divide_modulus():
    with pytest.raises(NotAGeneratorError):
        CyclicCode(7, parse_poly("1+x^2"))
    with pytest.raises(NotAGeneratorError):
        CyclicCode(7, parse_poly("0"))
    with pytest.raises(NotAGeneratorError):
        CyclicCode(7, parse_poly("x^7"))


def test_dual_of_hamming_is_simplex():
    code = CyclicCode(7, parse_poly("1+x+x^3"))
    d = dual(code)
    assert d.k == 3
    assert min_distance(d) == 4
    # self-orthogonality of the dual rows against the code
    assert all(
        gf2.dot(a, b) == 0 for a in d.generator_rows() for b in code.generator_rows()
    )


def test_dual_of_full_space_is_zero_code():
    full = CyclicCode(7, parse_poly("1"))
    z = dual(full)
    assert z.k == 0
    assert min_distance(z) == math.inf
    assert z.generator_rows() == []
    assert len(z.check_rows()) == 7


def test_pair_validation():
    hamming = CyclicCode(7, parse_poly("1+x+x^3"))
    full7 = CyclicCode(7, parse_poly("1"))
    CyclicCodePair(hamming, full7)  # valid
    with pytest.raises(SyncqecError):
        CyclicCodePair(hamming, hamming)  # not strict
    # dual(C) not inside C: the [15,14] even-weight code misses the all-ones word
    even15 = CyclicCode(15, parse_poly("1+x"))
    full15 = CyclicCode(15, parse_poly("1"))
    with pytest.raises(SyncqecError):
        CyclicCodePair(even15, full15)
    # 2k_c - n < 1
    simplex = CyclicCode(7, parse_poly("1+x+x^2+x^4"))
    with pytest.raises(SyncqecError):
        CyclicCodePair(simplex, full7)


def test_factorization_reconstructs_modulus():
    for n in (7, 15, 21):
        factors = factor_x_n_minus_1(n)
        prod = parse_poly("1")
        for f in factors:
            prod = poly_mul(prod, f)
        assert prod.bits == (1 << n) | 1


def test_corpus_counts(corpus):
    assert {n: len(pairs) for n, pairs in corpus.items()} == {
        7: 2,
        15: 2,
        17: 0,
        21: 16,
        23: 2,
        31: 98,
    }


def test_search_pairs_distance_filter(n21_d3_pair):
    found = search_pairs(21, min_dd=3)
    assert n21_d3_pair in found
    assert all(min_distance(p.D) >= 3 for p in found)


def test_decomposition_shapes_and_spans(n7_pair):
    dec = decompose_generators(n7_pair)
    gap = n7_pair.k_d - n7_pair.k_c
    assert len(dec.q_tilde) == n7_pair.n - n7_pair.k_d
    assert len(dec.p_tilde) == gap
    assert len(dec.p_rows) == 2 * n7_pair.k_c - n7_pair.n
    assert len(dec.q_rows) == gap
    assert dec.p_tilde == (0b0011101, 0b0111010, 0b1110100)
    # rows of each sector are natural shifts
    assert dec.q_rows == (1, 2, 4)


def test_decomposition_all_corpus_rank(corpus):
    for n, pairs in corpus.items():
        for pair in pairs:
            dec = decompose_generators(pair)
            all_rows = (
                list(dec.q_tilde) + list(dec.p_tilde) + list(dec.p_rows) + list(dec.q_rows)
            )
            # the four sectors are independent and together span D
            assert len(all_rows) == pair.k_d
            assert gf2.rank(all_rows, n) == pair.k_d
            assert gf2.span_equal(all_rows, pair.D.generator_rows(), n)


def test_code_spec_roundtrip(n7_pair, n21_d3_pair):
    for pair in (n7_pair, n21_d3_pair):
        assert parse_code_spec(format_code_spec(pair)) == pair
    with pytest.raises(ValueError):
        parse_code_spec("n=7; p=1+x+x^3")  # missing q
    with pytest.raises(ValueError):
        parse_code_spec("n=7; p=1+x+x^3; q=1; z=2")
    with pytest.raises(ValueError):
        parse_code_spec("n=7; p=1+x+x^3; p=1; q=1")


def test_linear_code_operations():
    code = LinearCode(4, [0b0011, 0b0110, 0b0101])
    assert code.k == 2
    assert code.contains(0b0101)
    assert not code.contains(0b1000)
    d = code.dual()
    assert d.k == 2
    assert all(gf2.dot(a, b) == 0 for a in code.rows for b in d.rows)
    assert (code + d).k == gf2.rank(list(code.rows) + list(d.rows), 4)
    assert code.intersect(code) == code


def test_min_weight_excluding():
    hamming = CyclicCode(7, parse_poly("1+x+x^3"))
    sub = dual(hamming)
    # Hamming words outside its simplex dual have weight >= 3
    assert min_weight_excluding(hamming, sub) == 3
    assert min_weight_excluding(sub, hamming.as_linear()) == math.inf
