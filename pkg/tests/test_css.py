"""CSS-type constructions and their correspondence with the cyclic families."""

from __future__ import annotations

import pytest

from syncqec.css import (
    check_correspondence,
    check_dual_dimension_identity,
    check_two_sided_distance,
    correspondence_hybrid_inputs,
    correspondence_hybrid_subsystem_inputs,
    correspondence_subsystem_inputs,
    css_code,
    css_hybrid,
    css_hybrid_subsystem,
    css_subsystem,
    parameters_csv_row,
)
from syncqec.cyclic import CyclicCode, LinearCode
from syncqec.errors import ClassicalLogicalIsGaugeError, SyncqecError
from syncqec.family import CodeSpec, build_code
from syncqec.gf2poly import parse_poly


def _hamming_linear():
    return CyclicCode(7, parse_poly("1+x+x^3")).as_linear()


def test_css_code_steane():
    ham = _hamming_linear()
    css = css_code(ham, ham)
    assert (css.n, css.k, css.m, css.r) == (7, 1, 0, 0)
    assert css.d_x == 3 and css.d_z == 3 and css.d == 3
    assert css.inner_stabilizer_group().is_valid_stabilizer_group()
    assert parameters_csv_row(css) == "7,1,0,0,3,3,3"


def test_css_code_containment_required():
    ham = _hamming_linear()
    rep = LinearCode(3, [0b111])
    with pytest.raises(SyncqecError):
        css_code(rep, rep)  # dual(rep) is the even-weight code, not inside rep
    with pytest.raises(SyncqecError):
        css_code(ham, rep)  # length mismatch


def test_css_subsystem_reduces_to_code_case():
    ham = _hamming_linear()
    sub = css_subsystem(ham, ham)
    assert (sub.k, sub.m, sub.r) == (1, 0, 0)
    assert sub.inner_stabilizer_group().span_equal(
        css_code(ham, ham).inner_stabilizer_group()
    )


def test_css_hybrid_counts(n7_pair):
    css = css_hybrid(*correspondence_hybrid_inputs(n7_pair), compute_distance=False)
    gap = n7_pair.k_d - n7_pair.k_c
    assert css.kind == "hybrid"
    assert css.k == 2 * n7_pair.k_c - n7_pair.n
    assert css.m == 2 * gap
    assert len(css.translation_gens) == 2 * gap


def test_hybrid_subsystem_rejects_gauge_overlap():
    C = LinearCode(3, [0b111])
    D = LinearCode(3, [0b111, 0b001])
    with pytest.raises(ClassicalLogicalIsGaugeError):
        css_hybrid_subsystem(C, C, D, C)


def test_correspondences_n7(n7_pair, n7_basis):
    sub = css_subsystem(
        *correspondence_subsystem_inputs(n7_basis), compute_distance=False
    )
    q1 = build_code(n7_pair, n7_basis, CodeSpec("Q1"), compute_distance=False)
    assert check_correspondence(sub, q1) == []

    hyb = css_hybrid(
        *correspondence_hybrid_inputs(n7_pair), compute_distance=False
    )
    q5 = build_code(n7_pair, n7_basis, CodeSpec("Q5"), compute_distance=False)
    assert check_correspondence(hyb, q5) == []

    hs = css_hybrid_subsystem(
        *correspondence_hybrid_subsystem_inputs(n7_basis), compute_distance=False
    )
    q7 = build_code(n7_pair, n7_basis, CodeSpec("Q7"), compute_distance=False)
    assert check_correspondence(hs, q7) == []


def test_correspondence_detects_mismatch(n7_pair, n7_basis):
    sub = css_subsystem(
        *correspondence_subsystem_inputs(n7_basis), compute_distance=False
    )
    q5 = build_code(n7_pair, n7_basis, CodeSpec("Q5"), compute_distance=False)
    assert check_correspondence(sub, q5) != []


def test_two_sided_distance_agreement(n7_basis):
    hs = css_hybrid_subsystem(
        *correspondence_hybrid_subsystem_inputs(n7_basis), compute_distance=False
    )
    result = check_two_sided_distance(hs)
    assert result is not None
    lhs, rhs = result
    assert lhs == rhs == 1


def test_dual_dimension_identity():
    ham = _hamming_linear()
    assert check_dual_dimension_identity(ham, ham)
    assert check_dual_dimension_identity(ham, ham.dual())


def test_csv_row_blank_for_uncomputed():
    ham = _hamming_linear()
    css = css_code(ham, ham, compute_distance=False)
    assert parameters_csv_row(css) == "7,1,0,0,,,"
