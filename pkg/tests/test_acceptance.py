"""Acceptance suite: the ten release criteria.

Each test prints exactly one PASS/FAIL line (visible with `pytest -s` or in
the captured output of a failing run) and asserts the criterion.
"""

from __future__ import annotations

import itertools
import time

from syncqec.channel import (
    ChannelModel,
    FrameState,
    build_sync_table,
    decode,
    verify_encoding_circuit,
)
from syncqec.cli import main as cli_main
from syncqec.css import (
    check_correspondence,
    check_two_sided_distance,
    correspondence_hybrid_inputs,
    correspondence_hybrid_subsystem_inputs,
    correspondence_subsystem_inputs,
    css_code,
    css_hybrid,
    css_hybrid_subsystem,
    css_subsystem,
)
from syncqec.cyclic import CyclicCode, format_code_spec, min_distance
from syncqec.errors import LemmaViolationError
from syncqec.family import (
    SYNCHRONIZABLE_FAMILIES,
    CodeSpec,
    build_code,
    representative_specs,
    shifted_generator_view,
    tradeoff_check,
)
from syncqec.gf2poly import parse_poly
from syncqec.pairing import build_pairing_basis, verify_pairing_properties
from syncqec.pauli import PauliGroupSpan

_BASES = {}


def _basis(pair):
    if pair not in _BASES:
        _BASES[pair] = build_pairing_basis(pair)
    return _BASES[pair]


def _report(num: int, description: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion-{num}: {description}"
    if detail:
        line += f" [{detail}]"
    print(line)
    assert ok, line


def test_criterion_01_pairing_properties(corpus):
    """All eight pairing properties hold on every corpus pair, < 10 s."""
    t0 = time.perf_counter()
    failures = []
    count = 0
    for pairs in corpus.values():
        for pair in pairs:
            fails = verify_pairing_properties(_basis(pair))
            if fails:
                failures.append((format_code_spec(pair), fails))
            count += 1
    elapsed = time.perf_counter() - t0
    _report(
        1,
        "eight pairing properties hold exactly on the full corpus in < 10 s",
        not failures and elapsed < 10.0,
        f"{count} pairs, {elapsed:.2f}s" + (f", failures={failures}" if failures else ""),
    )


def test_criterion_02_table_injectivity(corpus):
    """Every lookup table is injective over its full domain, exhaustively
    over all admissible windows and message dimensions, < 30 s."""
    t0 = time.perf_counter()
    tables = 0
    violation = None
    try:
        for pairs in corpus.values():
            for pair in pairs:
                basis = _basis(pair)
                gap = pair.k_d - pair.k_c
                for a_l in range(gap):
                    for a_r in range(gap - a_l):
                        inst = build_code(
                            pair, basis, CodeSpec("Q2", a_l=a_l, a_r=a_r),
                            compute_distance=False,
                        )
                        build_sync_table(inst, "A")
                        tables += 1
                inst = build_code(pair, basis, CodeSpec("Q3"), compute_distance=False)
                build_sync_table(inst, "B")
                tables += 1
                for y in range(1, gap - 1):
                    for a_l in range(gap - y):
                        for a_r in range(gap - y - a_l):
                            inst = build_code(
                                pair, basis, CodeSpec("Q4", a_l=a_l, a_r=a_r, y=y),
                                compute_distance=False,
                            )
                            build_sync_table(inst, "C")
                            tables += 1
    except LemmaViolationError as exc:
        violation = str(exc)
    elapsed = time.perf_counter() - t0
    _report(
        2,
        "all sync/message lookup tables injective over their full domains in < 30 s",
        violation is None and elapsed < 30.0,
        f"{tables} tables, {elapsed:.2f}s" + (f", violation={violation}" if violation else ""),
    )


def test_criterion_03_tradeoff_identity(corpus):
    """r + m + d_sync_max equals 2*gap (synchronizable) or 2*gap + 1
    (non-synchronizable) for every admissible spec on the corpus."""
    bad = []
    checked = 0
    for pairs in corpus.values():
        for pair in pairs:
            basis = _basis(pair)
            gap = pair.k_d - pair.k_c
            specs = [CodeSpec("Q1"), CodeSpec("Q5"), CodeSpec("Q7")]
            for fam in ("Q2", "Q3"):
                for a_l in range(gap):
                    for a_r in range(gap - a_l):
                        specs.append(CodeSpec(fam, a_l=a_l, a_r=a_r))
            for fam in ("Q4", "Q6"):
                for y in range(1, gap - 1):
                    for a_l in range(gap - y):
                        for a_r in range(gap - y - a_l):
                            specs.append(CodeSpec(fam, a_l=a_l, a_r=a_r, y=y))
            for spec in specs:
                inst = build_code(pair, basis, spec, compute_distance=False)
                if not tradeoff_check(inst):
                    bad.append((format_code_spec(pair), spec))
                checked += 1
    _report(
        3,
        "trade-off identity exact for all families and admissible specs",
        not bad,
        f"{checked} instances" + (f", bad={bad[:3]}" if bad else ""),
    )


def test_criterion_04_encoding_circuits(corpus, n15_pair):
    """The encoding circuit reproduces the generator displays phase-exactly
    for every synchronizable family on n=7 and an n=15 pair."""
    bad = []
    checked = 0
    for pair in list(corpus[7]) + [n15_pair]:
        basis = _basis(pair)
        for spec in representative_specs(pair, with_messages=True):
            if spec.family not in SYNCHRONIZABLE_FAMILIES:
                continue
            if not verify_encoding_circuit(pair, spec, basis):
                bad.append((format_code_spec(pair), spec.family))
            checked += 1
    _report(
        4,
        "encoding circuit matches the family displays phase-exactly (n=7 and n=15)",
        not bad and checked >= 8,
        f"{checked} circuits" + (f", bad={bad}" if bad else ""),
    )


def test_criterion_05_shifted_view_spans(corpus):
    """For every admissible alpha, the shifted generator view spans the same
    inner and outer stabilizer groups phase-exactly."""
    bad = []
    checked = 0
    for pairs in corpus.values():
        for pair in pairs:
            basis = _basis(pair)
            for spec in representative_specs(pair, with_messages=True):
                inst = build_code(pair, basis, spec, compute_distance=False)
                base_inner = inst.stabilizer_group()
                base_outer = inst.outer_stabilizer_group()
                for alpha in range(-spec.a_l, spec.a_r + 1):
                    view = shifted_generator_view(inst, alpha)
                    stab = (
                        view["stab_x_qtilde"]
                        + view["stab_z_qtilde"]
                        + view["stab_x_ptilde"]
                        + view["stab_z_ptilde"]
                        + view["ancilla"]
                    )
                    if not PauliGroupSpan(inst.N, stab).span_equal(
                        base_inner, "exact-phase"
                    ):
                        bad.append((format_code_spec(pair), spec.family, alpha, "inner"))
                    outer = (
                        view["stab_x_qtilde"]
                        + view["stab_z_qtilde"]
                        + view["ancilla"]
                        + (
                            view["stab_z_ptilde"]
                            if spec.family in ("Q2", "Q3")
                            else []
                        )
                    )
                    if not PauliGroupSpan(inst.N, outer).span_equal(
                        base_outer, "exact-phase"
                    ):
                        bad.append((format_code_spec(pair), spec.family, alpha, "outer"))
                    checked += 1
    _report(
        5,
        "shifted generator views span the unshifted stabilizer groups phase-exactly",
        not bad,
        f"{checked} (instance, alpha) views" + (f", bad={bad[:3]}" if bad else ""),
    )


def test_criterion_06_end_to_end_decoding(n21_d3_pair):
    """Exhaustive single-error sweep on a distance-3 supercode pair: 100%
    sync, classical, and quantum success, < 5 min."""
    t0 = time.perf_counter()
    assert min_distance(n21_d3_pair.D) == 3
    basis = build_pairing_basis(n21_d3_pair)
    gap = n21_d3_pair.k_d - n21_d3_pair.k_c
    assert 1 << gap <= 1 << 6  # all messages, within the 2^6 cap
    fails = 0
    frames = 0
    for bits in itertools.product((0, 1), repeat=gap):
        inst = build_code(
            n21_d3_pair,
            basis,
            CodeSpec("Q3", a_l=1, a_r=1, message_b=bits),
            compute_distance=False,
        )
        singles = [0] + [1 << i for i in range(inst.N)]
        for alpha in (-1, 0, 1):
            for e_x in singles:
                for e_z in singles:
                    report = decode(FrameState(inst, alpha, e_x, e_z, bits, ()))
                    frames += 1
                    if not (
                        report.sync_success
                        and report.classical_success
                        and report.quantum_success
                    ):
                        fails += 1
    elapsed = time.perf_counter() - t0
    _report(
        6,
        "exhaustive misalignment + single-error sweep decodes with 100% success in < 5 min",
        fails == 0 and elapsed < 300.0,
        f"{frames} frames, {fails} failures, {elapsed:.1f}s",
    )


def test_criterion_07_css_correspondences(corpus):
    """The three CSS constructions reproduce the Q1/Q5/Q7 groups span-exactly
    for every corpus pair."""
    bad = []
    checked = 0
    for pairs in corpus.values():
        for pair in pairs:
            basis = _basis(pair)
            cases = (
                (
                    css_subsystem(
                        *correspondence_subsystem_inputs(basis), compute_distance=False
                    ),
                    "Q1",
                ),
                (
                    css_hybrid(
                        *correspondence_hybrid_inputs(pair), compute_distance=False
                    ),
                    "Q5",
                ),
                (
                    css_hybrid_subsystem(
                        *correspondence_hybrid_subsystem_inputs(basis),
                        compute_distance=False,
                    ),
                    "Q7",
                ),
            )
            for css, fam in cases:
                inst = build_code(pair, basis, CodeSpec(fam), compute_distance=False)
                fails = check_correspondence(css, inst)
                if fails:
                    bad.append((format_code_spec(pair), fam, fails))
                checked += 1
    _report(
        7,
        "CSS subsystem/hybrid/hybrid-subsystem correspondences hold on the full corpus",
        not bad,
        f"{checked} correspondences" + (f", bad={bad[:3]}" if bad else ""),
    )


def test_criterion_08_steane_reproduction():
    """css_code on two copies of the [7,4] Hamming code is a [[7,1,3]] code
    with the distance computed, not asserted."""
    ham = CyclicCode(7, parse_poly("1+x+x^3")).as_linear()
    css = css_code(ham, ham, compute_distance=True)
    ok = (
        css.n == 7
        and css.k == 1
        and css.d_x == 3
        and css.d_z == 3
        and css.d == 3
    )
    _report(8, "css_code(Hamming, Hamming) reproduces [[7,1,3]] with computed distance",
            ok, f"n={css.n} k={css.k} d={css.d}")


def test_criterion_09_two_sided_distance(corpus):
    """Both evaluations of the hybrid-subsystem distance agree wherever the
    spans are enumerable (rank <= 24)."""
    bad = []
    evaluated = 0
    for pairs in corpus.values():
        for pair in pairs:
            basis = _basis(pair)
            css = css_hybrid_subsystem(
                *correspondence_hybrid_subsystem_inputs(basis), compute_distance=False
            )
            result = check_two_sided_distance(css)
            if result is None:
                continue
            evaluated += 1
            lhs, rhs = result
            if lhs != rhs:
                bad.append((format_code_spec(pair), lhs, rhs))
    _report(
        9,
        "two-sided distance evaluations agree on all enumerable instances",
        not bad and evaluated >= 1,
        f"{evaluated} instances evaluated" + (f", bad={bad}" if bad else ""),
    )


def test_criterion_10_simulation_determinism(tmp_path):
    """cmd_simulate with a fixed seed writes byte-identical outputs."""
    outputs = []
    for name in ("a", "b"):
        outdir = tmp_path / name
        code = cli_main(
            [
                "simulate", "--n", "7", "--p", "1+x+x^3", "--q", "1",
                "--family", "Q3", "--al", "1", "--ar", "1",
                "--message-b", "110",
                "--shift-probs=-1:0.2,0:0.6,1:0.2",
                "--px", "0.05", "--pz", "0.05",
                "--trials", "200", "--seed", "11",
                "--output-dir", str(outdir),
            ]
        )
        assert code == 0
        outputs.append(
            (
                (outdir / "sim_trials.csv").read_bytes(),
                (outdir / "sim_summary.json").read_bytes(),
            )
        )
    ok = outputs[0] == outputs[1]
    _report(10, "cmd_simulate is byte-identical under a fixed seed", ok)
