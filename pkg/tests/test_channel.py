"""Transmission/decoding simulation: lookup tables, coset-leader decoding,
decode pipelines, and the encoding-circuit conjugation engine."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from syncqec.channel import (
    ChannelModel,
    FrameState,
    _apply_cnot,
    _measure,
    build_sync_table,
    check_ancilla_z_equivalence,
    check_table_redundancy,
    cnot_schedule,
    coset_leader_table,
    decode,
    encoding_circuit_report,
    run_simulation,
    syndrome,
    transmit,
    verify_encoding_circuit,
)
from syncqec.errors import SpecMismatchError, SyncqecError
from syncqec.family import CodeSpec, build_code
from syncqec.pauli import PauliGroupSpan, PauliOperator, pauli_x


def _inst(pair, basis, *args, **kwargs):
    return build_code(pair, basis, CodeSpec(*args, **kwargs), compute_distance=False)


# --- lookup tables ----------------------------------------------------------


def test_variant_a_golden_table(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q2", a_l=1, a_r=1)
    table = build_sync_table(inst, "A")
    assert table.domain_size == 3
    assert dict(table.table) == {(0, 1, 0): -1, (1, 0, 0): 0, (0, 0, 1): 1}
    assert table.lookup((1, 1, 1)) is None


def test_variant_b_table_covers_messages(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q3")
    table = build_sync_table(inst, "B")
    assert table.domain_size == 8
    assert set(table.table.values()) == set(itertools.product((0, 1), repeat=3))
    assert table.table[(0, 0, 0)] == (0, 0, 0)  # zero word -> zero message


def test_variant_c_golden_table(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q4", a_l=0, a_r=1, y=1)
    table = build_sync_table(inst, "C")
    assert dict(table.table) == {
        (1, 0, 0): ((0,), 0),
        (0, 0, 1): ((0,), 1),
        (1, 1, 0): ((1,), 0),
        (1, 0, 1): ((1,), 1),
    }


def test_table_variant_validation(n7_pair, n7_basis):
    q2 = _inst(n7_pair, n7_basis, "Q2", a_l=1, a_r=1)
    with pytest.raises(SpecMismatchError):
        build_sync_table(q2, "C")  # no window parameter y
    with pytest.raises(SpecMismatchError):
        build_sync_table(q2, "D")


def test_table_redundancy_and_ancilla_equivalence(n7_pair, n7_basis):
    q2 = _inst(n7_pair, n7_basis, "Q2", a_l=1, a_r=1)
    assert check_table_redundancy(q2, "A")
    assert check_ancilla_z_equivalence(q2)
    q4 = _inst(n7_pair, n7_basis, "Q4", a_l=0, a_r=1, y=1)
    assert check_table_redundancy(q4, "C")
    q3 = _inst(n7_pair, n7_basis, "Q3")
    assert check_table_redundancy(q3, "B")


# --- coset leaders ----------------------------------------------------------


def test_coset_leader_minimality_and_tie_break():
    leaders = coset_leader_table(4, [0b0011])
    assert leaders[(0,)] == 0
    assert leaders[(1,)] == 0b0001  # ties broken by smallest packed integer
    rows = [0b0011101, 0b0111010, 0b1110100]  # Hamming check rows
    leaders = coset_leader_table(7, rows)
    assert len(leaders) == 8
    assert all(e == 0 or e.bit_count() == 1 for e in leaders.values())
    for key, e in leaders.items():
        assert syndrome(rows, e) == key


def test_coset_leader_requires_independent_rows():
    with pytest.raises(SyncqecError):
        coset_leader_table(3, [0b011, 0b011])


# --- conjugation engine -----------------------------------------------------


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I = np.eye(2, dtype=complex)
_CNOT01 = np.array(
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex
)  # control qubit 0 (least significant), target qubit 1


def _dense2(op: PauliOperator) -> np.ndarray:
    m = np.array([[1]], dtype=complex)
    for i in range(2):
        f = _I
        if (op.x >> i) & 1:
            f = _X
        if (op.z >> i) & 1:
            f = f @ _Z
        m = np.kron(f, m)
    return (1j ** op.phase) * m


def test_apply_cnot_matches_dense_conjugation():
    swap = _CNOT01[[0, 2, 1, 3]][:, [0, 2, 1, 3]]  # control 1, target 0
    for x in range(4):
        for z in range(4):
            for phase in range(4):
                op = PauliOperator(2, x, z, phase)
                got = _dense2(_apply_cnot(op, 0, 1))
                want = _CNOT01 @ _dense2(op) @ _CNOT01
                assert np.allclose(got, want)
                got = _dense2(_apply_cnot(op, 1, 0))
                want = swap @ _dense2(op) @ swap
                assert np.allclose(got, want)


def test_cnot_schedule_shape():
    sched = cnot_schedule(7, 2, 1)
    assert sched == [(2, 9), (8, 1), (7, 0)]
    assert cnot_schedule(7, 0, 0) == []


def test_encoding_circuit_all_families_n7(n7_pair, n7_basis):
    from syncqec.family import representative_specs

    for spec in representative_specs(n7_pair, with_messages=True):
        assert verify_encoding_circuit(n7_pair, spec, n7_basis), spec.family


def test_encoding_circuit_cnot_order_independent(n7_pair, n7_basis):
    spec = CodeSpec("Q3", a_l=1, a_r=1, message_b=(1, 0, 1))
    sched = cnot_schedule(7, 1, 1)
    assert verify_encoding_circuit(n7_pair, spec, n7_basis, cnot_order=sched[::-1])


def test_encoding_circuit_detects_wrong_gate(n7_pair, n7_basis):
    spec = CodeSpec("Q3", a_l=1, a_r=1)
    sched = cnot_schedule(7, 1, 1)
    broken = [(t, c) for c, t in sched]  # controls and targets swapped
    ok, diffs = encoding_circuit_report(n7_pair, spec, n7_basis, cnot_order=broken)
    assert not ok and diffs


# --- channel and frames -----------------------------------------------------


def test_channel_model_validation():
    ChannelModel(p_x=0.1, p_z=0.0, shift_probs=((-1, 0.5), (1, 0.5)))
    with pytest.raises(SpecMismatchError):
        ChannelModel(p_x=1.5)
    with pytest.raises(SpecMismatchError):
        ChannelModel(shift_probs=((0, 0.5),))
    with pytest.raises(SpecMismatchError):
        ChannelModel(shift_probs=((0, -1.0), (1, 2.0)))


def test_transmit_deterministic_and_window_checks(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q2", a_l=1, a_r=1)
    ch = ChannelModel(p_x=0.2, p_z=0.1, shift_probs=((-1, 0.3), (0, 0.4), (1, 0.3)))
    f1 = transmit(inst, ch, "seed:0")
    f2 = transmit(inst, ch, "seed:0")
    assert (f1.true_alpha, f1.e_x, f1.e_z) == (f2.true_alpha, f2.e_x, f2.e_z)
    out = ChannelModel(shift_probs=((2, 1.0),))
    with pytest.raises(SpecMismatchError):
        transmit(inst, out, 0)  # out-of-window shift needs the adversarial flag
    with pytest.raises(SpecMismatchError):
        transmit(
            inst,
            ChannelModel(p_x=0.5, shift_probs=((2, 1.0),), adversarial=True),
            0,
        )
    adv = transmit(inst, ChannelModel(shift_probs=((2, 1.0),), adversarial=True), 0)
    assert adv.adversarial and adv.true_alpha == 2


# --- decode pipelines -------------------------------------------------------


def test_clean_decode_all_families_all_alpha(n7_pair, n7_basis):
    from syncqec.family import representative_specs

    for spec in representative_specs(n7_pair, with_messages=True):
        inst = build_code(n7_pair, n7_basis, spec, compute_distance=False)
        for alpha in range(-spec.a_l, spec.a_r + 1):
            frame = FrameState(
                inst, alpha, 0, 0, spec.message_b, spec.message_c
            )
            report = decode(frame)
            assert report.sync_success, (spec.family, alpha)
            assert report.classical_success, (spec.family, alpha)
            assert report.quantum_success, (spec.family, alpha)
            assert report.recovered_alpha == alpha


def test_clean_decode_q3_all_messages(n7_pair, n7_basis):
    for bits in itertools.product((0, 1), repeat=3):
        inst = _inst(n7_pair, n7_basis, "Q3", a_l=1, a_r=1, message_b=bits)
        for alpha in (-1, 0, 1):
            frame = FrameState(inst, alpha, 0, 0, bits, ())
            report = decode(frame)
            assert report.sync_success and report.classical_success
            assert report.recovered_b == bits


def test_adversarial_shift_is_flagged_uncorrectable(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q2", a_l=1, a_r=1)
    frame = FrameState(inst, 2, 0, 0, (), (), adversarial=True)
    report = decode(frame)
    assert not report.sync_success
    assert report.uncorrectable_sync
    # unextended families cannot recover any nonzero misalignment
    q5 = _inst(n7_pair, n7_basis, "Q5")
    report = decode(FrameState(q5, 1, 0, 0, (0, 0, 0), (0, 0, 0), adversarial=True))
    assert not report.sync_success and report.uncorrectable_sync


def test_single_error_correction_on_distance3_pair(n21_d3_pair):
    from syncqec.pairing import build_pairing_basis

    basis = build_pairing_basis(n21_d3_pair)
    inst = build_code(
        n21_d3_pair, basis, CodeSpec("Q3", a_l=1, a_r=1, message_b=(1, 1, 0)),
        compute_distance=False,
    )
    N = inst.N
    for pos in (0, 3, N - 1):
        for alpha in (-1, 0, 1):
            for e_x, e_z in ((1 << pos, 0), (0, 1 << pos), (1 << pos, 1 << pos)):
                frame = FrameState(inst, alpha, e_x, e_z, (1, 1, 0), ())
                report = decode(frame)
                assert report.sync_success and report.classical_success
                assert report.quantum_success, (pos, alpha, e_x, e_z)


def test_measure_rejects_non_stabilizer(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q5")
    span = PauliGroupSpan(inst.N, inst.stabilizer_gens)
    with pytest.raises(SyncqecError):
        _measure(span, pauli_x(inst.N, 1), 0, 0)


# --- simulation loop --------------------------------------------------------


def test_run_simulation_deterministic_and_clean(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q3", a_l=1, a_r=1, message_b=(1, 0, 1))
    ch = ChannelModel(shift_probs=((-1, 0.25), (0, 0.5), (1, 0.25)))
    rows1, summary1 = run_simulation(inst, ch, trials=50, seed=42)
    rows2, summary2 = run_simulation(inst, ch, trials=50, seed=42)
    assert rows1 == rows2 and summary1 == summary2
    assert summary1["rates"]["full"] == 1.0
    assert summary1["counts"]["sync"] == 50
    assert summary1["schema_version"] == 1
    _, other = run_simulation(inst, ch, trials=50, seed=43)
    assert other["counts"] == summary1["counts"]  # clean channel regardless of seed


def test_run_simulation_noisy_rates_below_one(n7_pair, n7_basis):
    inst = _inst(n7_pair, n7_basis, "Q3", a_l=1, a_r=1, message_b=(1, 0, 1))
    ch = ChannelModel(p_x=0.4, p_z=0.4, shift_probs=((0, 1.0),))
    _, summary = run_simulation(inst, ch, trials=200, seed=1)
    assert summary["rates"]["quantum"] < 1.0
    assert summary["rates"]["full"] < 1.0
    assert sum(summary["residual_classes"].values()) == 200
