"""Symbolic transmission and decoding simulation for the code families:
misalignment + Pauli noise channels, syndrome lookup tables, coset-leader
error decoding, per-family decode pipelines, and a conjugation engine that
verifies the encoding circuit against the family generator displays."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import gf2
from .cyclic import CyclicCodePair
from .errors import LemmaViolationError, SpecMismatchError, SyncqecError
from .family import (
    FAMILIES,
    SYNCHRONIZABLE_FAMILIES,
    CodeSpec,
    ExtendedCodeInstance,
    _b_vec,
    _marker_vector,
    _shift_left,
    build_code,
    mid_embed,
    wrap_embed,
)
from .pairing import PairingBasis, build_pairing_basis
from .pauli import (
    PauliGroupSpan,
    PauliOperator,
    inverse,
    multiply,
    pauli_x,
    pauli_z,
    symplectic_product,
)

__all__ = [
    "SyncLookupTable",
    "ChannelModel",
    "FrameState",
    "DecodeReport",
    "syndrome",
    "build_sync_table",
    "check_table_redundancy",
    "check_ancilla_z_equivalence",
    "coset_leader_table",
    "transmit",
    "decode",
    "run_simulation",
    "cnot_schedule",
    "encoding_circuit_report",
    "verify_encoding_circuit",
    "SIMULATION_SCHEMA_VERSION",
    "CSV_COLUMNS",
]

SIMULATION_SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "trial",
    "true_alpha",
    "error_x",
    "error_z",
    "recovered_alpha",
    "recovered_b",
    "recovered_c",
    "residual_class",
    "sync_success",
    "classical_success",
    "quantum_success",
)


def syndrome(h_rows: Sequence[int], word: int) -> Tuple[int, ...]:
    """Component-wise GF(2) dot products of the check rows against a word."""
    return tuple(gf2.dot(r, word) for r in h_rows)


# ---------------------------------------------------------------------------
# Sync/message lookup tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SyncLookupTable:
    """Injective map from a dual-sector Z/X syndrome to decoded labels.

    variant A: syndrome of the shifted marker -> alpha;
    variant B: syndrome of a message combination -> message bits;
    variant C: syndrome of the shifted message-dependent marker -> (c, alpha).
    """

    variant: str
    syndrome_rows: Tuple[int, ...]
    table: Mapping[Tuple[int, ...], object]
    domain_size: int

    def lookup(self, key: Tuple[int, ...]):
        return self.table.get(key)


def _message_words(q_rows: Sequence[int], length: int):
    """All (bits, vector) message combinations over the given q rows."""
    for m in range(1 << length):
        bits = tuple((m >> i) & 1 for i in range(length))
        v = 0
        for b, row in zip(bits, q_rows):
            if b:
                v ^= row
        yield bits, v


def build_sync_table(
    instance: ExtendedCodeInstance, variant: str
) -> SyncLookupTable:
    """Build the lookup table for a family instance and assert its injectivity.

    An injectivity failure raises LemmaViolationError: the table domains are
    exactly the ranges for which distinctness is provable, so a collision
    signals an implementation bug or an invalid code pair.
    """
    pair = instance.pair
    spec = instance.spec
    dec = instance.basis.decomposition
    n = pair.n
    gap = pair.k_d - pair.k_c
    rows = dec.p_tilde
    a_l, a_r = spec.a_l, spec.a_r
    q1 = dec.q_rows[0]
    table: Dict[Tuple[int, ...], object] = {}
    if variant == "A":
        if a_l + a_r >= gap:
            raise SpecMismatchError("variant A requires a_l + a_r < k_d - k_c")
        domain = a_l + a_r + 1
        for alpha in range(-a_l, a_r + 1):
            table[syndrome(rows, _shift_left(q1, n, alpha))] = alpha
    elif variant == "B":
        domain = 1 << gap
        for bits, v in _message_words(dec.q_rows, gap):
            table[syndrome(rows, v)] = bits
    elif variant == "C":
        y = spec.y
        if y is None:
            raise SpecMismatchError("variant C requires a window parameter y")
        if a_l + a_r >= gap - y:
            raise SpecMismatchError(
                "variant C requires a_l + a_r < k_d - k_c - y"
            )
        domain = (a_l + a_r + 1) << y
        for bits, v in _message_words(dec.q_rows[1 : y + 1], y):
            for alpha in range(-a_l, a_r + 1):
                table[syndrome(rows, _shift_left(q1 ^ v, n, alpha))] = (
                    bits,
                    alpha,
                )
    else:
        raise SpecMismatchError(f"unknown table variant {variant!r}")
    if len(table) != domain:
        raise LemmaViolationError(
            f"variant-{variant} lookup table not injective: "
            f"{len(table)} keys over a domain of {domain}"
        )
    return SyncLookupTable(
        variant=variant,
        syndrome_rows=tuple(rows),
        table=table,
        domain_size=domain,
    )


def check_table_redundancy(instance: ExtendedCodeInstance, variant: str) -> bool:
    """The reduced table (dual-sector rows only) is injective iff the table
    over the full check-row basis is: the extra rows are orthogonal to every
    domain word, so they contribute constant zero syndrome components."""
    reduced = build_sync_table(instance, variant)  # raises if non-injective
    dec = instance.basis.decomposition
    full_rows = tuple(dec.q_tilde) + tuple(dec.p_tilde)
    n_extra = len(dec.q_tilde)
    full_keys = set()
    pair = instance.pair
    spec = instance.spec
    n = pair.n
    gap = pair.k_d - pair.k_c
    q1 = dec.q_rows[0]
    words: List[int] = []
    if variant == "A":
        words = [
            _shift_left(q1, n, alpha)
            for alpha in range(-spec.a_l, spec.a_r + 1)
        ]
    elif variant == "B":
        words = [v for _, v in _message_words(dec.q_rows, gap)]
    elif variant == "C":
        y = spec.y or 0
        words = [
            _shift_left(q1 ^ v, n, alpha)
            for _, v in _message_words(dec.q_rows[1 : y + 1], y)
            for alpha in range(-spec.a_l, spec.a_r + 1)
        ]
    for w in words:
        key = syndrome(full_rows, w)
        if any(key[:n_extra]):
            return False  # supercode check rows must not see supercode words
        full_keys.add(key)
    return len(full_keys) == reduced.domain_size


def check_ancilla_z_equivalence(instance: ExtendedCodeInstance) -> bool:
    """A single Z error on any ancilla qubit is stabilizer-equivalent to a
    single Z error on its paired data-block qubit."""
    spec = instance.spec
    n = instance.pair.n
    a_l, a_r = spec.a_l, spec.a_r
    N = instance.N
    stab_rows = [g.x | (g.z << N) for g in instance.stabilizer_gens]
    basis, piv = gf2.rref(stab_rows, 2 * N)
    ok = True
    for i in range(a_l):
        diff = (1 << i) | (1 << (a_l + (n - a_l + i)))  # ancilla vs block Z
        ok &= gf2.reduce_vector(diff << N, basis, piv) == 0
    for i in range(a_r):
        diff = (1 << (a_l + n + i)) | (1 << (a_l + i))
        ok &= gf2.reduce_vector(diff << N, basis, piv) == 0
    return ok


# ---------------------------------------------------------------------------
# Coset-leader decoding for the classical supercode
# ---------------------------------------------------------------------------

_COSET_CACHE: Dict[Tuple[int, Tuple[int, ...]], Dict[Tuple[int, ...], int]] = {}


def coset_leader_table(n: int, check_rows: Sequence[int]) -> Dict[Tuple[int, ...], int]:
    """Syndrome -> minimum-weight error map over n bits (ties: smallest
    packed integer); memoized per check-row set."""
    key = (n, tuple(check_rows))
    cached = _COSET_CACHE.get(key)
    if cached is not None:
        return cached
    rows = list(check_rows)
    if gf2.rank(rows, n) != len(rows):
        raise SyncqecError("check rows must be linearly independent")
    target = 1 << len(rows)
    leaders: Dict[Tuple[int, ...], int] = {}
    for w in range(n + 1):
        if len(leaders) == target:
            break
        found: Dict[Tuple[int, ...], int] = {}
        for pos in combinations(range(n), w):
            e = 0
            for p in pos:
                e |= 1 << p
            s = syndrome(rows, e)
            if s in leaders:
                continue
            prev = found.get(s)
            if prev is None or e < prev:
                found[s] = e
        leaders.update(found)
    assert len(leaders) == target
    _COSET_CACHE[key] = leaders
    return leaders


# ---------------------------------------------------------------------------
# Channel model and frames
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChannelModel:
    """I.i.d. X/Z Pauli noise plus a misalignment-shift distribution."""

    p_x: float = 0.0
    p_z: float = 0.0
    shift_probs: Tuple[Tuple[int, float], ...] = ((0, 1.0),)
    adversarial: bool = False

    def __post_init__(self):
        if not (0.0 <= self.p_x <= 1.0 and 0.0 <= self.p_z <= 1.0):
            raise SpecMismatchError("error probabilities must lie in [0, 1]")
        total = 0.0
        for _, p in self.shift_probs:
            if p < 0:
                raise SpecMismatchError("shift probabilities must be >= 0")
            total += p
        if not math.isclose(total, 1.0, rel_tol=0, abs_tol=1e-9):
            raise SpecMismatchError("shift probabilities must sum to 1")


@dataclass(frozen=True)
class FrameState:
    """One transmitted frame: true misalignment, physical Pauli errors on the
    extended block, and the encoded classical messages."""

    instance: ExtendedCodeInstance
    true_alpha: int
    e_x: int
    e_z: int
    encoded_b: Tuple[int, ...]
    encoded_c: Tuple[int, ...]
    adversarial: bool = False


def _expected_message_lengths(instance: ExtendedCodeInstance) -> Tuple[int, int]:
    gap = instance.pair.k_d - instance.pair.k_c
    fam = instance.family
    y = instance.spec.y or 0
    expect_b = {"Q3": gap, "Q4": gap, "Q5": gap}.get(fam, 0)
    expect_c = {"Q4": y, "Q5": gap, "Q6": y, "Q7": gap}.get(fam, 0)
    return expect_b, expect_c


def transmit(
    instance: ExtendedCodeInstance, channel: ChannelModel, seed
) -> FrameState:
    """Sample one frame deterministically from the seed: misalignment first,
    then per-qubit X indicators, then per-qubit Z indicators."""
    spec = instance.spec
    N = instance.N
    rng = random.Random(seed)
    alphas = [a for a, _ in channel.shift_probs]
    weights = [p for _, p in channel.shift_probs]
    out_of_window = [
        a for a in alphas if not -spec.a_l <= a <= spec.a_r
    ]
    if out_of_window and not channel.adversarial:
        raise SpecMismatchError(
            f"shift support {out_of_window} outside the admissible window "
            f"[{-spec.a_l}, {spec.a_r}]; flag the channel adversarial"
        )
    if out_of_window and (channel.p_x or channel.p_z):
        raise SpecMismatchError(
            "adversarial out-of-window shifts are modeled for clean frames "
            "only (p_x = p_z = 0)"
        )
    alpha = rng.choices(alphas, weights=weights)[0]
    e_x = 0
    for i in range(N):
        if rng.random() < channel.p_x:
            e_x |= 1 << i
    e_z = 0
    for i in range(N):
        if rng.random() < channel.p_z:
            e_z |= 1 << i
    expect_b, expect_c = _expected_message_lengths(instance)
    encoded_b = tuple(spec.message_b) or (0,) * expect_b
    encoded_c = tuple(spec.message_c) or (0,) * expect_c
    return FrameState(
        instance=instance,
        true_alpha=alpha,
        e_x=e_x,
        e_z=e_z,
        encoded_b=encoded_b,
        encoded_c=encoded_c,
        adversarial=not -spec.a_l <= alpha <= spec.a_r,
    )


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecodeReport:
    """Outcome of one decode attempt, judged against the true frame."""

    recovered_alpha: Optional[int]
    recovered_b: Optional[Tuple[int, ...]]
    recovered_c: Optional[Tuple[int, ...]]
    correction: PauliOperator
    residual_class: str  # identity | stabilizer | gauge | logical-failure
    sync_success: bool
    classical_success: bool
    quantum_success: bool
    uncorrectable_sync: bool = False


class _DecoderContext:
    """Per-instance immutable decode state: stabilizer span, coset-leader
    table for the supercode, and the family's lookup tables."""

    def __init__(self, instance: ExtendedCodeInstance):
        pair = instance.pair
        spec = instance.spec
        dec = instance.basis.decomposition
        gap = pair.k_d - pair.k_c
        # re-check the window-coverage inequality chain per instance
        assert spec.a_l + spec.a_r < pair.n
        assert 2 * gap <= pair.n
        self.instance = instance
        self.span = PauliGroupSpan(instance.N, instance.stabilizer_gens)
        self.q_leaders = coset_leader_table(pair.n, list(dec.q_tilde))
        fam = instance.family
        self.sync_table: Optional[SyncLookupTable] = None
        self.b_table: Optional[SyncLookupTable] = None
        if fam in ("Q2", "Q3"):
            self.sync_table = build_sync_table(instance, "A")
        elif fam in ("Q4", "Q6"):
            self.sync_table = build_sync_table(instance, "C")
        if fam in ("Q3", "Q4", "Q5", "Q7"):
            self.b_table = build_sync_table(instance, "B")
        N = instance.N
        stab_rows = [g.x | (g.z << N) for g in instance.stabilizer_gens]
        self.stab_basis, self.stab_piv = gf2.rref(stab_rows, 2 * N)
        gauge_rows = stab_rows + [
            g.x | (g.z << N) for g in instance.gauge_gens
        ]
        self.gauge_basis, self.gauge_piv = gf2.rref(gauge_rows, 2 * N)


_CONTEXTS: Dict[int, Tuple[ExtendedCodeInstance, _DecoderContext]] = {}


def _context(instance: ExtendedCodeInstance) -> _DecoderContext:
    entry = _CONTEXTS.get(id(instance))
    if entry is not None and entry[0] is instance:
        return entry[1]
    ctx = _DecoderContext(instance)
    _CONTEXTS[id(instance)] = (instance, ctx)
    return ctx


def _measure(
    span: PauliGroupSpan, op: PauliOperator, e_x: int, e_z: int
) -> int:
    """Deterministic measurement outcome bit (0 -> +1, 1 -> -1) of a
    stabilizer element on the errored code state."""
    red = span.reduce(op)
    if not red.is_identity() or red.phase & 1:
        raise SyncqecError(
            f"measurement of {op.to_string()} is not deterministic"
        )
    return ((red.phase >> 1) ^ gf2.dot(op.z, e_x) ^ gf2.dot(op.x, e_z)) & 1


def _classify_residual(ctx: _DecoderContext, e_x: int, e_z: int) -> str:
    if e_x == 0 and e_z == 0:
        return "identity"
    N = ctx.instance.N
    row = e_x | (e_z << N)
    if gf2.reduce_vector(row, ctx.stab_basis, ctx.stab_piv) == 0:
        return "stabilizer"
    if gf2.reduce_vector(row, ctx.gauge_basis, ctx.gauge_piv) == 0:
        return "gauge"
    return "logical-failure"


def _x_correct_window(
    ctx: _DecoderContext, rows_at: List[int], e_x: int, e_z: int, shift: int
) -> int:
    """Measure Z checks embedded at the given rows and return the X
    correction (already embedded) from the supercode coset-leader table."""
    span = ctx.span
    key = tuple(
        _measure(span, pauli_z(ctx.instance.N, r), e_x, e_z) for r in rows_at
    )
    return ctx.q_leaders[key] << shift


def decode(frame: FrameState) -> DecodeReport:
    """Run the family-specific decode pipeline on one frame.

    All measurements are exact GF(2) functions of the frame: the phase of the
    measured operator's reduction in the stabilizer group plus its symplectic
    overlap with the accumulated error.
    """
    inst = frame.instance
    fam = inst.family
    if fam not in FAMILIES:
        raise SpecMismatchError(f"decode supports the base families, not {fam!r}")
    ctx = _context(inst)
    pair = inst.pair
    spec = inst.spec
    dec = inst.basis.decomposition
    n = pair.n
    N = inst.N
    a_l, a_r = spec.a_l, spec.a_r
    a = a_l + a_r
    alpha = frame.true_alpha
    e_x, e_z = frame.e_x, frame.e_z
    corr_x = corr_z = 0
    expect_b, expect_c = _expected_message_lengths(inst)
    recovered_alpha: Optional[int] = None
    recovered_b: Optional[Tuple[int, ...]] = None
    recovered_c: Optional[Tuple[int, ...]] = None
    uncorrectable = False

    def apply_x(v: int):
        nonlocal e_x, corr_x
        e_x ^= v
        corr_x ^= v

    def apply_z(v: int):
        nonlocal e_z, corr_z
        e_z ^= v
        corr_z ^= v

    in_window = -a_l <= alpha <= a_r

    if not in_window:
        # Out-of-window misalignment (clean frames only, enforced at
        # transmit). The receiver's dual-sector syndrome extends by the same
        # cyclic-shift formula; any table hit is necessarily a wrong alpha.
        w_enc = _marker_vector(pair, inst.basis, spec)
        if ctx.sync_table is not None:
            key = syndrome(dec.p_tilde, _shift_left(w_enc, n, alpha))
            hit = ctx.sync_table.lookup(key)
            if hit is None:
                uncorrectable = True
            elif ctx.sync_table.variant == "A":
                recovered_alpha = hit
            else:
                recovered_c, recovered_alpha = hit
        else:
            uncorrectable = True
    elif fam in SYNCHRONIZABLE_FAMILIES:
        # step 1: X-correct the receiver's presumed n-qubit window
        win_rows = [mid_embed(qt, n, a_l, a_r, alpha) for qt in dec.q_tilde]
        apply_x(_x_correct_window(ctx, win_rows, e_x, e_z, a_l + alpha))
        # step 2: dual-sector Z syndromes -> sync (and c) lookup
        key = tuple(
            _measure(
                ctx.span,
                pauli_z(N, mid_embed(pt, n, a_l, a_r, alpha)),
                e_x,
                e_z,
            )
            for pt in dec.p_tilde
        )
        hit = ctx.sync_table.lookup(key) if ctx.sync_table else None
        if hit is None:
            uncorrectable = True
        else:
            if ctx.sync_table.variant == "A":
                recovered_alpha = hit
            else:
                recovered_c, recovered_alpha = hit
            # step 3: realign; proceed only when the recovered offset is
            # right (a wrong offset leaves the receiver's later operators
            # outside the modeled block -- no false success either way)
            if recovered_alpha == alpha:
                # step 4: X-correct the whole block via the two n-windows
                last_rows = [qt << a for qt in dec.q_tilde]
                apply_x(_x_correct_window(ctx, last_rows, e_x, e_z, a))
                first_rows = list(dec.q_tilde)
                apply_x(_x_correct_window(ctx, first_rows, e_x, e_z, 0))
                # step 5: Z-correct via the wrapped X checks (ancilla Z
                # errors fold onto their paired block positions)
                key5 = tuple(
                    _measure(
                        ctx.span,
                        pauli_x(N, wrap_embed(qt, n, a_l, a_r, 0)),
                        e_x,
                        e_z,
                    )
                    for qt in dec.q_tilde
                )
                apply_z(ctx.q_leaders[key5] << a_l)
                # step 6: wrapped dual-sector X syndromes -> message b
                if ctx.b_table is not None and fam in ("Q3", "Q4"):
                    key6 = tuple(
                        _measure(
                            ctx.span,
                            pauli_x(N, wrap_embed(pt, n, a_l, a_r, 0)),
                            e_x,
                            e_z,
                        )
                        for pt in dec.p_tilde
                    )
                    recovered_b = ctx.b_table.lookup(key6)
    else:
        # unextended families: alpha is 0 in-window
        recovered_alpha = 0
        key1 = tuple(
            _measure(ctx.span, pauli_z(N, qt), e_x, e_z) for qt in dec.q_tilde
        )
        apply_x(ctx.q_leaders[key1])
        key2 = tuple(
            _measure(ctx.span, pauli_x(N, qt), e_x, e_z) for qt in dec.q_tilde
        )
        apply_z(ctx.q_leaders[key2])
        if fam == "Q5":
            key_b = tuple(
                _measure(ctx.span, pauli_x(N, pt), e_x, e_z)
                for pt in dec.p_tilde
            )
            recovered_b = ctx.b_table.lookup(key_b) if ctx.b_table else None
            key_c = tuple(
                _measure(ctx.span, pauli_z(N, pt), e_x, e_z)
                for pt in dec.p_tilde
            )
            recovered_c = ctx.b_table.lookup(key_c) if ctx.b_table else None
        elif fam == "Q7":
            key_c = tuple(
                _measure(ctx.span, pauli_z(N, pt), e_x, e_z)
                for pt in dec.p_tilde
            )
            recovered_c = ctx.b_table.lookup(key_c) if ctx.b_table else None

    residual_class = _classify_residual(ctx, e_x, e_z)
    sync_success = recovered_alpha == alpha
    classical_success = True
    if expect_b:
        classical_success &= recovered_b == frame.encoded_b
    if expect_c:
        classical_success &= recovered_c == frame.encoded_c
    quantum_success = residual_class in ("identity", "stabilizer", "gauge")
    return DecodeReport(
        recovered_alpha=recovered_alpha,
        recovered_b=recovered_b,
        recovered_c=recovered_c,
        correction=PauliOperator(N, corr_x, corr_z, 0),
        residual_class=residual_class,
        sync_success=sync_success,
        classical_success=bool(classical_success),
        quantum_success=quantum_success,
        uncorrectable_sync=uncorrectable,
    )


def run_simulation(
    instance: ExtendedCodeInstance,
    channel: ChannelModel,
    trials: int,
    seed: int,
) -> Tuple[List[Dict[str, object]], Dict[str, object]]:
    """Monte-Carlo loop with per-trial seeds; returns per-trial rows and a
    summary with exact counts."""
    rows: List[Dict[str, object]] = []
    counts = {"sync": 0, "classical": 0, "quantum": 0, "full": 0}
    residuals: Dict[str, int] = {}
    for t in range(trials):
        frame = transmit(instance, channel, f"{seed}:{t}")
        report = decode(frame)
        rows.append(
            {
                "trial": t,
                "true_alpha": frame.true_alpha,
                "error_x": frame.e_x,
                "error_z": frame.e_z,
                "recovered_alpha": (
                    "" if report.recovered_alpha is None else report.recovered_alpha
                ),
                "recovered_b": (
                    "" if report.recovered_b is None
                    else "".join(str(b) for b in report.recovered_b)
                ),
                "recovered_c": (
                    "" if report.recovered_c is None
                    else "".join(str(b) for b in report.recovered_c)
                ),
                "residual_class": report.residual_class,
                "sync_success": int(report.sync_success),
                "classical_success": int(report.classical_success),
                "quantum_success": int(report.quantum_success),
            }
        )
        counts["sync"] += report.sync_success
        counts["classical"] += report.classical_success
        counts["quantum"] += report.quantum_success
        counts["full"] += (
            report.sync_success
            and report.classical_success
            and report.quantum_success
        )
        residuals[report.residual_class] = (
            residuals.get(report.residual_class, 0) + 1
        )
    summary = {
        "schema_version": SIMULATION_SCHEMA_VERSION,
        "family": instance.family,
        "n": instance.pair.n,
        "N": instance.N,
        "trials": trials,
        "seed": seed,
        "counts": counts,
        "rates": {
            k: (v / trials if trials else 0.0) for k, v in counts.items()
        },
        "residual_classes": residuals,
    }
    return rows, summary


# ---------------------------------------------------------------------------
# Encoding-circuit verification
# ---------------------------------------------------------------------------


def cnot_schedule(n: int, a_l: int, a_r: int) -> List[Tuple[int, int]]:
    """0-based (control, target) list of the encoding circuit's CNOT stage."""
    sched = [(a_l + i, a_l + n + i) for i in range(a_r)]
    sched += [(n + i, i) for i in range(a_l - 1, -1, -1)]
    return sched


def _apply_cnot(op: PauliOperator, c: int, t: int) -> PauliOperator:
    # In the ordered i^p X(x) Z(z) form, CNOT conjugation acts on the X and Z
    # parts independently (X_c -> X_c X_t, Z_t -> Z_c Z_t) and is phase-free:
    # the well-known tableau sign term belongs to the convention that
    # normalizes Y = iXZ, not to this one.
    xc = (op.x >> c) & 1
    zt = (op.z >> t) & 1
    return PauliOperator(op.n, op.x ^ (xc << t), op.z ^ (zt << c), op.phase)


def _conjugate_by_pauli(op: PauliOperator, gate: PauliOperator) -> PauliOperator:
    return PauliOperator(
        op.n, op.x, op.z, (op.phase + 2 * symplectic_product(gate, op)) & 3
    )


_INITIAL_LEVEL = {"Q1": 1, "Q2": 2, "Q6": 2, "Q7": 2, "Q3": 3, "Q4": 3, "Q5": 3}


def encoding_circuit_report(
    pair: CyclicCodePair,
    spec: CodeSpec,
    basis: Optional[PairingBasis] = None,
    cnot_order: Optional[Sequence[Tuple[int, int]]] = None,
) -> Tuple[bool, List[str]]:
    """Conjugate the initial code's generators through the encoding circuit
    and compare, phase-exactly, against the family's generator display.

    Returns (ok, diffs): the stabilizer spans must match exactly, and every
    conjugated gauge/logical operator must equal its display counterpart up
    to multiplication by an exact-phase stabilizer element.
    """
    if basis is None:
        basis = build_pairing_basis(pair)
    instance = build_code(pair, basis, spec, compute_distance=False)
    fam = spec.family
    dec = basis.decomposition
    n = pair.n
    a_l, a_r = spec.a_l, spec.a_r
    N = n + a_l + a_r
    level = _INITIAL_LEVEL[fam]

    # Step 1: the initial code's generators on n qubits
    stab0: List[PauliOperator] = []
    gauge0: List[PauliOperator] = []
    for qt in dec.q_tilde:
        stab0.append(pauli_x(n, qt))
        stab0.append(pauli_z(n, qt))
    if level >= 2:
        stab0 += [pauli_z(n, pt) for pt in dec.p_tilde]
    if level == 3:
        stab0 += [pauli_x(n, pt) for pt in dec.p_tilde]
    if level == 1:
        # sector order matches the display's named gauge sectors
        gauge0 += [pauli_x(n, tt) for tt in basis.t_tilde]
        gauge0 += [pauli_z(n, tt) for tt in basis.t_tilde]
        gauge0 += [pauli_x(n, tx) for tx in basis.t_x]
        gauge0 += [pauli_z(n, tz) for tz in basis.t_z]
    elif level == 2:
        gauge0 += [pauli_x(n, pt) for pt in dec.p_tilde]
        gauge0 += [pauli_z(n, qp) for qp in basis.q_prime]
    logical0 = [pauli_x(n, sx) for sx in basis.s_x] + [
        pauli_z(n, sz) for sz in basis.s_z
    ]

    # Step 2: conjugate by the marker/message operators
    gates: List[PauliOperator] = []
    w_vec = _marker_vector(pair, basis, spec)
    b_vec = _b_vec(pair, basis, spec)
    if w_vec:
        gates.append(pauli_x(n, w_vec))
    if b_vec:
        gates.append(pauli_z(n, b_vec))

    def conjugate(op: PauliOperator) -> PauliOperator:
        for g in gates:
            op = _conjugate_by_pauli(op, g)
        return op

    stab1 = [conjugate(op) for op in stab0]
    gauge1 = [conjugate(op) for op in gauge0]
    logical1 = [conjugate(op) for op in logical0]

    # Step 3: adjoin ancillas in |0> (single-Z rows, pre-interaction)
    def embed(op: PauliOperator) -> PauliOperator:
        return PauliOperator(N, op.x << a_l, op.z << a_l, op.phase)

    stab2 = [embed(op) for op in stab1]
    stab2 += [pauli_z(N, 1 << i) for i in range(a_l)]
    stab2 += [pauli_z(N, 1 << (a_l + n + i)) for i in range(a_r)]
    gauge2 = [embed(op) for op in gauge1]
    logical2 = [embed(op) for op in logical1]

    # Step 4: the CNOT stage
    sched = cnot_schedule(n, a_l, a_r) if cnot_order is None else list(cnot_order)
    for c, t in sched:
        stab2 = [_apply_cnot(op, c, t) for op in stab2]
        gauge2 = [_apply_cnot(op, c, t) for op in gauge2]
        logical2 = [_apply_cnot(op, c, t) for op in logical2]

    diffs: List[str] = []
    conj_span = PauliGroupSpan(N, stab2)
    display_span = instance.stabilizer_group()
    if not conj_span.span_equal(display_span, "exact-phase"):
        diffs.append("stabilizer spans differ (exact-phase)")
    display_gauge = list(instance.gauge_gens)
    if len(display_gauge) != len(gauge2):
        diffs.append(
            f"gauge generator counts differ: circuit {len(gauge2)}, "
            f"display {len(display_gauge)}"
        )
    else:
        for i, (g_conj, g_disp) in enumerate(zip(gauge2, display_gauge)):
            if not display_span.contains(
                multiply(g_conj, inverse(g_disp)), "exact-phase"
            ):
                diffs.append(
                    f"gauge generator {i}: circuit {g_conj.to_string()} != "
                    f"display {g_disp.to_string()} modulo stabilizers"
                )
    display_logical = list(instance.logical_x) + list(instance.logical_z)
    for i, (l_conj, l_disp) in enumerate(zip(logical2, display_logical)):
        if not display_span.contains(
            multiply(l_conj, inverse(l_disp)), "exact-phase"
        ):
            diffs.append(
                f"logical operator {i}: circuit {l_conj.to_string()} != "
                f"display {l_disp.to_string()} modulo stabilizers"
            )
    return not diffs, diffs


def verify_encoding_circuit(
    pair: CyclicCodePair,
    spec: CodeSpec,
    basis: Optional[PairingBasis] = None,
    cnot_order: Optional[Sequence[Tuple[int, int]]] = None,
) -> bool:
    """True iff the encoding circuit reproduces the family's generator
    display exactly (see encoding_circuit_report for the diff)."""
    ok, _ = encoding_circuit_report(pair, spec, basis, cnot_order)
    return ok
