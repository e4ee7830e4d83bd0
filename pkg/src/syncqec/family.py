"""The seven synchronizable/hybrid/subsystem code families built on the
extended block of n+a_l+a_r qubits, their initial codes, gauge-fixing
relations, shifted generator views, and the trade-off checker."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .cyclic import CyclicCodePair
from .errors import OperatorNotGaugeError, SpecMismatchError
from .pairing import PairingBasis, build_pairing_basis
from .pauli import (
    PauliGroupSpan,
    PauliOperator,
    min_weight_in_set_difference,
    pauli_x,
    pauli_z,
)

__all__ = [
    "FAMILIES",
    "SYNCHRONIZABLE_FAMILIES",
    "CodeSpec",
    "CodeParams",
    "ExtendedCodeInstance",
    "build_code",
    "build_initial_code",
    "gauge_fix",
    "shifted_generator_view",
    "tradeoff_check",
    "representative_specs",
    "mid_embed",
    "wrap_embed",
]

FAMILIES = ("Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7")
SYNCHRONIZABLE_FAMILIES = ("Q2", "Q3", "Q4", "Q6")
_dot = gf2.dot


def mid_embed(v: int, n: int, a_l: int, a_r: int, alpha: int = 0) -> int:
    """Place an n-bit vector at block offset a_l + alpha inside N qubits."""
    if not -a_l <= alpha <= a_r:
        raise ValueError("alpha out of range")
    return v << (a_l + alpha)


def wrap_embed(v: int, n: int, a_l: int, a_r: int, alpha: int = 0) -> int:
    """Cyclic wrap of an n-bit vector around the extended block at offset alpha:
    (last a_l+alpha bits | v | first a_r-alpha bits)."""
    if not -a_l <= alpha <= a_r:
        raise ValueError("alpha out of range")
    left = a_l + alpha
    right = a_r - alpha
    out = v << (a_l + alpha)
    if left:
        out |= v >> (n - left)
    if right:
        out |= (v & ((1 << right) - 1)) << (a_l + alpha + n)
    return out


def _shift_left(v: int, n: int, alpha: int) -> int:
    """Cyclic shift by -alpha (left when alpha > 0) of an n-bit vector."""
    a = (-alpha) % n
    mask = (1 << n) - 1
    return ((v << a) | (v >> (n - a))) & mask if a else v


@dataclass(frozen=True)
class CodeSpec:
    """Family choice plus extension sizes and classical messages."""

    family: str
    a_l: int = 0
    a_r: int = 0
    y: Optional[int] = None
    message_b: Tuple[int, ...] = ()
    message_c: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecMismatchError(f"unknown family {self.family!r}")
        if self.a_l < 0 or self.a_r < 0:
            raise SpecMismatchError("ancilla counts must be non-negative")


@dataclass(frozen=True)
class CodeParams:
    """Parameter tuple (n, k : m, r, d, d_sync_max)."""

    n: int
    k: int
    m: int
    r: int
    d: object  # int, math.inf, or None when not computed
    d_claimed: int
    d_is_computed: bool
    d_sync_max: int


@dataclass(frozen=True)
class ExtendedCodeInstance:
    """One constructed code: generator lists with phases plus parameters."""

    family: str
    spec: CodeSpec
    pair: CyclicCodePair
    basis: PairingBasis
    N: int
    stabilizer_gens: Tuple[PauliOperator, ...]  # inner list (stabilizes the state)
    outer_stabilizer_gens: Tuple[PauliOperator, ...]  # message-independent part
    gauge_named: Dict[str, Tuple[PauliOperator, ...]]
    logical_x: Tuple[PauliOperator, ...]
    logical_z: Tuple[PauliOperator, ...]
    translation_gens: Tuple[PauliOperator, ...]
    params: CodeParams

    @property
    def gauge_gens(self) -> Tuple[PauliOperator, ...]:
        return tuple(op for ops in self.gauge_named.values() for op in ops)

    def stabilizer_group(self) -> PauliGroupSpan:
        return PauliGroupSpan(self.N, self.stabilizer_gens)

    def outer_stabilizer_group(self) -> PauliGroupSpan:
        return PauliGroupSpan(self.N, self.outer_stabilizer_gens)

    def gauge_group(self) -> PauliGroupSpan:
        """Inner gauge group span (stabilizers plus gauge operators)."""
        return PauliGroupSpan(self.N, self.stabilizer_gens + self.gauge_gens)

    def to_json_dict(self) -> Dict:
        return {
            "family": self.family,
            "N": self.N,
            "params": {
                "n": self.params.n,
                "k": self.params.k,
                "m": self.params.m,
                "r": self.params.r,
                "d": None if self.params.d is None else (
                    "inf" if self.params.d == math.inf else self.params.d
                ),
                "d_claimed": self.params.d_claimed,
                "d_is_computed": self.params.d_is_computed,
                "d_sync_max": self.params.d_sync_max,
            },
            "stabilizers": [g.to_string() for g in self.stabilizer_gens],
            "outer_stabilizers": [g.to_string() for g in self.outer_stabilizer_gens],
            "gauge": {k: [g.to_string() for g in v] for k, v in self.gauge_named.items()},
            "logical_x": [g.to_string() for g in self.logical_x],
            "logical_z": [g.to_string() for g in self.logical_z],
            "translations": [g.to_string() for g in self.translation_gens],
        }


def _validate_spec(pair: CyclicCodePair, spec: CodeSpec) -> None:
    gap = pair.k_d - pair.k_c
    fam = spec.family
    if fam in ("Q1", "Q5", "Q7"):
        if spec.a_l or spec.a_r:
            raise SpecMismatchError(f"{fam} does not extend the block (a_l=a_r=0)")
        if spec.y is not None:
            raise SpecMismatchError(f"{fam} takes no window parameter y")
    if fam in ("Q2", "Q3"):
        if spec.a_l + spec.a_r >= gap:
            raise SpecMismatchError(
                f"{fam} requires a_l + a_r < k_d - k_c = {gap}"
            )
        if spec.y is not None:
            raise SpecMismatchError(f"{fam} takes no window parameter y")
    if fam in ("Q4", "Q6"):
        y = spec.y
        if y is None or not 1 <= y <= gap - 2:
            if fam == "Q6" and y == gap - 1:
                raise SpecMismatchError(
                    "y = k_d-k_c-1 degenerates: the marker vector can encode one "
                    "more classical bit, which is the Q7 construction; use Q7"
                )
            raise SpecMismatchError(
                f"{fam} requires y in 1..k_d-k_c-2 = 1..{gap - 2}"
            )
        if spec.a_l + spec.a_r >= gap - y:
            raise SpecMismatchError(
                f"{fam} requires a_l + a_r < k_d - k_c - y = {gap - y}"
            )
    # message lengths
    expect_b = {"Q3": gap, "Q4": gap, "Q5": gap}.get(fam, 0)
    expect_c = {"Q4": spec.y or 0, "Q5": gap, "Q6": spec.y or 0, "Q7": gap}.get(fam, 0)
    if spec.message_b and len(spec.message_b) != expect_b:
        raise SpecMismatchError(f"{fam} expects message b of length {expect_b}")
    if spec.message_c and len(spec.message_c) != expect_c:
        raise SpecMismatchError(f"{fam} expects message c of length {expect_c}")
    if expect_b == 0 and spec.message_b:
        raise SpecMismatchError(f"{fam} takes no message b")
    if expect_c == 0 and spec.message_c:
        raise SpecMismatchError(f"{fam} takes no message c")


def _message_vector(bits: Sequence[int], rows: Sequence[int]) -> int:
    v = 0
    for b, row in zip(bits, rows):
        if b:
            v ^= row
    return v


def _b_vec(pair: CyclicCodePair, basis: PairingBasis, spec: CodeSpec) -> int:
    gap = pair.k_d - pair.k_c
    bits = spec.message_b or (0,) * gap
    return _message_vector(bits, basis.decomposition.q_rows)


def _c_vec(pair: CyclicCodePair, basis: PairingBasis, spec: CodeSpec) -> int:
    """The c-dependent part of the Z-phase marker vector (family-specific)."""
    q_rows = basis.decomposition.q_rows
    gap = pair.k_d - pair.k_c
    fam = spec.family
    if fam in ("Q4", "Q6"):
        y = spec.y or 0
        bits = spec.message_c or (0,) * y
        return _message_vector(bits, q_rows[1 : y + 1])
    if fam in ("Q5", "Q7"):
        bits = spec.message_c or (0,) * gap
        return _message_vector(bits, q_rows)
    return 0


def _marker_vector(pair: CyclicCodePair, basis: PairingBasis, spec: CodeSpec) -> int:
    """Total X-type vector applied by the encoding (marker + c-encoding)."""
    fam = spec.family
    q1 = basis.decomposition.q_rows[0] if basis.decomposition.q_rows else 0
    if fam in ("Q2", "Q3"):
        return q1
    if fam in ("Q4", "Q6"):
        return q1 ^ _c_vec(pair, basis, spec)
    if fam in ("Q5", "Q7"):
        return _c_vec(pair, basis, spec)
    return 0


def _ancilla_rows(n: int, a_l: int, a_r: int) -> List[Tuple[int, int]]:
    """Post-encoding ancilla Z-stabilizer rows as (x, z) pairs on N qubits."""
    rows = []
    for i in range(a_l):
        # left ancilla i pairs with block position n - a_l + i
        rows.append((0, (1 << i) | (1 << (a_l + n - a_l + i))))
    for i in range(a_r):
        # right ancilla i pairs with block position i
        rows.append((0, (1 << (a_l + i)) | (1 << (a_l + n + i))))
    return rows


def _family_counts(pair: CyclicCodePair, spec: CodeSpec) -> Tuple[int, int, int]:
    """(m, r, d_sync_max) for the family row."""
    gap = pair.k_d - pair.k_c
    fam = spec.family
    y = spec.y or 0
    table = {
        "Q1": (0, 2 * gap, 1),
        "Q2": (0, gap, gap),
        "Q3": (gap, 0, gap),
        "Q4": (gap + y, 0, gap - y),
        "Q5": (2 * gap, 0, 1),
        "Q6": (y, gap, gap - y),
        "Q7": (gap, gap, 1),
    }
    return table[fam]


def _generator_view(
    pair: CyclicCodePair,
    basis: PairingBasis,
    spec: CodeSpec,
    alpha: int,
) -> Dict[str, List[PauliOperator]]:
    """All generator lists of the family at window offset alpha.

    alpha = 0 reproduces the defining displays; other admissible alpha values
    give the shifted views whose spans must coincide with the alpha = 0 spans.
    """
    n = pair.n
    a_l, a_r = spec.a_l, spec.a_r
    N = n + a_l + a_r
    fam = spec.family
    dec = basis.decomposition
    b_vec = _b_vec(pair, basis, spec)
    w_vec = _marker_vector(pair, basis, spec)
    b_shift = _shift_left(b_vec, n, alpha) if b_vec else 0
    w_shift = _shift_left(w_vec, n, alpha) if w_vec else 0

    def mid(v: int) -> int:
        return mid_embed(v, n, a_l, a_r, alpha)

    def wrap(v: int) -> int:
        return wrap_embed(v, n, a_l, a_r, alpha)

    out: Dict[str, List[PauliOperator]] = {
        "stab_x_qtilde": [],
        "stab_z_qtilde": [],
        "stab_x_ptilde": [],
        "stab_z_ptilde": [],
        "ancilla": [],
        "gauge_x": [],
        "gauge_z": [],
        "logical_x": [],
        "logical_z": [],
        "translations": [],
    }
    extended = fam in ("Q2", "Q3", "Q4", "Q6")
    for qt in dec.q_tilde:
        if extended:
            out["stab_x_qtilde"].append(pauli_x(N, wrap(qt)))
            out["stab_z_qtilde"].append(pauli_z(N, mid(qt)))
        else:
            out["stab_x_qtilde"].append(pauli_x(N, qt))
            out["stab_z_qtilde"].append(pauli_z(N, qt))
    if extended:
        out["ancilla"] = [
            PauliOperator(N, x, z) for x, z in _ancilla_rows(n, a_l, a_r)
        ]
    # dual-sector stabilizer rows with message/marker phases
    if fam in ("Q2", "Q4", "Q6"):
        for pt in dec.p_tilde:
            out["stab_z_ptilde"].append(
                pauli_z(N, mid(pt), 2 * _dot(pt, w_shift))
            )
    if fam == "Q3":
        for pt in dec.p_tilde:
            out["stab_z_ptilde"].append(
                pauli_z(N, mid(pt), 2 * _dot(pt, w_shift))
            )
            out["stab_x_ptilde"].append(
                pauli_x(N, wrap(pt), 2 * _dot(pt, b_shift))
            )
    if fam == "Q4":
        for pt in dec.p_tilde:
            out["stab_x_ptilde"].append(
                pauli_x(N, wrap(pt), 2 * _dot(pt, b_shift))
            )
    if fam == "Q5":
        c_vec = _c_vec(pair, basis, spec)
        for pt in dec.p_tilde:
            out["stab_x_ptilde"].append(pauli_x(N, pt, 2 * _dot(pt, b_vec)))
            out["stab_z_ptilde"].append(pauli_z(N, pt, 2 * _dot(pt, c_vec)))
    if fam == "Q7":
        for pt in dec.p_tilde:
            out["stab_z_ptilde"].append(pauli_z(N, pt, 2 * _dot(pt, w_vec)))
    # gauge operators
    if fam == "Q1":
        for tt in basis.t_tilde:
            out["gauge_x"].append(pauli_x(N, tt))
            out["gauge_z"].append(pauli_z(N, tt))
        for tx in basis.t_x:
            out["gauge_x"].append(pauli_x(N, tx))
        for tz in basis.t_z:
            out["gauge_z"].append(pauli_z(N, tz))
    if fam in ("Q2", "Q6"):
        for pt in dec.p_tilde:
            out["gauge_x"].append(pauli_x(N, wrap(pt)))
        for qp in basis.q_prime:
            out["gauge_z"].append(
                pauli_z(N, mid(qp), 2 * _dot(qp, w_shift))
            )
    if fam == "Q7":
        for pt in dec.p_tilde:
            out["gauge_x"].append(pauli_x(N, pt))
        for qp in basis.q_prime:
            out["gauge_z"].append(pauli_z(N, qp, 2 * _dot(qp, w_vec)))
    # logical pairs
    for sx, sz in zip(basis.s_x, basis.s_z):
        if extended:
            out["logical_x"].append(pauli_x(N, wrap(sx), 2 * _dot(sx, b_shift)))
            out["logical_z"].append(pauli_z(N, mid(sz), 2 * _dot(sz, w_shift)))
        else:
            out["logical_x"].append(pauli_x(N, sx, 2 * _dot(sx, b_vec)))
            out["logical_z"].append(pauli_z(N, sz, 2 * _dot(sz, w_vec)))
    # translation operators (flip one classical bit each)
    q_rows = dec.q_rows
    if fam in ("Q3", "Q4"):
        for qm in q_rows:
            out["translations"].append(pauli_z(N, mid(qm)))
    if fam == "Q4":
        for qm in q_rows[1 : (spec.y or 0) + 1]:
            out["translations"].append(pauli_x(N, wrap(qm)))
    if fam == "Q5":
        for qm in q_rows:
            out["translations"].append(pauli_z(N, qm))
        for qm in q_rows:
            out["translations"].append(pauli_x(N, qm))
    if fam == "Q6":
        for qm in q_rows[1 : (spec.y or 0) + 1]:
            out["translations"].append(pauli_x(N, wrap(qm)))
    if fam == "Q7":
        for qm in q_rows:
            out["translations"].append(pauli_x(N, qm))
    return out


def _assemble(
    pair: CyclicCodePair,
    basis: PairingBasis,
    spec: CodeSpec,
    view: Dict[str, List[PauliOperator]],
    compute_distance: bool,
) -> ExtendedCodeInstance:
    n = pair.n
    N = n + spec.a_l + spec.a_r
    fam = spec.family
    stab = (
        view["stab_x_qtilde"]
        + view["stab_z_qtilde"]
        + view["stab_x_ptilde"]
        + view["stab_z_ptilde"]
        + view["ancilla"]
    )
    # outer stabilizers: the message-independent generators
    outer = list(view["stab_x_qtilde"]) + list(view["stab_z_qtilde"]) + list(view["ancilla"])
    if fam in ("Q2", "Q3"):
        outer += view["stab_z_ptilde"]  # marker phase fixed by the family, not a message
    gauge_named: Dict[str, Tuple[PauliOperator, ...]] = {}
    if fam == "Q1":
        gap = pair.k_d - pair.k_c
        gx, gz = view["gauge_x"], view["gauge_z"]
        gauge_named = {
            "X_ttilde": tuple(gx[:gap]),
            "Z_ttilde": tuple(gz[:gap]),
            "X_tx": tuple(gx[gap:]),
            "Z_tz": tuple(gz[gap:]),
        }
    elif fam in ("Q2", "Q6", "Q7"):
        gauge_named = {
            "X_ptilde": tuple(view["gauge_x"]),
            "Z_qprime": tuple(view["gauge_z"]),
        }
    m, r, d_sync = _family_counts(pair, spec)
    k = 2 * pair.k_c - n
    d_claimed = _claimed_distance(pair)
    d_val, computed = _distance(pair, spec, stab, outer, gauge_named, view, N, compute_distance)
    params = CodeParams(
        n=N,
        k=k,
        m=m,
        r=r,
        d=d_val,
        d_claimed=d_claimed,
        d_is_computed=computed,
        d_sync_max=d_sync,
    )
    inst = ExtendedCodeInstance(
        family=fam,
        spec=spec,
        pair=pair,
        basis=basis,
        N=N,
        stabilizer_gens=tuple(stab),
        outer_stabilizer_gens=tuple(outer),
        gauge_named=gauge_named,
        logical_x=tuple(view["logical_x"]),
        logical_z=tuple(view["logical_z"]),
        translation_gens=tuple(view["translations"]),
        params=params,
    )
    return inst


_dd_cache: Dict[Tuple[int, int], object] = {}


def _claimed_distance(pair: CyclicCodePair) -> object:
    """d_d of the supercode (exhaustive when its dimension permits)."""
    key = (pair.n, pair.D.gen_poly.bits)
    if key not in _dd_cache:
        if pair.k_d <= 24:
            from .cyclic import min_distance

            _dd_cache[key] = min_distance(pair.D)
        else:
            _dd_cache[key] = None
    return _dd_cache[key]


def _distance(
    pair: CyclicCodePair,
    spec: CodeSpec,
    stab: List[PauliOperator],
    outer: List[PauliOperator],
    gauge_named: Dict[str, Tuple[PauliOperator, ...]],
    view: Dict[str, List[PauliOperator]],
    N: int,
    compute: bool,
):
    """Exhaustive dressed distance when the span rank permits, else claimed."""
    if not compute:
        return None, False
    outer_rows = [(g.x, g.z) for g in outer]
    rank_cs = 2 * N - gf2.rank([x | (z << N) for x, z in outer_rows], 2 * N)
    if rank_cs > 24:
        return None, False
    from .pauli import centralizer_basis

    cs = centralizer_basis(PauliGroupSpan(N, outer))
    gauge = [op for ops in gauge_named.values() for op in ops]
    excluded = PauliGroupSpan(N, tuple(stab) + tuple(gauge))
    d = min_weight_in_set_difference(cs, excluded)
    return d, True


def build_code(
    pair: CyclicCodePair,
    basis: Optional[PairingBasis] = None,
    spec: Optional[CodeSpec] = None,
    compute_distance: bool = True,
) -> ExtendedCodeInstance:
    """Construct one family instance from a nested pair and its pairing basis."""
    if spec is None:
        raise SpecMismatchError("spec is required")
    if basis is None:
        basis = build_pairing_basis(pair)
    _validate_spec(pair, spec)
    view = _generator_view(pair, basis, spec, alpha=0)
    return _assemble(pair, basis, spec, view, compute_distance)


def shifted_generator_view(
    instance: ExtendedCodeInstance, alpha: int
) -> Dict[str, List[PauliOperator]]:
    """Generator lists at window offset alpha (admissible -a_l..a_r)."""
    spec = instance.spec
    if not -spec.a_l <= alpha <= spec.a_r:
        raise ValueError("alpha out of range")
    return _generator_view(instance.pair, instance.basis, spec, alpha)


def build_initial_code(
    pair: CyclicCodePair,
    basis: Optional[PairingBasis] = None,
    level: int = 1,
    compute_distance: bool = False,
) -> ExtendedCodeInstance:
    """The three initial (unextended, unencoded) codes the families start from.

    level 1: subsystem code with all dual-sector gauge pairs free;
    level 2: Z-type dual-sector generators fixed into the stabilizer;
    level 3: both X- and Z-type dual-sector generators fixed (subspace code).
    """
    if basis is None:
        basis = build_pairing_basis(pair)
    n = pair.n
    dec = basis.decomposition
    if level == 1:
        return build_code(pair, basis, CodeSpec("Q1"), compute_distance)
    stab: List[PauliOperator] = []
    for qt in dec.q_tilde:
        stab.append(pauli_x(n, qt))
        stab.append(pauli_z(n, qt))
    gauge_named: Dict[str, Tuple[PauliOperator, ...]] = {}
    if level == 2:
        stab += [pauli_z(n, pt) for pt in dec.p_tilde]
        gauge_named = {
            "X_ptilde": tuple(pauli_x(n, pt) for pt in dec.p_tilde),
            "Z_qprime": tuple(pauli_z(n, qp) for qp in basis.q_prime),
        }
        m, r, d_sync = 0, pair.k_d - pair.k_c, 1
    elif level == 3:
        stab += [pauli_x(n, pt) for pt in dec.p_tilde]
        stab += [pauli_z(n, pt) for pt in dec.p_tilde]
        m, r, d_sync = 0, 0, 1
    else:
        raise ValueError("level must be 1, 2, or 3")
    spec = CodeSpec("Q1")  # placeholder spec: unextended, no messages
    params = CodeParams(
        n=n,
        k=2 * pair.k_c - n,
        m=m,
        r=r,
        d=None,
        d_claimed=_claimed_distance(pair),
        d_is_computed=False,
        d_sync_max=d_sync,
    )
    return ExtendedCodeInstance(
        family=f"Q0_{level}",
        spec=spec,
        pair=pair,
        basis=basis,
        N=n,
        stabilizer_gens=tuple(stab),
        outer_stabilizer_gens=tuple(stab),
        gauge_named=gauge_named,
        logical_x=tuple(pauli_x(n, sx) for sx in basis.s_x),
        logical_z=tuple(pauli_z(n, sz) for sz in basis.s_z),
        translation_gens=(),
        params=params,
    )


_GAUGE_PARTNERS = {
    "Z_ttilde": "X_tx",
    "X_ttilde": "Z_tz",
    "X_ptilde": "Z_qprime",
    "Z_qprime": "X_ptilde",
}


def gauge_fix(instance: ExtendedCodeInstance, which: str) -> ExtendedCodeInstance:
    """Fix a named set of gauge operators into the stabilizer group.

    Their anticommuting partners leave the gauge group (they become
    destabilizer/translation operators of the finer code).
    """
    if which not in instance.gauge_named:
        raise OperatorNotGaugeError(
            f"{which!r} is not a gauge sector of this instance "
            f"(available: {sorted(instance.gauge_named)})"
        )
    if which not in _GAUGE_PARTNERS:
        raise OperatorNotGaugeError(f"{which!r} has no registered partner sector")
    partner = _GAUGE_PARTNERS[which]
    fixed = instance.gauge_named[which]
    new_gauge = {
        k: v
        for k, v in instance.gauge_named.items()
        if k not in (which, partner)
    }
    removed_pairs = len(fixed)
    params = instance.params
    new_params = CodeParams(
        n=params.n,
        k=params.k,
        m=params.m,
        r=params.r - removed_pairs,
        d=None,
        d_claimed=params.d_claimed,
        d_is_computed=False,
        d_sync_max=params.d_sync_max,
    )
    new_translations = instance.translation_gens + tuple(
        instance.gauge_named.get(partner, ())
    )
    return ExtendedCodeInstance(
        family=instance.family + f"+fix({which})",
        spec=instance.spec,
        pair=instance.pair,
        basis=instance.basis,
        N=instance.N,
        stabilizer_gens=instance.stabilizer_gens + tuple(fixed),
        outer_stabilizer_gens=instance.outer_stabilizer_gens + tuple(fixed),
        gauge_named=new_gauge,
        logical_x=instance.logical_x,
        logical_z=instance.logical_z,
        translation_gens=new_translations,
        params=new_params,
    )


def representative_specs(
    pair: CyclicCodePair, with_messages: bool = False
) -> List[CodeSpec]:
    """One admissible spec per applicable family for this pair (Q4/Q6 need
    k_d - k_c >= 3); optionally with nonzero alternating message bits."""
    gap = pair.k_d - pair.k_c

    def bits(length: int) -> Tuple[int, ...]:
        if not with_messages:
            return ()
        return tuple((i + 1) % 2 for i in range(length))

    specs = [CodeSpec("Q1")]
    a_r = min(1, gap - 1)
    a_l = 1 if gap > 2 else 0
    specs.append(CodeSpec("Q2", a_l=a_l, a_r=a_r))
    specs.append(CodeSpec("Q3", a_l=a_l, a_r=a_r, message_b=bits(gap)))
    if gap >= 3:
        y = 1
        a_r4 = min(1, gap - y - 1)
        a_l4 = 1 if gap - y > 2 else 0
        specs.append(
            CodeSpec(
                "Q4", a_l=a_l4, a_r=a_r4, y=y,
                message_b=bits(gap), message_c=bits(y),
            )
        )
        specs.append(CodeSpec("Q6", a_l=a_l4, a_r=a_r4, y=y, message_c=bits(y)))
    specs.append(CodeSpec("Q5", message_b=bits(gap), message_c=bits(gap)))
    specs.append(CodeSpec("Q7", message_c=bits(gap)))
    return specs


def tradeoff_check(instance: ExtendedCodeInstance) -> bool:
    """r + m + d_sync_max against 2(k_d-k_c) (+1 when non-synchronizable)."""
    gap = instance.pair.k_d - instance.pair.k_c
    total = instance.params.r + instance.params.m + instance.params.d_sync_max
    if instance.params.d_sync_max > 1:
        return total == 2 * gap
    return total == 2 * gap + 1
