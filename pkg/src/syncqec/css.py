"""General CSS-type constructions over arbitrary binary linear codes:
plain stabilizer, subsystem, hybrid, and hybrid subsystem variants, plus the
correspondence checks against the cyclic-pair families and the two-sided
distance-formula cross-check."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .cyclic import LinearCode, min_weight_excluding
from .errors import (
    ClassicalLogicalIsGaugeError,
    ConstructionInconsistencyError,
    DimensionTooLargeError,
    SyncqecError,
)
from .family import ExtendedCodeInstance
from .pauli import (
    PauliGroupSpan,
    PauliOperator,
    centralizer_basis,
    min_weight_in_set_difference,
    pauli_x,
    pauli_z,
)

__all__ = [
    "CssInstance",
    "css_code",
    "css_subsystem",
    "css_hybrid",
    "css_hybrid_subsystem",
    "correspondence_subsystem_inputs",
    "correspondence_hybrid_inputs",
    "correspondence_hybrid_subsystem_inputs",
    "check_correspondence",
    "check_two_sided_distance",
    "parameters_csv_row",
]


@dataclass(frozen=True)
class CssInstance:
    """A constructed CSS-type code with its group generator lists."""

    kind: str  # "code" | "subsystem" | "hybrid" | "hybrid-subsystem"
    n: int
    inner_stabilizer_gens: Tuple[PauliOperator, ...]
    outer_stabilizer_gens: Tuple[PauliOperator, ...]
    inner_gauge_gens: Tuple[PauliOperator, ...]  # generators beyond the stabilizers
    outer_gauge_gens: Tuple[PauliOperator, ...]
    translation_gens: Tuple[PauliOperator, ...]
    k: int
    m: int
    r: int
    d_x: object
    d_z: object

    @property
    def d(self) -> object:
        if self.d_x is None or self.d_z is None:
            return None
        return min(self.d_x, self.d_z)

    def inner_stabilizer_group(self) -> PauliGroupSpan:
        return PauliGroupSpan(self.n, self.inner_stabilizer_gens)

    def outer_stabilizer_group(self) -> PauliGroupSpan:
        return PauliGroupSpan(self.n, self.outer_stabilizer_gens)

    def inner_gauge_group(self) -> PauliGroupSpan:
        return PauliGroupSpan(self.n, self.inner_stabilizer_gens + self.inner_gauge_gens)

    def outer_gauge_group(self) -> PauliGroupSpan:
        return PauliGroupSpan(self.n, self.outer_stabilizer_gens + self.outer_gauge_gens)

    def to_json_dict(self) -> Dict:
        def strs(ops):
            return [op.to_string() for op in ops]

        return {
            "kind": self.kind,
            "n": self.n,
            "params": {
                "k": self.k,
                "m": self.m,
                "r": self.r,
                "d_x": _json_d(self.d_x),
                "d_z": _json_d(self.d_z),
                "d": _json_d(self.d),
            },
            "inner_stabilizers": strs(self.inner_stabilizer_gens),
            "outer_stabilizers": strs(self.outer_stabilizer_gens),
            "inner_gauge": strs(self.inner_gauge_gens),
            "outer_gauge": strs(self.outer_gauge_gens),
            "translations": strs(self.translation_gens),
        }


def _json_d(d):
    if d is None:
        return None
    return "inf" if d == math.inf else d


def _xops(code: LinearCode) -> List[PauliOperator]:
    return [pauli_x(code.n, r) for r in code.rows]


def _zops(code: LinearCode) -> List[PauliOperator]:
    return [pauli_z(code.n, r) for r in code.rows]


def _safe_min_weight(code: LinearCode, excluded: LinearCode, compute: bool):
    if not compute or code.k > 24:
        return None
    return min_weight_excluding(code, excluded)


def _check_length(*codes: LinearCode) -> int:
    n = codes[0].n
    if any(c.n != n for c in codes):
        raise SyncqecError("code lengths differ")
    return n


def css_code(C_x: LinearCode, C_z: LinearCode, compute_distance: bool = True) -> CssInstance:
    """Plain CSS stabilizer code from a dual-containing pair of codes."""
    n = _check_length(C_x, C_z)
    cz_perp = C_z.dual()
    cx_perp = C_x.dual()
    if not C_x.contains_code(cz_perp):
        raise SyncqecError("containment violated: dual(C_z) must be inside C_x")
    stab = tuple(_xops(cz_perp) + _zops(cx_perp))
    return CssInstance(
        kind="code",
        n=n,
        inner_stabilizer_gens=stab,
        outer_stabilizer_gens=stab,
        inner_gauge_gens=(),
        outer_gauge_gens=(),
        translation_gens=(),
        k=C_x.k + C_z.k - n,
        m=0,
        r=0,
        d_x=_safe_min_weight(C_x, cz_perp, compute_distance),
        d_z=_safe_min_weight(C_z, cx_perp, compute_distance),
    )


def css_subsystem(
    C_x: LinearCode, C_z: LinearCode, compute_distance: bool = True
) -> CssInstance:
    """CSS subsystem code: the dual pair need not be contained; the overlap
    defect becomes gauge degrees of freedom."""
    n = _check_length(C_x, C_z)
    cz_perp = C_z.dual()
    cx_perp = C_x.dual()
    r_x = (C_x + cz_perp).k
    r_z = (C_z + cx_perp).k
    k1 = r_x + C_z.k - n
    k2 = r_z + C_x.k - n
    if k1 != k2:
        raise ConstructionInconsistencyError(
            f"logical-count formulas disagree: r_x+k_z-n={k1} vs r_z+k_x-n={k2}"
        )
    r1 = r_x - C_x.k
    r2 = r_z - C_z.k
    if r1 != r2:
        raise ConstructionInconsistencyError(
            f"gauge-count formulas disagree: r_x-k_x={r1} vs r_z-k_z={r2}"
        )
    stab = tuple(
        _xops(C_x.intersect(cz_perp)) + _zops(C_z.intersect(cx_perp))
    )
    gauge = tuple(_xops(cz_perp) + _zops(cx_perp))
    return CssInstance(
        kind="subsystem",
        n=n,
        inner_stabilizer_gens=stab,
        outer_stabilizer_gens=stab,
        inner_gauge_gens=gauge,
        outer_gauge_gens=gauge,
        translation_gens=(),
        k=k1,
        m=0,
        r=r1,
        d_x=_safe_min_weight(C_x + cz_perp, cz_perp, compute_distance),
        d_z=_safe_min_weight(C_z + cx_perp, cx_perp, compute_distance),
    )


def _translation_reps(D: LinearCode, C: LinearCode) -> List[int]:
    """Canonical representatives for a basis of the quotient D/C.

    Each representative is the minimum-integer element of its coset (reducing
    against the fully reduced basis of C clears every pivot bit, and any other
    coset element re-sets some pivot, strictly increasing the packed value).
    """
    basis, pivots = gf2.rref(list(C.rows), C.n)
    reps = []
    acc = list(C.rows)
    for row in D.rows:
        if gf2.is_in_span(row, acc, D.n):
            continue
        acc.append(row)
        reps.append(gf2.reduce_vector(row, basis, pivots))
    return reps


def css_hybrid(
    C_x: LinearCode,
    C_z: LinearCode,
    D_x: LinearCode,
    D_z: LinearCode,
    compute_distance: bool = True,
) -> CssInstance:
    """Hybrid CSS code: supercodes D carry classical messages as translations
    of the inner stabilizer group."""
    n = _check_length(C_x, C_z, D_x, D_z)
    cz_perp = C_z.dual()
    cx_perp = C_x.dual()
    if not C_x.contains_code(cz_perp):
        raise SyncqecError("containment violated: dual(C_z) must be inside C_x")
    if not (D_x.contains_code(C_x) and D_z.contains_code(C_z)):
        raise SyncqecError("containment violated: D must be a supercode of C")
    inner = tuple(_xops(cz_perp) + _zops(cx_perp))
    outer = tuple(_xops(D_z.dual()) + _zops(D_x.dual()))
    translations = tuple(
        [pauli_x(n, v) for v in _translation_reps(D_x, C_x)]
        + [pauli_z(n, v) for v in _translation_reps(D_z, C_z)]
    )
    return CssInstance(
        kind="hybrid",
        n=n,
        inner_stabilizer_gens=inner,
        outer_stabilizer_gens=outer,
        inner_gauge_gens=(),
        outer_gauge_gens=(),
        translation_gens=translations,
        k=C_x.k + C_z.k - n,
        m=D_x.k + D_z.k - C_x.k - C_z.k,
        r=0,
        d_x=_safe_min_weight(D_x, cz_perp, compute_distance),
        d_z=_safe_min_weight(D_z, cx_perp, compute_distance),
    )


def _coset_hits_code(D: LinearCode, C: LinearCode, other: LinearCode) -> bool:
    """Whether (D \\ C) intersects `other` (all length-n linear codes)."""
    # (D \ C) ∩ other nonempty  ⇔  (D ∩ other) ⊄ C
    inter = D.intersect(other)
    return not C.contains_code(inter)


def css_hybrid_subsystem(
    C_x: LinearCode,
    C_z: LinearCode,
    D_x: LinearCode,
    D_z: LinearCode,
    compute_distance: bool = True,
) -> CssInstance:
    """Hybrid subsystem CSS code: gauge structure from the dual-overlap defect
    plus classical messages from the supercodes."""
    n = _check_length(C_x, C_z, D_x, D_z)
    cz_perp = C_z.dual()
    cx_perp = C_x.dual()
    if not (D_x.contains_code(C_x) and D_z.contains_code(C_z)):
        raise SyncqecError("containment violated: D must be a supercode of C")
    if _coset_hits_code(D_x, C_x, cz_perp) or _coset_hits_code(D_z, C_z, cx_perp):
        raise ClassicalLogicalIsGaugeError(
            "a classical translation coset meets the dual overlap; its "
            "operator would be a gauge operator, not a classical logical"
        )
    r_x = (C_x + cz_perp).k
    r_z = (C_z + cx_perp).k
    k1 = r_x + C_z.k - n
    k2 = r_z + C_x.k - n
    if k1 != k2:
        raise ConstructionInconsistencyError(
            f"logical-count formulas disagree: r_x+k_z-n={k1} vs r_z+k_x-n={k2}"
        )
    r1 = r_x - C_x.k
    r2 = r_z - C_z.k
    if r1 != r2:
        raise ConstructionInconsistencyError(
            f"gauge-count formulas disagree: r_x-k_x={r1} vs r_z-k_z={r2}"
        )
    inner_stab = tuple(
        _xops(C_x.intersect(cz_perp)) + _zops(C_z.intersect(cx_perp))
    )
    outer_stab = tuple(
        _xops(D_x.intersect(D_z.dual())) + _zops(D_z.intersect(D_x.dual()))
    )
    inner_gauge = tuple(_xops(cz_perp) + _zops(cx_perp))
    outer_gauge = tuple(_xops(D_z.dual()) + _zops(D_x.dual()))
    translations = tuple(
        [pauli_x(n, v) for v in _translation_reps(D_x, C_x)]
        + [pauli_z(n, v) for v in _translation_reps(D_z, C_z)]
    )
    return CssInstance(
        kind="hybrid-subsystem",
        n=n,
        inner_stabilizer_gens=inner_stab,
        outer_stabilizer_gens=outer_stab,
        inner_gauge_gens=inner_gauge,
        outer_gauge_gens=outer_gauge,
        translation_gens=translations,
        k=k1,
        m=D_x.k + D_z.k - C_x.k - C_z.k,
        r=r1,
        d_x=_safe_min_weight(D_x + D_z.dual(), cz_perp, compute_distance),
        d_z=_safe_min_weight(D_z + D_x.dual(), cx_perp, compute_distance),
    )


# --- correspondences with the cyclic-pair families -------------------------


def correspondence_subsystem_inputs(basis) -> Tuple[LinearCode, LinearCode]:
    """Classical inputs whose subsystem construction matches the plain
    subsystem family built from the same pairing basis."""
    n = basis.n
    C_x = LinearCode(n, list(basis.q_tilde) + list(basis.s_x))
    C_z = LinearCode(n, list(basis.q_tilde) + list(basis.s_z))
    return C_x, C_z


def correspondence_hybrid_inputs(pair) -> Tuple[LinearCode, ...]:
    """Classical inputs whose hybrid construction matches the unextended
    hybrid family (zero messages) built from the same pair."""
    C = LinearCode(pair.n, pair.C.generator_rows())
    D = LinearCode(pair.n, pair.D.generator_rows())
    return C, C, D, D


def correspondence_hybrid_subsystem_inputs(basis) -> Tuple[LinearCode, ...]:
    """Classical inputs whose hybrid subsystem construction matches the
    unextended hybrid subsystem family (zero message) from the same basis."""
    n = basis.n
    C_x = LinearCode(n, list(basis.q_tilde) + list(basis.s_x))
    C_z = LinearCode(n, list(basis.q_tilde) + list(basis.t_tilde) + list(basis.s_z))
    D_x = LinearCode(n, list(basis.q_tilde) + list(basis.s_x) + list(basis.t_x))
    D_z = C_z
    return C_x, C_z, D_x, D_z


def check_correspondence(css: CssInstance, inst: ExtendedCodeInstance) -> List[str]:
    """Compare a CSS construction against a family instance; returns failure
    labels (empty list = full agreement)."""
    fails: List[str] = []
    if css.n != inst.N:
        return ["length"]
    n = css.n
    fam_inner = PauliGroupSpan(n, inst.stabilizer_gens)
    fam_outer = PauliGroupSpan(n, inst.outer_stabilizer_gens)
    fam_gauge = PauliGroupSpan(n, inst.stabilizer_gens + inst.gauge_gens)
    if not css.inner_stabilizer_group().span_equal(fam_inner):
        fails.append("inner-stabilizer-span")
    if not css.outer_stabilizer_group().span_equal(fam_outer):
        fails.append("outer-stabilizer-span")
    if css.kind in ("subsystem", "hybrid-subsystem"):
        if not css.inner_gauge_group().span_equal(fam_gauge):
            fails.append("gauge-span")
    if css.k != inst.params.k:
        fails.append("k")
    if css.m != inst.params.m:
        fails.append("m")
    if css.r != inst.params.r:
        fails.append("r")
    return fails


def check_two_sided_distance(css: CssInstance) -> Optional[Tuple[int, int]]:
    """Evaluate the hybrid-subsystem distance both ways and return the pair.

    Left side: the direct definition — minimum weight over operators that
    centralize the inner stabilizers but are not inner gauge, together with
    all nontrivial translation classes of that centralizer. Right side: the
    simplified formula using the outer stabilizer centralizer. Returns None
    when the spans are too large to enumerate.
    """
    n = css.n
    inner_stab = css.inner_stabilizer_group()
    g0 = PauliGroupSpan(
        n, css.inner_stabilizer_gens + css.inner_gauge_gens
    )
    cs0 = centralizer_basis(inner_stab)
    cs = centralizer_basis(css.outer_stabilizer_group())
    try:
        lhs_a = min_weight_in_set_difference(cs0, g0)
        dressed = PauliGroupSpan(
            n, tuple(cs0.generators) + css.translation_gens
        )
        lhs_b = min_weight_in_set_difference(dressed, cs0)
        rhs = min_weight_in_set_difference(cs, g0)
    except DimensionTooLargeError:
        return None
    lhs = min(lhs_a, lhs_b)
    return lhs, rhs


def check_dual_dimension_identity(C_x: LinearCode, C_z: LinearCode) -> bool:
    """|C_x ∩ dual(C_z)| = 2^(n - dim(C_z + dual(C_x))), by direct enumeration
    of the intersection (lengths up to 16 stay cheap)."""
    n = _check_length(C_x, C_z)
    inter = C_x.intersect(C_z.dual())
    r_z = (C_z + C_x.dual()).k
    count = sum(1 for _ in gf2.enumerate_span(list(inter.rows), n))
    return count == 1 << (n - r_z)


def parameters_csv_row(css: CssInstance) -> str:
    """One CSV line: n,k,m,r,d_x,d_z,d (blank for uncomputed distances)."""

    def cell(v):
        if v is None:
            return ""
        return "inf" if v == math.inf else str(v)

    return ",".join(
        [str(css.n), str(css.k), str(css.m), str(css.r),
         cell(css.d_x), cell(css.d_z), cell(css.d)]
    )
