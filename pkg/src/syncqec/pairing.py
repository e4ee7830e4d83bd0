"""Modified symplectic Gram-Schmidt pairing over GF(2): produces paired
logical and gauge vectors from the nested generator decomposition, and
verifies the full set of dot-product/span properties."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from . import gf2
from .cyclic import CyclicCodePair, GeneratorDecomposition, decompose_generators
from .errors import DegenerateInputError, NoPartnerError, SyncqecError

__all__ = [
    "PairingBasis",
    "pair_logicals",
    "pair_gauges",
    "build_pairing_basis",
    "verify_pairing_properties",
    "pairing_basis_to_json",
]

_dot = gf2.dot


@dataclass(frozen=True)
class PairingBasis:
    """Paired basis vectors (bit-packed) for a nested cyclic code pair."""

    n: int
    q_tilde: Tuple[int, ...]  # i = 1..n-k_d
    t_tilde: Tuple[int, ...]  # j = 1..k_d-k_c
    s_x: Tuple[int, ...]  # l = 1..2k_c-n
    s_z: Tuple[int, ...]
    t_x: Tuple[int, ...]  # m = 1..k_d-k_c
    t_z: Tuple[int, ...]
    q_prime: Tuple[int, ...]  # m = 1..k_d-k_c
    decomposition: GeneratorDecomposition


def pair_logicals(p_vectors: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Pair the logical-sector vectors into anticommuting X/Z partners.

    Each round either finds a vector with odd self-overlap (paired with
    itself) or a pair of vectors with odd mutual overlap; remaining vectors
    are updated to restore orthogonality against the extracted pair.
    """
    w = list(p_vectors)
    s_x: List[int] = []
    s_z: List[int] = []
    while w:
        s = len(w)
        for v in w:
            if all(_dot(v, u) == 0 for u in w):
                raise DegenerateInputError(
                    "input vector orthogonal to all inputs; pairing impossible"
                )
        j = next((idx for idx in range(s) if _dot(w[idx], w[idx]) == 1), None)
        if j is not None:
            wj = w[j]
            s_x.append(wj)
            s_z.append(wj)
            nxt = []
            for k in range(s):
                if k == j:
                    continue
                nxt.append(w[k] ^ wj if _dot(w[k], wj) else w[k])
            w = nxt
            assert all(_dot(v, wj) == 0 for v in w)
        else:
            j = next(
                (idx for idx in range(1, s) if _dot(w[0], w[idx]) == 1), None
            )
            if j is None:
                raise DegenerateInputError(
                    "leading vector orthogonal to all others; pairing impossible"
                )
            w1, wj = w[0], w[j]
            s_x.append(w1)
            s_z.append(wj)
            s_x.append(wj)
            s_z.append(w1)
            nxt = []
            for k in range(1, s):
                if k == j:
                    continue
                v = w[k]
                if k < j:
                    nxt.append(v ^ (w1 if _dot(v, wj) else 0))
                else:
                    upd = v
                    if _dot(v, w1):
                        upd ^= wj
                    if _dot(v, wj):
                        upd ^= w1
                    nxt.append(upd)
            w = nxt
            assert all(_dot(v, w1) == 0 and _dot(v, wj) == 0 for v in w)
    for a in range(len(s_x)):
        for b in range(len(s_z)):
            assert _dot(s_x[a], s_z[b]) == (1 if a == b else 0)
    return s_x, s_z


def pair_gauges(
    p_tilde: Sequence[int],
    q_prime: Sequence[int],
    n: int,
) -> Tuple[List[int], List[int], List[int]]:
    """Pair dual-sector vectors with their gauge partners.

    Input order is the concatenation [p_tilde..., q_prime...]; each round the
    leading vector (an element of the p_tilde span, asserted) is paired with
    the first vector having odd overlap with it.
    """
    kd_kc = len(p_tilde)
    if len(q_prime) != kd_kc:
        raise SyncqecError("p_tilde and q_prime must have equal lengths")
    ptilde_basis, ptilde_piv = gf2.rref(list(p_tilde), n)
    mixed_basis, mixed_piv = gf2.rref(list(p_tilde) + list(q_prime), n)
    w = list(p_tilde) + list(q_prime)
    t_tilde: List[int] = []
    t_x: List[int] = []
    t_z: List[int] = []
    while w:
        s = len(w)
        # invariant from the construction: w[0] stays inside the p_tilde span,
        # every working vector inside the span of p_tilde and q_prime.
        assert gf2.reduce_vector(w[0], ptilde_basis, ptilde_piv) == 0
        assert all(
            gf2.reduce_vector(v, mixed_basis, mixed_piv) == 0 for v in w
        )
        w1 = w[0]
        j = next((idx for idx in range(1, s) if _dot(w1, w[idx]) == 1), None)
        if j is None:
            raise NoPartnerError(
                "no anticommuting partner for the leading dual-sector vector"
            )
        wj = w[j]
        t_tilde.append(w1)
        t_x.append(wj)
        if _dot(wj, wj) == 0:
            t_z.append(wj)
            nxt = []
            for k in range(1, s):
                if k == j:
                    continue
                v = w[k]
                upd = v
                if _dot(v, wj):
                    upd ^= w1
                if k > j and _dot(v, w1):
                    upd ^= wj
                nxt.append(upd)
        else:
            t_z.append(w1 ^ wj)
            nxt = []
            for k in range(1, s):
                if k == j:
                    continue
                v = w[k]
                upd = v
                if _dot(v, wj):
                    upd ^= w1
                if _dot(v, w1):
                    upd ^= w1 ^ wj
                nxt.append(upd)
        w = nxt
        assert all(_dot(v, w1) == 0 and _dot(v, wj) == 0 for v in w)
    return t_tilde, t_x, t_z


def build_pairing_basis(pair: CyclicCodePair) -> PairingBasis:
    """Run the full pairing pipeline and verify every stated property."""
    dec = decompose_generators(pair)
    n = pair.n
    s_x, s_z = pair_logicals(dec.p_rows)
    q_prime = []
    for qm in dec.q_rows:
        v = qm
        for sx, sz in zip(s_x, s_z):
            if _dot(qm, sx):
                v ^= sz
        q_prime.append(v)
    # the symmetric formula must agree
    for qm, v in zip(dec.q_rows, q_prime):
        alt = qm
        for sx, sz in zip(s_x, s_z):
            if _dot(qm, sz):
                alt ^= sx
        if alt != v:
            raise SyncqecError("the two corrected-coset formulas disagree")
    t_tilde, t_x, t_z = pair_gauges(dec.p_tilde, q_prime, n)
    basis = PairingBasis(
        n=n,
        q_tilde=dec.q_tilde,
        t_tilde=tuple(t_tilde),
        s_x=tuple(s_x),
        s_z=tuple(s_z),
        t_x=tuple(t_x),
        t_z=tuple(t_z),
        q_prime=tuple(q_prime),
        decomposition=dec,
    )
    failures = verify_pairing_properties(basis)
    if failures:
        raise SyncqecError(f"pairing properties violated: {failures}")
    return basis


def verify_pairing_properties(basis: PairingBasis) -> List[str]:
    """Check the eight dot-product/span properties; returns failure labels."""
    n = basis.n
    dec = basis.decomposition
    fails: List[str] = []

    def eq_span(a, b) -> bool:
        return gf2.span_equal(list(a), list(b), n)

    # property 1: sector spans
    if not (
        eq_span(basis.s_x, dec.p_rows)
        and eq_span(basis.s_z, dec.p_rows)
        and eq_span(basis.t_tilde, dec.p_tilde)
        and eq_span(
            list(basis.t_tilde) + list(basis.t_x),
            list(dec.p_tilde) + list(basis.q_prime),
        )
        and eq_span(
            list(basis.t_tilde) + list(basis.t_z),
            list(dec.p_tilde) + list(basis.q_prime),
        )
    ):
        fails.append("property-1-span")
    # property 2: code reconstructions
    qt = list(basis.q_tilde)
    tt = list(basis.t_tilde)
    if not (
        eq_span(qt + tt, list(dec.q_tilde) + list(dec.p_tilde))
        and eq_span(qt + tt + list(basis.s_x), qt + list(dec.p_tilde) + list(dec.p_rows))
        and eq_span(qt + tt + list(basis.s_z), qt + list(dec.p_tilde) + list(dec.p_rows))
        and eq_span(
            qt + tt + list(basis.s_x) + list(basis.t_x),
            qt + list(dec.p_tilde) + list(dec.p_rows) + list(dec.q_rows),
        )
        and eq_span(
            qt + tt + list(basis.s_z) + list(basis.t_z),
            qt + list(dec.p_tilde) + list(dec.p_rows) + list(dec.q_rows),
        )
    ):
        fails.append("property-2-span")
    # property 3: q_tilde orthogonal to everything
    others = qt + tt + list(basis.s_x) + list(basis.s_z) + list(basis.t_x) + list(basis.t_z)
    if any(_dot(q, v) for q in qt for v in others):
        fails.append("property-3-qtilde-orthogonality")
    # property 4: t_tilde self/cross orthogonality with s vectors
    if any(_dot(a, b) for a in tt for b in tt) or any(
        _dot(a, b) for a in tt for b in list(basis.s_x) + list(basis.s_z)
    ):
        fails.append("property-4-ttilde-orthogonality")
    # property 5: s pairing matrix is the identity
    if any(
        _dot(basis.s_x[a], basis.s_z[b]) != (1 if a == b else 0)
        for a in range(len(basis.s_x))
        for b in range(len(basis.s_z))
    ):
        fails.append("property-5-s-pairing")
    # property 6: t_tilde vs t_x/t_z pairing matrix is the identity
    if any(
        _dot(tt[a], basis.t_x[b]) != (1 if a == b else 0)
        or _dot(tt[a], basis.t_z[b]) != (1 if a == b else 0)
        for a in range(len(tt))
        for b in range(len(tt))
    ):
        fails.append("property-6-t-pairing")
    # property 7: s vs t cross orthogonality
    if any(_dot(sx, tz) for sx in basis.s_x for tz in basis.t_z) or any(
        _dot(sz, tx) for sz in basis.s_z for tx in basis.t_x
    ):
        fails.append("property-7-s-t-orthogonality")
    # property 8: t_x vs t_z orthogonality
    if any(_dot(a, b) for a in basis.t_x for b in basis.t_z):
        fails.append("property-8-tx-tz-orthogonality")
    return fails


def pairing_basis_to_json(basis: PairingBasis) -> str:
    """JSON dump with named vector arrays (tuples of bits)."""

    def rows(vs: Sequence[int]) -> List[List[int]]:
        return [[(v >> i) & 1 for i in range(basis.n)] for v in vs]

    payload: Dict = {
        "n": basis.n,
        "q_tilde": rows(basis.q_tilde),
        "t_tilde": rows(basis.t_tilde),
        "s_x": rows(basis.s_x),
        "s_z": rows(basis.s_z),
        "t_x": rows(basis.t_x),
        "t_z": rows(basis.t_z),
        "q_prime": rows(basis.q_prime),
    }
    return json.dumps(payload, indent=2, sort_keys=True)
