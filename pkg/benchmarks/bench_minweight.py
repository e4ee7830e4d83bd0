"""Benchmark the compiled minimum-weight enumeration kernel against the
pure-Python fallback on realistic distance computations.

Usage: python3 benchmarks/bench_minweight.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from syncqec._kernels import (
    KERNEL_BACKEND,
    min_weight_outside_span,
    min_weight_outside_span_python,
)
from syncqec.css import css_code
from syncqec.cyclic import CyclicCode, LinearCode, search_pairs
from syncqec.gf2poly import parse_poly
from syncqec.pauli import PauliGroupSpan, centralizer_basis, pauli_x, pauli_z


def _steane_case():
    """C(S) \\ <S> for the [[7,1,3]] code: rank-8 span, expect weight 3."""
    hamming = CyclicCode(7, parse_poly("1+x+x^3"))
    code = LinearCode(7, hamming.generator_rows())
    rows = code.dual().rows
    stab = [pauli_x(7, r) for r in rows] + [pauli_z(7, r) for r in rows]
    group = PauliGroupSpan(7, stab)
    cs = centralizer_basis(group)
    return cs.rows(), group.rows(), 7, 3


def _supercode_case(n: int):
    """Mixed X/Z span built from a corpus pair, padded up to the largest
    enumerable rank (24) to exercise the Gray-code walk at full size."""
    pairs = search_pairs(n)
    if not pairs:
        return None
    pair = pairs[0]
    rows_d = LinearCode(n, pair.D.generator_rows()).rows
    rows_cperp = LinearCode(n, pair.C.generator_rows()).dual().rows
    a = [(r, 0) for r in rows_d]
    for r in rows_cperp:
        if len(a) >= 24:
            break
        a.append((0, r))
    b = [(r, 0) for r in rows_cperp]
    return a, b, n, None


def _time(fn, a, b, n, repeat):
    t0 = time.perf_counter()
    out = None
    for _ in range(repeat):
        out = fn(a, b, n)
    return out, (time.perf_counter() - t0) / repeat


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"active kernel backend: {KERNEL_BACKEND}")
    cases = [("steane-centralizer", *_steane_case())]
    for n in (15, 21, 23):
        case = _supercode_case(n)
        if case is not None:
            cases.append((f"supercode-n{n}", *case))
    header = f"{'case':<24}{'fast':>12}{'python':>12}{'speedup':>10}  result"
    print(header)
    print("-" * len(header))
    for name, a, b, n, expected in cases:
        fast, t_fast = _time(min_weight_outside_span, a, b, n, args.repeat)
        slow, t_slow = _time(min_weight_outside_span_python, a, b, n, args.repeat)
        assert fast == slow, f"{name}: kernel disagreement {fast} != {slow}"
        if expected is not None:
            assert fast == expected, f"{name}: expected {expected}, got {fast}"
        speedup = t_slow / t_fast if t_fast else float("inf")
        print(
            f"{name:<24}{t_fast * 1e3:>10.2f}ms{t_slow * 1e3:>10.2f}ms"
            f"{speedup:>9.1f}x  w={fast}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
