"""Command-line front end: construct codes, run the verification suite,
dump lookup tables, run channel simulations, and search nested code pairs.

Exit codes: 0 success, 1 assertion/verification failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .channel import (
    CSV_COLUMNS,
    ChannelModel,
    FrameState,
    build_sync_table,
    check_ancilla_z_equivalence,
    check_table_redundancy,
    decode,
    run_simulation,
    verify_encoding_circuit,
)
from .css import (
    check_correspondence,
    correspondence_hybrid_inputs,
    correspondence_hybrid_subsystem_inputs,
    correspondence_subsystem_inputs,
    css_hybrid,
    css_hybrid_subsystem,
    css_subsystem,
)
from .cyclic import (
    CyclicCode,
    CyclicCodePair,
    decompose_generators,
    format_code_spec,
    search_pairs,
)
from .errors import SpecMismatchError, SyncqecError
from .family import (
    FAMILIES,
    SYNCHRONIZABLE_FAMILIES,
    CodeSpec,
    build_code,
    representative_specs,
    shifted_generator_view,
    tradeoff_check,
)
from .gf2poly import parse_poly
from .pairing import build_pairing_basis, verify_pairing_properties
from .pauli import PauliGroupSpan, centralizer_basis

__all__ = [
    "RunConfig",
    "main",
    "cmd_construct",
    "cmd_verify",
    "cmd_simulate",
    "cmd_table",
    "cmd_search_pairs",
]

OUTPUT_DIR_ENV = "SYNCQEC_OUTPUT_DIR"

_KNOWN_KEYS = {
    "n",
    "p",
    "q",
    "family",
    "a_l",
    "a_r",
    "y",
    "message_b",
    "message_c",
    "p_x",
    "p_z",
    "shift_probs",
    "trials",
    "seed",
    "output_dir",
    "prefix",
    "variant",
    "compute_distance",
}


class ConfigError(SyncqecError, ValueError):
    """Invalid run configuration (unknown key, bad value, missing field)."""


@dataclass
class RunConfig:
    """Flat run configuration; file values first, flags override."""

    n: Optional[int] = None
    p: Optional[str] = None
    q: Optional[str] = None
    family: Optional[str] = None
    a_l: int = 0
    a_r: int = 0
    y: Optional[int] = None
    message_b: Tuple[int, ...] = ()
    message_c: Tuple[int, ...] = ()
    p_x: float = 0.0
    p_z: float = 0.0
    shift_probs: Tuple[Tuple[int, float], ...] = ((0, 1.0),)
    trials: int = 1000
    seed: int = 0
    output_dir: Optional[str] = None
    prefix: str = "sim"
    variant: str = "A"
    compute_distance: bool = False


def _parse_bits(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    if any(ch not in "01" for ch in text):
        raise ConfigError(f"message bits must be a 0/1 string, got {text!r}")
    return tuple(int(ch) for ch in text)


def _parse_shift_probs(text: str) -> Tuple[Tuple[int, float], ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            a, prob = part.split(":")
            out.append((int(a), float(prob)))
        except ValueError as exc:
            raise ConfigError(
                f"bad shift distribution entry {part!r}; expected alpha:prob"
            ) from exc
    if not out:
        raise ConfigError("empty shift distribution")
    return tuple(out)


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"bad boolean value {text!r}")


_CONVERTERS = {
    "n": int,
    "p": str,
    "q": str,
    "family": str,
    "a_l": int,
    "a_r": int,
    "y": int,
    "message_b": _parse_bits,
    "message_c": _parse_bits,
    "p_x": float,
    "p_z": float,
    "shift_probs": _parse_shift_probs,
    "trials": int,
    "seed": int,
    "output_dir": str,
    "prefix": str,
    "variant": str,
    "compute_distance": _parse_bool,
}


def _read_config_file(path: str) -> Dict[str, str]:
    raw: Dict[str, str] = {}
    text = Path(path).read_text()
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = stripped.split("=", 1)
        key = key.strip()
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        raw[key] = value.strip()
    return raw


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge config-file values with command-line overrides."""
    cfg = RunConfig()
    raw = _read_config_file(args.config) if getattr(args, "config", None) else {}
    for key, text in raw.items():
        try:
            setattr(cfg, key, _CONVERTERS[key](text))
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"bad value for {key!r}: {text!r}") from exc
    for f in fields(RunConfig):
        flag = getattr(args, f.name, None)
        if flag is not None:
            setattr(
                cfg,
                f.name,
                _CONVERTERS[f.name](flag) if isinstance(flag, str) else flag,
            )
    return cfg


def _require(cfg: RunConfig, *names: str) -> None:
    missing = [name for name in names if getattr(cfg, name) is None]
    if missing:
        raise ConfigError(f"missing required configuration: {', '.join(missing)}")


def _pair_from_config(cfg: RunConfig) -> CyclicCodePair:
    _require(cfg, "n", "p", "q")
    C = CyclicCode(cfg.n, parse_poly(cfg.p))
    D = CyclicCode(cfg.n, parse_poly(cfg.q))
    return CyclicCodePair(C, D)


def _spec_from_config(cfg: RunConfig) -> CodeSpec:
    _require(cfg, "family")
    return CodeSpec(
        family=cfg.family,
        a_l=cfg.a_l,
        a_r=cfg.a_r,
        y=cfg.y,
        message_b=cfg.message_b,
        message_c=cfg.message_c,
    )


def _output_dir(cfg: RunConfig) -> Path:
    target = cfg.output_dir or os.environ.get(OUTPUT_DIR_ENV) or "."
    path = Path(target)
    path.mkdir(parents=True, exist_ok=True)
    return path


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_construct(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    pair = _pair_from_config(cfg)
    spec = _spec_from_config(cfg)
    instance = build_code(pair, spec=spec, compute_distance=cfg.compute_distance)
    params = instance.params
    d_text = "?" if params.d is None else str(params.d)
    print(json.dumps(instance.to_json_dict(), indent=2, sort_keys=True), file=out)
    print(
        f"(({params.n},{params.k}:{params.m},{params.r},{d_text})) "
        f"d_sync_max={params.d_sync_max}",
        file=out,
    )
    return 0


def _verify_checks(pair: CyclicCodePair) -> List[Tuple[str, str, str]]:
    """Run every named check for one pair; returns (name, status, detail)."""
    results: List[Tuple[str, str, str]] = []

    def record(name: str, fn):
        try:
            ok, detail = fn()
        except SyncqecError as exc:
            results.append((name, "fail", str(exc)))
            return
        results.append((name, "pass" if ok else "fail", detail))

    gap = pair.k_d - pair.k_c
    record(
        "generator-decomposition-spans",
        lambda: (decompose_generators(pair) is not None, ""),
    )
    basis = build_pairing_basis(pair)
    prop_fails = verify_pairing_properties(basis)
    for i in range(1, 9):
        hit = next((f for f in prop_fails if f.startswith(f"property-{i}-")), None)
        results.append(
            (f"pairing-property-{i}", "fail" if hit else "pass", hit or "")
        )
    specs = representative_specs(pair, with_messages=True)
    instances = {
        s.family: build_code(pair, basis, s, compute_distance=False) for s in specs
    }

    def table_a():
        for a_l in range(gap):
            for a_r in range(gap - a_l):
                s = CodeSpec("Q2", a_l=a_l, a_r=a_r)
                build_sync_table(
                    build_code(pair, basis, s, compute_distance=False), "A"
                )
        return True, ""

    record("sync-table-injectivity", table_a)
    record(
        "message-table-injectivity",
        lambda: (build_sync_table(instances["Q3"], "B") is not None, ""),
    )

    def table_c():
        if gap < 3:
            return True, "no admissible y for this pair"
        for y in range(1, gap - 1):
            for a_l in range(gap - y):
                for a_r in range(gap - y - a_l):
                    s = CodeSpec("Q4", a_l=a_l, a_r=a_r, y=y)
                    build_sync_table(
                        build_code(pair, basis, s, compute_distance=False), "C"
                    )
        return True, ""

    record("sync-message-table-injectivity", table_c)
    record(
        "table-redundancy",
        lambda: (check_table_redundancy(instances["Q2"], "A"), ""),
    )
    record(
        "tradeoff-identity",
        lambda: (
            all(tradeoff_check(inst) for inst in instances.values()),
            "",
        ),
    )

    def shifted_spans():
        bad = []
        for inst in instances.values():
            base_inner = inst.stabilizer_group()
            base_outer = inst.outer_stabilizer_group()
            for alpha in range(-inst.spec.a_l, inst.spec.a_r + 1):
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
                    bad.append(f"{inst.family}:alpha={alpha}:inner")
                outer = (
                    view["stab_x_qtilde"]
                    + view["stab_z_qtilde"]
                    + view["ancilla"]
                    + (
                        view["stab_z_ptilde"]
                        if inst.family in ("Q2", "Q3")
                        else []
                    )
                )
                if not PauliGroupSpan(inst.N, outer).span_equal(
                    base_outer, "exact-phase"
                ):
                    bad.append(f"{inst.family}:alpha={alpha}:outer")
        return not bad, ";".join(bad)

    record("shifted-stabilizer-spans", shifted_spans)

    def circuits():
        bad = [
            s.family
            for s in specs
            if not verify_encoding_circuit(pair, s, basis)
        ]
        return not bad, ";".join(bad)

    record("encoding-circuit", circuits)
    record(
        "ancilla-z-equivalence",
        lambda: (check_ancilla_z_equivalence(instances["Q2"]), ""),
    )

    def css_check(kind):
        if kind == "subsystem":
            css = css_subsystem(
                *correspondence_subsystem_inputs(basis), compute_distance=False
            )
            inst = build_code(pair, basis, CodeSpec("Q1"), compute_distance=False)
        elif kind == "hybrid":
            css = css_hybrid(
                *correspondence_hybrid_inputs(pair), compute_distance=False
            )
            inst = build_code(pair, basis, CodeSpec("Q5"), compute_distance=False)
        else:
            css = css_hybrid_subsystem(
                *correspondence_hybrid_subsystem_inputs(basis),
                compute_distance=False,
            )
            inst = build_code(pair, basis, CodeSpec("Q7"), compute_distance=False)
        fails = check_correspondence(css, inst)
        return not fails, ";".join(fails)

    record("css-subsystem-correspondence", lambda: css_check("subsystem"))
    record("css-hybrid-correspondence", lambda: css_check("hybrid"))
    record(
        "css-hybrid-subsystem-correspondence",
        lambda: css_check("hybrid-subsystem"),
    )

    def group_identities():
        inst = instances["Q1"]
        N = inst.N
        stab = inst.stabilizer_group()
        gauge = inst.gauge_group()
        stab_rows = [g.x | (g.z << N) for g in stab.generators]
        gauge_rows = [g.x | (g.z << N) for g in gauge.generators]
        cg = centralizer_basis(gauge)
        cg_rows = [g.x | (g.z << N) for g in cg.generators]
        # <iI, S> = G intersect C(G) as x/z row spans
        lhs = gf2.intersect(gauge_rows, cg_rows, 2 * N)
        ok = gf2.span_equal(lhs, stab_rows, 2 * N)
        # C(S) = <G, C(G)>
        cs = centralizer_basis(stab)
        cs_rows = [g.x | (g.z << N) for g in cs.generators]
        ok &= gf2.span_equal(
            cs_rows, gf2.sum_basis(gauge_rows, cg_rows, 2 * N), 2 * N
        )
        return ok, ""

    record("stabilizer-group-identities", group_identities)

    def clean_roundtrip():
        for fam in SYNCHRONIZABLE_FAMILIES:
            inst = instances.get(fam)
            if inst is None:
                continue
            for alpha in range(-inst.spec.a_l, inst.spec.a_r + 1):
                frame = FrameState(
                    inst,
                    alpha,
                    0,
                    0,
                    inst.spec.message_b,
                    inst.spec.message_c,
                )
                report = decode(frame)
                if not (
                    report.sync_success
                    and report.classical_success
                    and report.quantum_success
                ):
                    return False, f"{fam}:alpha={alpha}"
        return True, ""

    record("clean-decode-roundtrip", clean_roundtrip)
    return results


def cmd_verify(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    pair = _pair_from_config(cfg)
    results = _verify_checks(pair)
    report = {
        "pair": format_code_spec(pair),
        "checks": [
            {"name": name, "status": status, "detail": detail}
            for name, status, detail in results
        ],
        "passed": all(status == "pass" for _, status, _ in results),
    }
    print(json.dumps(report, indent=2, sort_keys=True), file=out)
    return 0 if report["passed"] else 1


def cmd_simulate(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    pair = _pair_from_config(cfg)
    spec = _spec_from_config(cfg)
    instance = build_code(pair, spec=spec, compute_distance=False)
    channel = ChannelModel(
        p_x=cfg.p_x,
        p_z=cfg.p_z,
        shift_probs=cfg.shift_probs,
    )
    rows, summary = run_simulation(instance, channel, cfg.trials, cfg.seed)
    outdir = _output_dir(cfg)
    csv_path = outdir / f"{cfg.prefix}_trials.csv"
    json_path = outdir / f"{cfg.prefix}_summary.json"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(CSV_COLUMNS))
        writer.writeheader()
        writer.writerows(rows)
    with open(json_path, "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(json.dumps(summary, indent=2, sort_keys=True), file=out)
    print(f"wrote {csv_path} and {json_path}", file=out)
    return 0


def cmd_table(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    pair = _pair_from_config(cfg)
    spec = _spec_from_config(cfg)
    instance = build_code(pair, spec=spec, compute_distance=False)
    table = build_sync_table(instance, cfg.variant)
    entries = []
    for key, value in table.table.items():
        syndrome_text = "".join(str(b) for b in key)
        if table.variant == "A":
            entry = {"syndrome": syndrome_text, "alpha": value}
        elif table.variant == "B":
            entry = {"syndrome": syndrome_text, "message": list(value)}
        else:
            entry = {
                "syndrome": syndrome_text,
                "message": list(value[0]),
                "alpha": value[1],
            }
        entries.append(entry)
    entries.sort(key=lambda e: e["syndrome"])
    print(
        json.dumps(
            {
                "variant": table.variant,
                "domain_size": table.domain_size,
                "entries": entries,
            },
            indent=2,
            sort_keys=True,
        ),
        file=out,
    )
    return 0


def cmd_search_pairs(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    _require(cfg, "n")
    pairs = search_pairs(cfg.n)
    for p in pairs:
        print(format_code_spec(p), file=out)
    print(f"found {len(pairs)} pairs for n={cfg.n}", file=out)
    return 0


# ---------------------------------------------------------------------------
# Argument parsing and entry point
# ---------------------------------------------------------------------------


def _add_code_flags(sp: argparse.ArgumentParser, need_family: bool) -> None:
    sp.add_argument("--n", type=int, help="code length")
    sp.add_argument("--p", help="generator polynomial of the subcode, e.g. 1+x+x^3")
    sp.add_argument("--q", help="generator polynomial of the supercode")
    if need_family:
        sp.add_argument("--family", choices=FAMILIES, help="code family")
        sp.add_argument("--al", dest="a_l", type=int, help="left ancilla count")
        sp.add_argument("--ar", dest="a_r", type=int, help="right ancilla count")
        sp.add_argument("--y", type=int, help="message window parameter")
        sp.add_argument("--message-b", dest="message_b", help="bit string, e.g. 101")
        sp.add_argument("--message-c", dest="message_c", help="bit string")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syncqec",
        description=(
            "Construction and verification toolkit for synchronizable "
            "hybrid subsystem codes built from nested cyclic code pairs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="build a code instance and print it")
    _add_code_flags(sp, need_family=True)
    sp.add_argument("--config", help="key = value configuration file")
    sp.add_argument(
        "--compute-distance",
        dest="compute_distance",
        action="store_const",
        const=True,
        help="exhaustively compute the code distance when feasible",
    )
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="run the named verification suite")
    _add_code_flags(sp, need_family=False)
    sp.add_argument("--config", help="key = value configuration file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser(
        "simulate",
        help="run a channel simulation",
        epilog="CSV columns: " + ", ".join(CSV_COLUMNS),
    )
    _add_code_flags(sp, need_family=True)
    sp.add_argument("--config", help="key = value configuration file")
    sp.add_argument("--px", dest="p_x", type=float, help="X error probability")
    sp.add_argument("--pz", dest="p_z", type=float, help="Z error probability")
    sp.add_argument(
        "--shift-probs",
        dest="shift_probs",
        help="misalignment distribution, e.g. -1:0.25,0:0.5,1:0.25",
    )
    sp.add_argument("--trials", type=int, help="number of frames")
    sp.add_argument("--seed", type=int, help="base seed")
    sp.add_argument(
        "--output-dir",
        dest="output_dir",
        help=f"output directory (default ${OUTPUT_DIR_ENV} or cwd)",
    )
    sp.add_argument("--prefix", help="output file prefix")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("table", help="dump a sync/message lookup table")
    _add_code_flags(sp, need_family=True)
    sp.add_argument("--config", help="key = value configuration file")
    sp.add_argument("--variant", choices=("A", "B", "C"), help="table variant")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("search-pairs", help="find nested cyclic code pairs")
    sp.add_argument("--n", type=int, help="code length")
    sp.add_argument("--config", help="key = value configuration file")
    sp.set_defaults(func=cmd_search_pairs)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_run_config(args)
        return args.func(cfg)
    except (ConfigError, SpecMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SyncqecError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
