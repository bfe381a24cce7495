"""Command-line front end: compile, verify and bench.

Exit codes: 0 ok, 1 not equivalent, 2 parse or argument error, 3 capacity exceeded,
4 instance too large for the oracle.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .bench import Algorithm, run_suite
from .circuit import QpuSpec
from .compiler import Policy, compile_circuit
from .decomp.types import AuxState
from .errors import CapacityExceeded, ParseError, TooLarge
from .serialize import IdealDescriptor, dumps, load, to_qasm
from .sim import verify_decomposition

EXIT_OK, EXIT_NOT_EQUAL, EXIT_USAGE, EXIT_CAPACITY, EXIT_TOO_LARGE = 0, 1, 2, 3, 4
DEFAULTS = {"qpu": 16, "policy": Policy.AUTO.value, "tol": 1e-9, "format": "table", "seed": 0}
ENV_PREFIX = "QDECOMP_"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    qpu_total: int = 16
    policy: Policy = Policy.AUTO
    tolerance: float = 1e-9
    output_format: str = "table"
    seed: int = 0

    def __post_init__(self):
        if self.qpu_total < 1:
            raise UsageError("--qpu must be at least 1")
        if not self.tolerance > 0:
            raise UsageError("--tol must be positive")


def _config_file(path: str | None) -> dict:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"config file {path}: {e}") from None
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return data


def resolve_config(args: argparse.Namespace, environ=os.environ) -> CliConfig:
    """Flags > QDECOMP_* environment > config file > defaults."""
    merged = dict(DEFAULTS)
    merged.update({k: v for k, v in _config_file(args.config or environ.get(ENV_PREFIX + "CONFIG")).items()
                   if k in DEFAULTS})
    for key in DEFAULTS:
        env = environ.get(ENV_PREFIX + key.upper())
        if env is not None:
            merged[key] = env
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    try:
        return CliConfig(int(merged["qpu"]), Policy(merged["policy"]), float(merged["tol"]),
                         str(merged["format"]), int(merged["seed"]))
    except ValueError as e:
        raise UsageError(str(e)) from None


def parse_range(text: str) -> list[int]:
    """'a..b' (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected a..b") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compile(args, cfg: CliConfig) -> int:
    circuit = load(args.input, cfg.qpu_total)
    compiled, report = compile_circuit(circuit, QpuSpec(cfg.qpu_total), cfg.policy)
    if args.out:
        body = to_qasm(compiled) if cfg.output_format == "qasm" else dumps(compiled, compiled.num_qubits())
        Path(args.out).write_text(body)
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    if cfg.output_format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    elif cfg.output_format == "qasm" and not args.out:
        sys.stdout.write(to_qasm(compiled))
    else:
        print(f"cnot_total: {report.stats.cnot_total}")
        for fam, n in sorted(report.stats.per_algorithm.items()):
            print(f"  {fam}: {n}")
        for c in report.choices:
            print(f"  [{c.source_index}] C{c.n_controls}{c.gate} -> {c.choice.label()} ({c.cnots} CNOTs)")
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig) -> int:
    circuit = load(args.input, max(cfg.qpu_total, 1))
    n = circuit.num_qubits()
    ideal = IdealDescriptor.load(args.ideal, n)
    rep = verify_decomposition(ideal.gate, circuit.gates, ideal.aux, ideal.aux_state is AuxState.CLEAN,
                               cfg.tolerance)
    print(json.dumps(rep.to_dict()))
    return EXIT_OK if rep.equal else EXIT_NOT_EQUAL


def cmd_bench(args, cfg: CliConfig) -> int:
    ns = parse_range(args.range)
    try:
        algorithm = Algorithm(args.algorithm)
    except ValueError:
        raise UsageError(f"unknown algorithm {args.algorithm!r}") from None
    if max(ns) > cfg.qpu_total:
        raise UsageError(f"n={max(ns)} exceeds --qpu {cfg.qpu_total}")
    if min(ns) < (2 if algorithm is Algorithm.GROVER else 1):
        raise UsageError(f"n={min(ns)} too small for {algorithm.value}")
    report = run_suite(algorithm, ns, cfg.qpu_total, cfg.policy, cfg.seed)
    fmt = cfg.output_format
    if fmt == "json":
        text = report.to_json() + "\n"
    elif fmt == "csv":
        text = report.to_csv()
    elif fmt == "table":
        text = report.to_table() + "\n"
    else:
        raise UsageError(f"bench does not support --format {fmt}")
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--qpu", type=int, help="QPU qubit count (default 16)")
    common.add_argument("--policy", choices=[p.value for p in Policy])
    common.add_argument("--tol", type=float, help="oracle tolerance (default 1e-9)")
    common.add_argument("--format", choices=["json", "table", "qasm", "csv"])
    common.add_argument("--seed", type=int)
    common.add_argument("--out", help="output path (stdout when omitted)")
    common.add_argument("--config", help="JSON config file")

    p = argparse.ArgumentParser(prog="qdecomp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("compile", parents=[common], help="compile a circuit JSON file")
    c.add_argument("input")
    c.add_argument("--report", help="write the compilation report JSON here")
    v = sub.add_parser("verify", parents=[common], help="check a circuit against an ideal gate")
    v.add_argument("input")
    v.add_argument("--ideal", required=True, help="ideal-gate descriptor JSON")
    b = sub.add_parser("bench", parents=[common], help="per-family CNOT table for a benchmark")
    b.add_argument("algorithm", choices=[a.value for a in Algorithm])
    b.add_argument("range", help="qubit counts, a..b inclusive")
    return p


COMMANDS = {"compile": cmd_compile, "verify": cmd_verify, "bench": cmd_bench}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityExceeded as e:
        print(f"capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except TooLarge as e:
        print(f"too large: {e}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
