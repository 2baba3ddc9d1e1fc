"""Command-line entry point: `wcgen gen | verify | bench | runs`.

Exit codes: 0 ok, 1 bad arguments or unreadable input, 2 not weakly chordal,
3 early return (the initial layout already has >= m edges), 4 internal generation failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from collections.abc import Sequence
from enum import IntEnum
from pathlib import Path
from typing import NoReturn

import redis
from pydantic import ValidationError

from wcgen.config import OracleGate, settings_from_env
from wcgen.generation.models import GenerationError, GenerationMethod, GenParams
from wcgen.generation.pipeline import generate
from wcgen.infra.redis_client import create_redis
from wcgen.io.bench import mutation_time_slope, query_time_slope, run_bench
from wcgen.io.formats import GraphFormat, GraphFormatError, format_for_path, read_graph, serialize
from wcgen.oracle import is_weakly_chordal
from wcgen.rng import RNG_ALGORITHM, make_rng
from wcgen.store import RunRecord, list_runs, save_run

logger = logging.getLogger("wcgen.cli")


class ExitCode(IntEnum):
    ok = 0
    usage = 1
    not_weakly_chordal = 2
    early_return = 3
    generation_failed = 4


class CliUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; 2 means "not weakly chordal" here.
    def error(self, message: str) -> NoReturn:
        raise CliUsageError(f"{self.prog}: error: {message}")


def _int_list(raw: str) -> list[int]:
    return [int(x) for x in raw.split(",") if x.strip()]


def _float_list(raw: str) -> list[float]:
    return [float(x) for x in raw.split(",") if x.strip()]


def _seed_list(raw: str) -> list[int]:
    """`a,b,c` or `start:stop` (stop exclusive)."""

    if ":" in raw:
        start, stop = raw.split(":", 1)
        return list(range(int(start), int(stop)))
    return _int_list(raw)


def _method_list(raw: str) -> list[GenerationMethod]:
    return [GenerationMethod(x.strip()) for x in raw.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wcgen", description="Weakly chordal graph generator.")
    common = _Parser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate one graph")
    gen.add_argument("-n", type=int, required=True)
    gen.add_argument("-m", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--method", type=GenerationMethod, choices=list(GenerationMethod), default=GenerationMethod.separator)
    gen.add_argument("--format", type=GraphFormat, choices=list(GraphFormat), default=None)
    gen.add_argument("-o", "--output", type=Path, default=None)
    gen.add_argument("--oracle-gate", type=OracleGate, choices=list(OracleGate), default=None)
    gen.add_argument("--trace", type=Path, default=None)
    gen.add_argument("--counterexamples", type=Path, default=None)
    gen.add_argument("--store", action="store_true", help="persist the run to Redis")

    verify = sub.add_parser("verify", parents=[common], help="check a graph file for weak chordality")
    verify.add_argument("path", type=Path)
    verify.add_argument("--format", type=GraphFormat, choices=list(GraphFormat), default=None)

    bench = sub.add_parser("bench", parents=[common], help="benchmark both generators")
    bench.add_argument("--n-list", type=_int_list, required=True)
    bench.add_argument("--density-list", type=_float_list, default=[2.0])
    bench.add_argument("--seeds", type=_seed_list, default=[0])
    bench.add_argument("--methods", type=_method_list, default=list(GenerationMethod))
    bench.add_argument("--csv", type=Path, default=None)
    bench.add_argument("--summary", type=Path, default=None)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--verify-max-n", type=int, default=64)

    sub.add_parser("runs", parents=[common], help="list runs persisted with `gen --store`")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _write_text(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def cli_gen(args: argparse.Namespace) -> ExitCode:
    try:
        params = GenParams(
            n=args.n,
            m=args.m,
            seed=args.seed,
            method=args.method,
            oracle_gate=args.oracle_gate,
        )
        settings = settings_from_env()
    except (ValidationError, ValueError) as e:
        print(f"wcgen gen: {e}", file=sys.stderr)
        return ExitCode.usage
    if args.counterexamples is not None:
        settings = dataclasses.replace(settings, counterexample_dir=args.counterexamples)

    r = create_redis() if args.store else None
    try:
        g, trace = generate(params, make_rng(params.seed), settings=settings, store=r)
    except GenerationError as e:
        print(f"wcgen gen: internal invariant violated: {e}", file=sys.stderr)
        return ExitCode.generation_failed
    except redis.RedisError as e:
        print(f"wcgen gen: could not store run: {e}", file=sys.stderr)
        return ExitCode.usage

    fmt = args.format or (format_for_path(args.output) if args.output else GraphFormat.edgelist)
    metadata = {
        "rng": RNG_ALGORITHM,
        "seed": params.seed,
        "method": params.method.value,
        "n": params.n,
        "m": params.m,
        "trace": trace.summary(),
    }
    _write_text(args.output, serialize(g, fmt, metadata))
    if args.trace is not None:
        _write_text(args.trace, trace.model_dump_json(indent=2) + "\n")

    if r is not None:
        try:
            save_run(r=r, record=RunRecord.from_run(params, g, trace))
        except redis.RedisError as e:
            print(f"wcgen gen: could not store run: {e}", file=sys.stderr)
            return ExitCode.usage

    if trace.early_return:
        print(
            f"warning: initial layout already has {g.edge_count} >= m={params.m} edges; "
            "returning the layout",
            file=sys.stderr,
        )
        return ExitCode.early_return
    return ExitCode.ok


def cli_verify(args: argparse.Namespace) -> ExitCode:
    try:
        g = read_graph(args.path, args.format)
    except (GraphFormatError, OSError, UnicodeDecodeError) as e:
        print(f"wcgen verify: {e}", file=sys.stderr)
        return ExitCode.usage
    ok, hole = is_weakly_chordal(g)
    if ok:
        print(f"weakly chordal: n={g.vertex_count} m={g.edge_count}")
        return ExitCode.ok
    assert hole is not None
    print(hole.describe())
    return ExitCode.not_weakly_chordal


def _fmt_slope(slope: float | None) -> str:
    return "n/a" if slope is None else f"{slope:.3f}"


def cli_bench(args: argparse.Namespace) -> ExitCode:
    try:
        frame = run_bench(
            methods=args.methods,
            n_list=args.n_list,
            density_list=args.density_list,
            seeds=args.seeds,
            workers=args.workers,
            settings=settings_from_env(),
            verify_max_n=args.verify_max_n,
        )
    except (ValidationError, ValueError) as e:
        print(f"wcgen bench: {e}", file=sys.stderr)
        return ExitCode.usage
    except GenerationError as e:
        print(f"wcgen bench: internal invariant violated: {e}", file=sys.stderr)
        return ExitCode.generation_failed

    if args.csv is not None:
        args.csv.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(args.csv, index=False)
    else:
        sys.stdout.write(frame.to_csv(index=False))

    query_slope = query_time_slope(frame)
    mutation_slope = mutation_time_slope(frame)
    summary = {
        "rows": len(frame),
        "query_slope": query_slope,
        "mutation_slope": mutation_slope,
        "unverified": int((frame["verified"] == False).sum()),  # noqa: E712
    }
    print(
        f"query slope: {_fmt_slope(query_slope)} mutation slope: {_fmt_slope(mutation_slope)}",
        file=sys.stderr,
    )
    if args.summary is not None:
        _write_text(args.summary, json.dumps(summary, indent=2, sort_keys=True) + "\n")
    if summary["unverified"]:
        print(f"wcgen bench: {summary['unverified']} graphs failed verification", file=sys.stderr)
        return ExitCode.not_weakly_chordal
    return ExitCode.ok


def cli_runs(args: argparse.Namespace) -> ExitCode:
    try:
        records = list_runs(r=create_redis())
    except redis.RedisError as e:
        print(f"wcgen runs: {e}", file=sys.stderr)
        return ExitCode.usage
    for rec in records:
        print(f"{rec.run_id}\tedges={len(rec.edges)}\t{rec.created_at.isoformat()}")
    return ExitCode.ok


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliUsageError as e:
        parser.print_usage(sys.stderr)
        print(str(e), file=sys.stderr)
        return int(ExitCode.usage)

    _configure_logging(args.verbose)
    match args.command:
        case "gen":
            code = cli_gen(args)
        case "verify":
            code = cli_verify(args)
        case "bench":
            code = cli_bench(args)
        case _:
            code = cli_runs(args)
    return int(code)
