"""Command-line front end: code parameters, file encode/decode, simulation and benchmarks.

Usage::

    grm params -r 6 -m 2 -q 8
    grm encode -r 2 -m 2 -q 4 --input message.txt --out codeword.txt
    grm decode --input received.txt --decoder pld --out decoded.txt
    grm simulate --config curve.yaml --seed 7 --out results/
    grm bench --config bench.yaml
    grm threshold --config threshold.yaml
    grm verify-geometry -q 4 -m 3

Exit codes: 0 success, 1 decode incomplete, 2 usage or parameter error,
3 integrity error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

from dotenv import load_dotenv
from rich.console import Console
from rich.table import Table

from src.codes import geometry
from src.codes.exceptions import EXIT_INCOMPLETE, EXIT_OK, CodingError, ParameterError, exit_code_for
from src.codes.gf import field_new
from src.codes.grm import CodeParams, code_new
from src.codes.linalg import format_matrix
from src.codes.symbol_files import format_symbols, read_message_file, read_symbol_file
from src.config import get_settings
from src.config.sim_config import RunKind, load_trial_config
from src.decoders import GRM_DECODERS, Decoder, ReceptionState, decode
from src.sim.bench import run_bench
from src.sim.models import BenchConfig, SimulationConfig, TrialConfig
from src.sim.reporting import format_bench_csv, format_threshold_csv, metadata_line, write_curves, write_text
from src.sim.runner import measure_full_rank_threshold, run_curve
from src.utils.logging_config import setup_logging

logger = logging.getLogger(__name__)

_DECODER_CHOICES = [d.value for d in GRM_DECODERS]


# ── Argument parsing ──


def _add_code_flags(parser: argparse.ArgumentParser, *, required: bool) -> None:
    parser.add_argument("-r", type=int, required=required, help="Polynomial degree bound")
    parser.add_argument("-m", type=int, required=required, help="Number of variables")
    parser.add_argument("-q", type=int, required=required, help="Field order (prime power)")


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="YAML or JSON run configuration (packaged default if omitted)")
    _add_code_flags(parser, required=False)
    parser.add_argument("--trials", type=int, help="Override the trial count")
    parser.add_argument("--seed", type=int, help="Override the run seed")
    parser.add_argument("--out", type=Path, help="Output directory or file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grm", description="GRM erasure coding with local and ML decoders")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="Print code parameters")
    _add_code_flags(p, required=True)
    p.add_argument("--dump-matrices", action="store_true", help="Also print the generator and parity-check matrices")

    p = sub.add_parser("encode", help="Systematically encode a message file")
    _add_code_flags(p, required=True)
    p.add_argument("--input", type=Path, required=True, help="Message file, k symbols")
    p.add_argument("--out", type=Path, help="Codeword file (stdout if omitted)")

    p = sub.add_parser("decode", help="Recover erased symbols of a received word")
    p.add_argument("--input", type=Path, required=True, help="Received word, '?' for erasures")
    p.add_argument("--decoder", choices=_DECODER_CHOICES, default=Decoder.PLD.value)
    p.add_argument("--out", type=Path, help="Decoded word file (stdout if omitted)")

    p = sub.add_parser("simulate", help="Success curves over prefix reception")
    _add_run_flags(p)
    p.add_argument("--decoder", choices=[d.value for d in Decoder], help="Run a single decoder")

    p = sub.add_parser("bench", help="Paired decoder runtimes under i.i.d. erasures")
    _add_run_flags(p)

    p = sub.add_parser("threshold", help="Full-rank threshold distribution (GE)")
    _add_run_flags(p)

    p = sub.add_parser("verify-geometry", help="Check the line count against brute force")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--dump-lines", action="store_true", help="List every line as pivot/direction/base and its points")
    return parser


def _run_config(args: argparse.Namespace, kind: RunKind) -> Any:
    cfg = load_trial_config(args.config, kind)
    data = cfg.model_dump()
    if any(v is not None for v in (args.r, args.m, args.q)):
        code = data["code_params"]
        data["code_params"] = {
            "r": code["r"] if args.r is None else args.r,
            "m": code["m"] if args.m is None else args.m,
            "q": code["q"] if args.q is None else args.q,
        }
    if args.trials is not None:
        data["trials"] = args.trials
    if args.seed is not None:
        data["seed"] = args.seed
    if getattr(args, "decoder", None):
        data["decoder"] = args.decoder
        data["decoders"] = None
    try:
        updated = type(cfg).model_validate(data)
    except ValueError as exc:
        raise ParameterError(f"Invalid run options: {exc}") from exc
    return updated.with_seed()


# ── Commands ──


def cmd_params(args: argparse.Namespace, console: Console) -> int:
    params = CodeParams(r=args.r, m=args.m, q=args.q)
    table = Table(title=f"GRM(r={params.r}, m={params.m}, q={params.q})")
    table.add_column("Parameter")
    table.add_column("Value", justify="right")
    for name, value in (
        ("length n", params.n),
        ("dimension k", params.k),
        ("distance d", params.d),
        ("locality", params.locality),
        ("rate k/n", f"{params.rate:.4f}"),
        ("lines", params.line_count),
        ("lines per point", params.lines_per_point),
    ):
        table.add_row(name, str(value))
    console.print(table)
    console.print(
        f"n={params.n} k={params.k} d={params.d} locality={params.locality} "
        f"lines={params.line_count} lines_per_point={params.lines_per_point}"
    )
    if args.dump_matrices:
        code = code_new(params.r, params.m, params.q)
        sys.stdout.write(f"# generator {code.k}x{code.n}\n{format_matrix(code.systematic_natural)}\n")
        sys.stdout.write(f"# parity-check {code.n - code.k}x{code.n}\n{format_matrix(code.parity_natural)}\n")
    return EXIT_OK


def cmd_encode(args: argparse.Namespace, console: Console) -> int:
    code = code_new(args.r, args.m, args.q)
    message = read_message_file(args.input, code.params)
    codeword = code.encode(message).tolist()
    text = format_symbols(code.params, codeword)
    if args.out is None:
        sys.stdout.write(text)
    else:
        write_text(args.out, text)
        console.print(f"Encoded {code.k} symbols into {code.n}: {args.out}")
    return EXIT_OK


def cmd_decode(args: argparse.Namespace, console: Console) -> int:
    params, symbols = read_symbol_file(args.input)
    code = code_new(params.r, params.m, params.q)
    state = ReceptionState.from_symbols(code, symbols)
    report = decode(Decoder(args.decoder), code, state)
    text = format_symbols(params, report.final_state.symbols())
    if args.out is None:
        sys.stdout.write(text)
    else:
        write_text(args.out, text)

    table = Table(title=f"{args.decoder} decode")
    table.add_column("Metric")
    table.add_column("Value", justify="right")
    summary = report.summary()
    for key in ("known_count", "recovered_count", "info_known_count", "full_decode", "line_decode_ops", "rref_pivots"):
        table.add_row(key, str(summary[key]))
    console.print(table)
    return EXIT_OK if report.full_decode else EXIT_INCOMPLETE


def cmd_simulate(args: argparse.Namespace, console: Console) -> int:
    cfg: SimulationConfig = _run_config(args, RunKind.SIMULATE)
    console.print(f"seed={cfg.seed}")
    curves = {d.value: run_curve(cfg.for_decoder(d)) for d in cfg.decoder_list()}
    out_dir = args.out or get_settings().results_dir
    paths = write_curves(out_dir, cfg.code_params, cfg.seed, curves)

    table = Table(title=f"Curves for {cfg.code_params.label()} ({cfg.trials} trials)")
    table.add_column("Decoder")
    table.add_column("First t/n above baseline", justify="right")
    table.add_column("File")
    for (decoder, points), path in zip(curves.items(), paths, strict=True):
        onset = next((p.received_fraction for p in points if p.mean_info_fraction > p.received_fraction + 0.005), None)
        table.add_row(decoder, "-" if onset is None else f"{onset:.3f}", str(path))
    console.print(table)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, console: Console) -> int:
    cfg: BenchConfig = _run_config(args, RunKind.BENCH)
    console.print(f"seed={cfg.seed}")
    rows = run_bench(cfg)
    out = args.out or get_settings().results_dir
    if out.suffix != ".csv":
        out = out / f"bench_{cfg.code_params.label()}.csv"
    meta = metadata_line(cfg.seed, cfg.code_params, ",".join(d.value for d in cfg.decoders), trials=cfg.trials)
    write_text(out, format_bench_csv(rows, meta))

    table = Table(title=f"Mean decode time, {cfg.code_params.label()}")
    table.add_column("Erased")
    table.add_column("Decoder")
    table.add_column("Mean µs", justify="right")
    table.add_column("Info fraction", justify="right")
    for row in rows:
        table.add_row(f"{row.erased_fraction:.2f}", row.decoder.value, f"{row.mean_elapsed_us:.1f}", f"{row.mean_info_fraction:.4f}")
    console.print(table)
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace, console: Console) -> int:
    cfg: TrialConfig = _run_config(args, RunKind.THRESHOLD).for_decoder(Decoder.GE)
    console.print(f"seed={cfg.seed}")
    summary = measure_full_rank_threshold(cfg)
    table = Table(title=f"Full-rank threshold, {cfg.code_params.label()} (k={summary.k}, n={summary.n})")
    for column in ("trials", "min", "median", "mean", "max"):
        table.add_column(column, justify="right")
    table.add_row(
        str(summary.trials), str(summary.minimum), f"{summary.median:.1f}", f"{summary.mean:.3f}", str(summary.maximum)
    )
    console.print(table)
    if args.out is not None:
        out = args.out if args.out.suffix == ".csv" else args.out / f"threshold_{cfg.code_params.label()}.csv"
        write_text(out, format_threshold_csv(summary, metadata_line(cfg.seed, cfg.code_params, Decoder.GE.value)))
    return EXIT_OK


def cmd_verify_geometry(args: argparse.Namespace, console: Console) -> int:
    field = field_new(args.q)
    if args.m < 1:
        raise ParameterError(f"Dimension m must be at least 1, got {args.m}", context={"m": args.m})
    lines = geometry.enumerate_lines(field, args.m)
    enumerated = len(lines)
    brute = geometry.brute_force_line_count(field, args.m)
    ok = enumerated == brute == geometry.line_count(args.q, args.m)
    console.print(f"{enumerated} lines, brute-force {brute}, {'PASS' if ok else 'FAIL'}")
    if args.dump_lines:
        for line in lines:
            sys.stdout.write(f"{line.render(args.q)} " + " ".join(map(str, line.points)) + "\n")
    return EXIT_OK if ok else EXIT_INCOMPLETE


_COMMANDS: dict[str, Callable[[argparse.Namespace, Console], int]] = {
    "params": cmd_params,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "simulate": cmd_simulate,
    "bench": cmd_bench,
    "threshold": cmd_threshold,
    "verify-geometry": cmd_verify_geometry,
}


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    settings = get_settings()
    setup_logging(level="DEBUG" if args.verbose else settings.log_level, environment=settings.app_env.value)
    console = Console(highlight=False, soft_wrap=True)
    errors = Console(stderr=True, highlight=False, soft_wrap=True)
    # decode may write the word to stdout; keep its report off that stream
    out = errors if args.command in ("encode", "decode") else console
    try:
        return _COMMANDS[args.command](args, out)
    except CodingError as exc:
        logger.debug("Command %s failed: %s", args.command, exc.context)
        errors.print(f"error: {exc}", markup=False)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
