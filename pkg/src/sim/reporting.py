"""CSV output for curves, bench tables and threshold summaries.

Every file starts with one ``#`` metadata line (generator, seed, code,
decoder) followed by the header row. Floats are written with six decimals so
seeded runs produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path

from src.sim.channel import RNG_NAME
from src.sim.models import BenchRow, CodeParamsConfig, CurvePoint, FullRankSummary

logger = logging.getLogger(__name__)

CURVE_HEADER = ("received_fraction", "mean_info_fraction", "prob_full_decode", "mean_elapsed_us")
BENCH_HEADER = ("erased_fraction", "decoder", "trials", "mean_elapsed_us", "mean_info_fraction", "prob_full_decode", "mean_line_decode_ops")
THRESHOLD_HEADER = ("trial", "full_rank_threshold")


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def metadata_line(seed: int | None, code: CodeParamsConfig, decoder: str, **extra: object) -> str:
    fields: dict[str, object] = {"rng": RNG_NAME, "seed": seed, "code": code.label(), "decoder": decoder, **extra}
    return "# " + " ".join(f"{key}={value}" for key, value in fields.items())


def _render(meta: str, header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    buffer.write(meta + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def format_curve_csv(points: Sequence[CurvePoint], meta: str) -> str:
    rows = (
        (_fmt(p.received_fraction), _fmt(p.mean_info_fraction), _fmt(p.prob_full_decode), _fmt(p.mean_elapsed_us))
        for p in points
    )
    return _render(meta, CURVE_HEADER, rows)


def format_bench_csv(rows: Sequence[BenchRow], meta: str) -> str:
    body = (
        (
            _fmt(r.erased_fraction),
            r.decoder.value,
            str(r.trials),
            _fmt(r.mean_elapsed_us),
            _fmt(r.mean_info_fraction),
            _fmt(r.prob_full_decode),
            _fmt(r.mean_line_decode_ops),
        )
        for r in rows
    )
    return _render(meta, BENCH_HEADER, body)


def format_threshold_csv(summary: FullRankSummary, meta: str) -> str:
    body = ((str(i), str(t)) for i, t in enumerate(summary.thresholds))
    return _render(meta, THRESHOLD_HEADER, body)


def curve_filename(code: CodeParamsConfig, decoder: str) -> str:
    return f"curve_{code.label()}_{decoder}.csv"


def write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("Wrote %s", path)
    return path


def write_curves(out_dir: Path, code: CodeParamsConfig, seed: int | None, curves: Mapping[str, Sequence[CurvePoint]]) -> list[Path]:
    """One CSV per decoder under ``out_dir``."""
    return [
        write_text(out_dir / curve_filename(code, decoder), format_curve_csv(points, metadata_line(seed, code, decoder)))
        for decoder, points in curves.items()
    ]
