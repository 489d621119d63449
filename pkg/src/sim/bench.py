"""Paired decoder runtime comparison under i.i.d. erasures.

Each trial draws one codeword and one erasure pattern and feeds the same
pattern to every decoder, so per-fraction means compare like with like.
PLD is timed over its arrival loop only, without per-arrival snapshots.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from time import perf_counter

from src.codes.grm import code_new
from src.decoders import (
    DecodeReport,
    Decoder,
    ProgressiveDecoder,
    ReceptionState,
    decode_ge,
    decode_ld,
    decode_ld_then_ge,
)
from src.sim.channel import erasure_pattern, make_rng, random_message, trial_seeds
from src.sim.models import BenchConfig, BenchRow

logger = logging.getLogger(__name__)


def _timed_pld(arrivals: list[tuple[int, int]], decoder: ProgressiveDecoder) -> DecodeReport:
    for position, value in arrivals:
        decoder.receive(position, value)
    return DecodeReport.of(decoder.state, line_decode_ops=decoder.line_decode_ops, elapsed=decoder.elapsed)


def run_bench(cfg: BenchConfig) -> list[BenchRow]:
    """Mean decode time per (erasure fraction, decoder) over paired trials.

    Args:
        cfg: Bench configuration; a seed is drawn when none is set.

    Returns:
        Rows ordered by fraction, then by ``cfg.decoders`` order.
    """
    seeded = cfg.with_seed()
    assert seeded.seed is not None
    p = seeded.code_params
    code = code_new(p.r, p.m, p.q)
    logger.info(
        "Bench run: code r=%d m=%d q=%d, decoders=%s, trials=%d, seed=%d",
        p.r, p.m, p.q, ",".join(d.value for d in cfg.decoders), seeded.trials, seeded.seed,
    )

    rows: list[BenchRow] = []
    for stream, fraction in enumerate(cfg.erasure_fractions):
        totals: dict[Decoder, list[float]] = defaultdict(lambda: [0.0, 0.0, 0.0, 0.0])
        for seed in trial_seeds(seeded.seed, seeded.trials, stream=stream):
            rng = make_rng(seed)
            codeword = code.encode(random_message(code, rng)).tolist()
            received = erasure_pattern(code.n, fraction, rng)
            arrivals = [(int(pos), codeword[pos]) for pos in rng.permutation(received)]
            state = ReceptionState.from_codeword(code, codeword, received)
            for decoder in cfg.decoders:
                if decoder == Decoder.LD:
                    report = decode_ld(code, state)
                elif decoder == Decoder.PLD:
                    report = _timed_pld(arrivals, ProgressiveDecoder(code))
                elif decoder == Decoder.GE:
                    report = decode_ge(code, state)
                else:
                    report = decode_ld_then_ge(code, state)
                acc = totals[decoder]
                acc[0] += report.elapsed
                acc[1] += report.final_state.info_known_count / code.k
                acc[2] += float(report.info_decode)
                acc[3] += report.line_decode_ops
        trials = seeded.trials
        for decoder in cfg.decoders:
            elapsed, info, full, ops = totals[decoder]
            rows.append(
                BenchRow(
                    erased_fraction=fraction,
                    decoder=decoder,
                    trials=trials,
                    mean_elapsed_us=elapsed / trials * 1e6,
                    mean_info_fraction=info / trials,
                    prob_full_decode=full / trials,
                    mean_line_decode_ops=ops / trials,
                )
            )
        logger.debug("Bench fraction %.2f done", fraction)
    return rows


def paired_times(rows: list[BenchRow]) -> dict[float, dict[Decoder, float]]:
    """Mean microseconds keyed by fraction then decoder."""
    table: dict[float, dict[Decoder, float]] = defaultdict(dict)
    for row in rows:
        table[row.erased_fraction][row.decoder] = row.mean_elapsed_us
    return dict(table)
