"""Monte-Carlo curves over prefix reception and the full-rank threshold.

Every trial draws a random message, encodes it and receives the codeword
position by position in the order given by the reception model. Trials are
independent, so they may run in worker processes; results are always
reduced in trial-index order.
"""

from __future__ import annotations

import logging
import statistics
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from time import perf_counter
from typing import TypeVar

import numpy as np

from src.codes.exceptions import IntegrityError, ParameterError
from src.codes.grm import GrmCode, code_new
from src.codes.rsline import ERASED
from src.config import get_settings
from src.decoders import (
    DecodeReport,
    Decoder,
    ProgressiveDecoder,
    ReceptionState,
    decode_ge,
    local_fixpoint,
    solve_erasures,
)
from src.sim.channel import make_rng, order_digest, random_message, reception_order, trial_seeds
from src.sim.models import (
    CurvePoint,
    FullRankSummary,
    IidErasure,
    InfoSetFirst,
    PrefixSummary,
    TrialConfig,
    TrialRecord,
)
from src.sim.rs_baseline import rs_baseline

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _code_for(cfg: TrialConfig) -> GrmCode:
    p = cfg.code_params
    return code_new(p.r, p.m, p.q)


def _summary(received: int, report: DecodeReport, elapsed: float, record_timing: bool) -> PrefixSummary:
    state = report.final_state
    return PrefixSummary(
        received=received,
        known_count=state.known_count,
        info_known_count=state.info_known_count,
        recovered_count=report.recovered_count,
        full_decode=report.full_decode,
        info_decode=report.info_decode,
        line_decode_ops=report.line_decode_ops,
        rref_pivots=report.rref_pivots,
        elapsed_us=elapsed * 1e6 if record_timing else 0.0,
    )


def _local_prefixes(code: GrmCode, codeword: list[int], order: list[int], decoder: Decoder, record_timing: bool) -> list[PrefixSummary]:
    # Closure of prefix t = closure of (closure of prefix t-1) plus one symbol.
    # Timing covers only the work done for prefix t, as for GE and RS.
    state = ReceptionState.erased(code)
    progressive = ProgressiveDecoder(code) if decoder == Decoder.PLD else None
    prefixes = [_summary(0, DecodeReport.of(state), 0.0, record_timing)]
    ops = 0
    for t, pos in enumerate(order, start=1):
        start = perf_counter()
        if progressive is not None:
            progressive.receive(pos, codeword[pos])
            report = DecodeReport.of(progressive.state, line_decode_ops=progressive.line_decode_ops)
        else:
            if state.receive(pos, codeword[pos]):
                step_ops, _ = local_fixpoint(code, state)
                ops += step_ops
            report = DecodeReport.of(state, line_decode_ops=ops)
            if decoder == Decoder.LD_GE and not report.full_decode:
                work = state.copy()
                pivots = solve_erasures(code, work)
                report = DecodeReport.of(work, line_decode_ops=ops, rref_pivots=pivots)
        elapsed = perf_counter() - start
        prefixes.append(_summary(t, report, elapsed, record_timing))
    return prefixes


def _ge_prefixes(code: GrmCode, codeword: list[int], order: list[int], record_timing: bool) -> tuple[list[PrefixSummary], int]:
    state = ReceptionState.erased(code)
    prefixes: list[PrefixSummary] = []
    threshold: int | None = None
    for t in range(code.n + 1):
        if t:
            pos = order[t - 1]
            state.receive(pos, codeword[pos])
        if threshold is not None and not record_timing:
            # full decode is monotone in the received set
            prefixes.append(
                PrefixSummary(
                    received=t,
                    known_count=code.n,
                    info_known_count=code.k,
                    recovered_count=code.n - t,
                    full_decode=True,
                    info_decode=True,
                    rref_pivots=code.n - t,
                )
            )
            continue
        report = decode_ge(code, state)
        if report.full_decode and threshold is None:
            threshold = t
        prefixes.append(_summary(t, report, report.elapsed, record_timing))
    assert threshold is not None  # every symbol received at t = n
    return prefixes, threshold


def _rs_order(cfg: TrialConfig, n: int, k: int, rng: np.random.Generator) -> list[int]:
    model = cfg.reception_model
    if isinstance(model, IidErasure):
        raise ParameterError("Prefix curves need an ordered reception model", context={"kind": model.kind})
    if isinstance(model, InfoSetFirst):
        return list(range(k)) + [k + int(i) for i in rng.permutation(n - k)]
    return [int(i) for i in rng.permutation(n)]


def _rs_trial(cfg: TrialConfig, index: int, seed: int) -> TrialRecord:
    rs = rs_baseline(cfg.code_params.q, cfg.rs_dimension)
    rng = make_rng(seed)
    word = rs.encode(rng.integers(0, rs.field.q, size=rs.k).tolist())
    order = _rs_order(cfg, rs.n, rs.k, rng)
    values = [ERASED] * rs.n
    prefixes = []
    for t in range(rs.n + 1):
        if t:
            values[order[t - 1]] = word[order[t - 1]]
        start = perf_counter()
        decoded = rs.decode(values)
        elapsed = perf_counter() - start
        if decoded is not None and decoded != word:
            raise IntegrityError("RS baseline decoded a different word", context={"trial": index, "received": t})
        info_known = rs.k if decoded is not None else sum(1 for v in values[: rs.k] if v != ERASED)
        full = decoded is not None
        prefixes.append(
            PrefixSummary(
                received=t,
                known_count=rs.n if full else t,
                info_known_count=info_known,
                recovered_count=rs.n - t if full else 0,
                full_decode=full,
                info_decode=info_known == rs.k,
                elapsed_us=elapsed * 1e6 if cfg.record_timing else 0.0,
            )
        )
    return TrialRecord(index=index, seed=seed, order_digest=order_digest(order), prefixes=prefixes)


def run_trial(cfg: TrialConfig, index: int, seed: int) -> TrialRecord:
    """One trial of a curve run; top-level so worker processes can pickle it."""
    if cfg.decoder == Decoder.RS:
        return _rs_trial(cfg, index, seed)
    code = _code_for(cfg)
    rng = make_rng(seed)
    codeword = code.encode(random_message(code, rng)).tolist()
    order = reception_order(code, cfg.reception_model, rng).tolist()
    threshold = None
    if cfg.decoder == Decoder.GE:
        prefixes, threshold = _ge_prefixes(code, codeword, order, cfg.record_timing)
    else:
        prefixes = _local_prefixes(code, codeword, order, cfg.decoder, cfg.record_timing)
    return TrialRecord(
        index=index,
        seed=seed,
        order_digest=order_digest(order),
        prefixes=prefixes,
        full_rank_threshold=threshold,
    )


def _map_trials(fn: Callable[[TrialConfig, int, int], T], cfg: TrialConfig, seeds: list[int]) -> list[T]:
    workers = cfg.workers or get_settings().sim_workers
    if workers <= 1 or len(seeds) < 2:
        return [fn(cfg, index, seed) for index, seed in enumerate(seeds)]
    chunksize = max(1, len(seeds) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, repeat(cfg), range(len(seeds)), seeds, chunksize=chunksize))


def run_trials(cfg: TrialConfig) -> list[TrialRecord]:
    """Per-trial records in trial-index order.

    Raises:
        ParameterError: If ``cfg.seed`` is unset.
    """
    if cfg.seed is None:
        raise ParameterError("Trial runs need a seed; call with_seed() first")
    seeds = trial_seeds(cfg.seed, cfg.trials)
    return _map_trials(run_trial, cfg, seeds)


def aggregate_curve(records: list[TrialRecord], k: int) -> list[CurvePoint]:
    """Average per-prefix outcomes across trials, in trial order."""
    if not records:
        return []
    length = len(records[0].prefixes) - 1
    count = len(records)
    points = []
    for t in range(length + 1):
        rows = [record.prefixes[t] for record in records]
        points.append(
            CurvePoint(
                received=t,
                received_fraction=t / length,
                mean_info_fraction=sum(row.info_known_count for row in rows) / (count * k),
                prob_full_decode=sum(1 for row in rows if row.info_decode) / count,
                mean_elapsed_us=sum(row.elapsed_us for row in rows) / count,
            )
        )
    return points


def run_curve(cfg: TrialConfig) -> list[CurvePoint]:
    """Success curve over prefix lengths t = 0..n for one code and decoder.

    Args:
        cfg: Run configuration; a seed is drawn when none is set.

    Returns:
        One ``CurvePoint`` per prefix length (0..q for the RS baseline).
    """
    cfg = cfg.with_seed()
    p = cfg.code_params
    logger.info(
        "Curve run: code r=%d m=%d q=%d, decoder=%s, trials=%d, seed=%d",
        p.r, p.m, p.q, cfg.decoder.value, cfg.trials, cfg.seed,
    )
    start = perf_counter()
    records = run_trials(cfg)
    k = cfg.rs_dimension if cfg.decoder == Decoder.RS else _code_for(cfg).k
    points = aggregate_curve(records, k)
    logger.info("Curve run finished in %.2fs", perf_counter() - start)
    return points


def _threshold_trial(cfg: TrialConfig, index: int, seed: int) -> int:
    # Same draws as run_trial, so the result matches TrialRecord.full_rank_threshold.
    code = _code_for(cfg)
    rng = make_rng(seed)
    codeword = code.encode(random_message(code, rng)).tolist()
    order = reception_order(code, cfg.reception_model, rng).tolist()
    lo, hi = code.k, code.n
    while lo < hi:
        mid = (lo + hi) // 2
        state = ReceptionState.from_codeword(code, codeword, order[:mid])
        if decode_ge(code, state).full_decode:
            hi = mid
        else:
            lo = mid + 1
    return hi


def measure_full_rank_threshold(cfg: TrialConfig) -> FullRankSummary:
    """Distribution of the smallest prefix length at which GE decodes the whole word.

    GE full decode is monotone in the received set, so each trial bisects
    over [k, n]; nothing below k can have full rank.

    Raises:
        ParameterError: Unless ``cfg.decoder`` is GE.
    """
    if cfg.decoder != Decoder.GE:
        raise ParameterError("The full-rank threshold is defined for the GE decoder", context={"decoder": cfg.decoder.value})
    cfg = cfg.with_seed()
    assert cfg.seed is not None
    code = _code_for(cfg)
    seeds = trial_seeds(cfg.seed, cfg.trials)
    thresholds = _map_trials(_threshold_trial, cfg, seeds)
    summary = FullRankSummary(
        trials=len(thresholds),
        k=code.k,
        n=code.n,
        minimum=min(thresholds),
        median=float(statistics.median(thresholds)),
        mean=statistics.fmean(thresholds),
        maximum=max(thresholds),
        thresholds=thresholds,
    )
    logger.info("Full-rank threshold over %d trials: min=%d median=%.1f", summary.trials, summary.minimum, summary.median)
    return summary
