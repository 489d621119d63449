"""Block erasure channel simulation: success curves, full-rank threshold and runtime bench."""

from src.sim.bench import paired_times, run_bench
from src.sim.models import (
    BenchConfig,
    BenchRow,
    CodeParamsConfig,
    CurvePoint,
    FullRankSummary,
    IidErasure,
    InfoSetFirst,
    PrefixSummary,
    RandomOrder,
    SimulationConfig,
    TrialConfig,
    TrialRecord,
)
from src.sim.runner import aggregate_curve, measure_full_rank_threshold, run_curve, run_trial, run_trials

__all__ = [
    "BenchConfig",
    "BenchRow",
    "CodeParamsConfig",
    "CurvePoint",
    "FullRankSummary",
    "IidErasure",
    "InfoSetFirst",
    "PrefixSummary",
    "RandomOrder",
    "SimulationConfig",
    "TrialConfig",
    "TrialRecord",
    "aggregate_curve",
    "measure_full_rank_threshold",
    "paired_times",
    "run_bench",
    "run_curve",
    "run_trial",
    "run_trials",
]
