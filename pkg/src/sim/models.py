"""Pydantic models for simulation configuration and results."""

from __future__ import annotations

import secrets
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.codes.exceptions import ParameterError
from src.codes.grm import CodeParams
from src.config import get_settings
from src.decoders import GRM_DECODERS, Decoder

MAX_SEED = 2**64 - 1


class CodeParamsConfig(BaseModel):
    """GRM parameters as they appear in a run configuration."""

    r: int = Field(ge=1)
    m: int = Field(ge=1)
    q: int = Field(ge=3)

    @model_validator(mode="after")
    def _valid_code(self) -> CodeParamsConfig:
        try:
            self.to_params()
        except ParameterError as exc:
            raise ValueError(str(exc)) from exc
        return self

    def to_params(self) -> CodeParams:
        return CodeParams(r=self.r, m=self.m, q=self.q)

    def label(self) -> str:
        return f"r{self.r}_m{self.m}_q{self.q}"


# ── Reception models ──


class RandomOrder(BaseModel):
    """Uniformly random permutation of the n symbols; prefixes are received."""

    kind: Literal["random_order"] = "random_order"


class IidErasure(BaseModel):
    """Each symbol erased independently with probability ``epsilon``."""

    kind: Literal["iid_erasure"] = "iid_erasure"
    epsilon: float = Field(default=0.5, ge=0.0, le=1.0)


class InfoSetFirst(BaseModel):
    """Information-set positions first, the rest in random order."""

    kind: Literal["info_set_first"] = "info_set_first"


ReceptionModel = Annotated[RandomOrder | IidErasure | InfoSetFirst, Field(discriminator="kind")]


# ── Configuration ──


class TrialConfig(BaseModel):
    """One Monte-Carlo run over a single code and decoder."""

    model_config = ConfigDict(extra="forbid")

    code_params: CodeParamsConfig
    decoder: Decoder = Decoder.LD
    trials: int = Field(default_factory=lambda: get_settings().sim_trials, ge=1)
    seed: int | None = Field(default=None, ge=0, le=MAX_SEED)
    reception_model: ReceptionModel = Field(default_factory=RandomOrder)
    rs_dimension: int = Field(default=4, ge=1, description="Dimension of the word-wise RS baseline.")
    record_timing: bool = Field(default=False, description="Write measured decode times into curve output.")
    workers: int | None = Field(default=None, ge=1, le=64)

    @model_validator(mode="after")
    def _rs_fits_field(self) -> TrialConfig:
        if self.rs_dimension > self.code_params.q:
            raise ValueError(f"rs_dimension {self.rs_dimension} exceeds the field order {self.code_params.q}")
        return self

    def with_seed(self) -> TrialConfig:
        """Copy with a freshly drawn seed when none is set."""
        if self.seed is not None:
            return self
        return self.model_copy(update={"seed": secrets.randbits(64)})

    def for_decoder(self, decoder: Decoder) -> TrialConfig:
        return self.model_copy(update={"decoder": decoder})


class SimulationConfig(TrialConfig):
    """Curve run; ``decoders`` overrides ``decoder`` to produce one curve per decoder."""

    decoders: list[Decoder] | None = None

    def decoder_list(self) -> list[Decoder]:
        return list(self.decoders) if self.decoders else [self.decoder]


class BenchConfig(TrialConfig):
    """Paired runtime comparison under i.i.d. erasures."""

    erasure_fractions: list[float] = Field(default_factory=lambda: [0.1, 0.2, 0.3, 0.4, 0.5], min_length=1)
    decoders: list[Decoder] = Field(default_factory=lambda: [Decoder.LD, Decoder.PLD, Decoder.GE], min_length=1)

    @field_validator("erasure_fractions")
    @classmethod
    def _fractions_in_range(cls, values: list[float]) -> list[float]:
        for value in values:
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"Erasure fraction {value} outside [0, 1]")
        return values

    @field_validator("decoders")
    @classmethod
    def _grm_decoders_only(cls, values: list[Decoder]) -> list[Decoder]:
        for value in values:
            if value not in GRM_DECODERS:
                raise ValueError(f"Decoder {value.value!r} cannot be benchmarked")
        return values


# ── Results ──


class CurvePoint(BaseModel):
    """Aggregate over all trials at one prefix length."""

    received: int = Field(ge=0)
    received_fraction: float = Field(ge=0.0, le=1.0)
    mean_info_fraction: float = Field(ge=0.0, le=1.0)
    prob_full_decode: float = Field(ge=0.0, le=1.0, description="Fraction of trials with every information symbol known.")
    mean_elapsed_us: float = Field(
        default=0.0, ge=0.0, description="Mean decode time spent on this prefix alone (0 unless record_timing)."
    )


class PrefixSummary(BaseModel):
    """Decoder outcome after one prefix of a trial's reception order."""

    received: int
    known_count: int
    info_known_count: int
    recovered_count: int
    full_decode: bool
    info_decode: bool
    line_decode_ops: int = 0
    rref_pivots: int = 0
    elapsed_us: float = 0.0  # this prefix only, never cumulative


class TrialRecord(BaseModel):
    index: int
    seed: int
    order_digest: str
    prefixes: list[PrefixSummary]
    full_rank_threshold: int | None = None


class FullRankSummary(BaseModel):
    """Distribution of the smallest prefix length at which GE recovers every symbol."""

    trials: int
    k: int
    n: int
    minimum: int
    median: float
    mean: float
    maximum: int
    thresholds: list[int]


class BenchRow(BaseModel):
    erased_fraction: float
    decoder: Decoder
    trials: int
    mean_elapsed_us: float
    mean_info_fraction: float
    prob_full_decode: float
    mean_line_decode_ops: float = 0.0
