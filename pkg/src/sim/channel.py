"""Block erasure channel: seeded generators, reception orders and erasure patterns."""

from __future__ import annotations

import hashlib
from typing import TYPE_CHECKING

import numpy as np

from src.codes.exceptions import ParameterError
from src.sim.models import IidErasure, InfoSetFirst, RandomOrder

if TYPE_CHECKING:
    from src.codes.gf import IntArray
    from src.codes.grm import GrmCode
    from src.sim.models import ReceptionModel

RNG_NAME = "PCG64"


def trial_seeds(seed: int, trials: int, stream: int | None = None) -> list[int]:
    """Independent 64-bit seeds for ``trials`` trials, spawned from the run seed.

    ``stream`` selects a separate family of seeds from the same run seed
    (used by the bench, one stream per erasure fraction).
    """
    spawn_key = () if stream is None else (stream,)
    children = np.random.SeedSequence(seed, spawn_key=spawn_key).spawn(trials)
    return [int(child.generate_state(1, np.uint64)[0]) for child in children]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_message(code: GrmCode, rng: np.random.Generator) -> IntArray:
    return rng.integers(0, code.q, size=code.k, dtype=np.int64)


def reception_order(code: GrmCode, model: ReceptionModel, rng: np.random.Generator) -> IntArray:
    """Order in which the n positions arrive; prefixes of it are the received sets.

    Raises:
        ParameterError: For ``IidErasure``, which defines a pattern and no order.
    """
    if isinstance(model, RandomOrder):
        return rng.permutation(code.n)
    if isinstance(model, InfoSetFirst):
        info = np.array(code.info_set, dtype=np.int64)
        rest = np.setdiff1d(np.arange(code.n, dtype=np.int64), info)
        return np.concatenate([info, rng.permutation(rest)])
    if isinstance(model, IidErasure):
        raise ParameterError("Prefix curves need an ordered reception model", context={"kind": model.kind})
    raise ParameterError(f"Unknown reception model {model!r}")  # pragma: no cover


def erasure_pattern(n: int, epsilon: float, rng: np.random.Generator) -> IntArray:
    """Received positions, ascending, when each symbol is erased with probability ``epsilon``."""
    return np.flatnonzero(rng.random(n) >= epsilon)


def order_digest(order: IntArray | list[int]) -> str:
    """First 16 hex characters of the SHA-256 of the order as little-endian uint32."""
    data = np.asarray(order, dtype="<u4").tobytes()
    return hashlib.sha256(data).hexdigest()[:16]
