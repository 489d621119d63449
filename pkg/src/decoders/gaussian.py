"""Maximum-likelihood erasure decoding by Gaussian elimination on the parity-check system.

With H the parity-check matrix (point order), Y_0 the erased symbols and H_0
their columns, the syndrome constraint H Y^T = 0 becomes H_0 Y_0^T = D^T with
D = -H_known Y_known^T. Reducing [H_0 | D^T] to row echelon form, each row
of the form [unit vector | d] determines one erased symbol.
"""

from __future__ import annotations

import logging
from time import perf_counter
from typing import TYPE_CHECKING

import numpy as np

from src.codes.exceptions import IntegrityError, ParameterError
from src.codes.linalg import matvec, rref
from src.decoders.local import decode_ld
from src.decoders.state import DecodeReport, ReceptionState

if TYPE_CHECKING:
    from src.codes.grm import GrmCode

logger = logging.getLogger(__name__)


def solve_erasures(code: GrmCode, state: ReceptionState) -> int:
    """Recover in place every erased symbol the parity-check system determines.

    Returns:
        The rank reached by the elimination.

    Raises:
        IntegrityError: A zero coefficient row with a nonzero constant.
    """
    erased = state.erased_positions()
    if not erased:
        return 0
    field = code.field
    known = state.known_positions()
    h = code.parity_natural
    constants = field.neg_table[matvec(field, h[:, known], [state.values[i] for i in known])]
    augmented = np.concatenate([h[:, erased], constants[:, None]], axis=1)

    width = len(erased)
    reduced, pivots = rref(field, augmented.tolist(), ncols=width)
    for row in reduced[len(pivots) :]:
        if row[-1]:
            raise IntegrityError(
                "Parity-check system is inconsistent with the received symbols",
                context={"erased": width, "rank": len(pivots)},
            )
    for row, col in zip(reduced, pivots, strict=False):
        if sum(1 for x in row[:width] if x) == 1:
            state.recover(erased[col], row[-1])
    return len(pivots)


def decode_ge(code: GrmCode, state: ReceptionState) -> DecodeReport:
    """Gaussian-elimination (ML) decoding; supports partial recovery.

    Args:
        code: The GRM code.
        state: Reception state; not modified.

    Returns:
        A report with ``rref_pivots`` set to the rank; ``full_decode`` holds
        exactly when the rank equals the number of erasures.
    """
    if state.n != code.n:
        raise ParameterError(f"State holds {state.n} symbols, code length is {code.n}", context=code.params.as_dict())
    start = perf_counter()
    work = state.copy()
    erased = state.n - state.known_count
    pivots = solve_erasures(code, work)
    elapsed = perf_counter() - start
    logger.debug("GE: rank %d for %d erasures", pivots, erased)
    return DecodeReport.of(work, rref_pivots=pivots, elapsed=elapsed)


def decode_ld_then_ge(code: GrmCode, state: ReceptionState) -> DecodeReport:
    """LD to its fixpoint, then Gaussian elimination on the remaining erasures."""
    local = decode_ld(code, state)
    start = perf_counter()
    work = local.final_state
    pivots = solve_erasures(code, work)
    elapsed = local.elapsed + perf_counter() - start
    return DecodeReport.of(work, line_decode_ops=local.line_decode_ops, rref_pivots=pivots, elapsed=elapsed)
