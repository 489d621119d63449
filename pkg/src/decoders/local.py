"""Local decoders: exhaustive line sweeps (LD) and progressive per-arrival decoding (PLD).

Both compute the same closure: repeatedly decode any line holding at least
r+1 known symbols and at least one erasure. LD sweeps every canonical line
until a sweep makes no progress; PLD reacts to each newly known symbol by
examining only the lines through it.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence
from time import perf_counter
from typing import TYPE_CHECKING

from src.codes.exceptions import ParameterError
from src.codes.rsline import ERASED, LineView, interpolate_line, parity_complement
from src.decoders.state import DecodeReport, ReceptionState

if TYPE_CHECKING:
    from src.codes.grm import GrmCode

logger = logging.getLogger(__name__)


def decode_line(code: GrmCode, state: ReceptionState, points: Sequence[int]) -> list[int]:
    """Fill the erasures of one line in place and return the positions recovered.

    Uses the additions-only parity decode when ``r = q-2`` and exactly one
    symbol is missing, Lagrange interpolation otherwise.
    """
    values = state.values
    seen = tuple(values[p] for p in points)
    if code.r == code.q - 2 and seen.count(ERASED) == 1:
        hole = points[seen.index(ERASED)]
        state.recover(hole, parity_complement(code.field, (v for v in seen if v != ERASED)))
        return [hole]
    filled = interpolate_line(code.field, LineView(seen), code.r)
    recovered = []
    for p, old, new in zip(points, seen, filled, strict=True):
        if old == ERASED:
            state.recover(p, new)
            recovered.append(p)
    return recovered


def local_fixpoint(code: GrmCode, state: ReceptionState) -> tuple[int, int]:
    """Run LD sweeps on ``state`` in place until a full sweep makes no progress.

    Returns:
        ``(line_decode_ops, sweeps)``.
    """
    threshold, q = code.r + 1, code.q
    values = state.values
    point_lists = code.lines.point_lists
    ops = sweeps = 0
    progress = True
    while progress:
        progress = False
        sweeps += 1
        for points in point_lists:
            erased = [values[p] for p in points].count(ERASED)
            if erased and q - erased >= threshold:
                decode_line(code, state, points)
                ops += 1
                progress = True
    return ops, sweeps


def decode_ld(code: GrmCode, state: ReceptionState) -> DecodeReport:
    """Exhaustive local decoding: line-local closure by repeated sweeps over all lines.

    Args:
        code: The GRM code the word belongs to.
        state: Reception state; not modified.

    Returns:
        A ``DecodeReport`` whose final state is the closure fixpoint.
    """
    if state.n != code.n:
        raise ParameterError(f"State holds {state.n} symbols, code length is {code.n}", context=code.params.as_dict())
    start = perf_counter()
    work = state.copy()
    ops, sweeps = local_fixpoint(code, work)
    elapsed = perf_counter() - start
    logger.debug("LD: %d line decodes in %d sweeps, %d/%d known", ops, sweeps, work.known_count, code.n)
    return DecodeReport.of(work, line_decode_ops=ops, elapsed=elapsed)


class ProgressiveDecoder:
    """Event-driven local decoder fed one arriving symbol at a time.

    Keeps a known-symbol count per line and a work queue of newly known
    symbols; each dequeued symbol triggers a check of its incident lines, and
    symbols recovered there are queued in turn.

    Attributes:
        code: The GRM code.
        state: Current reception state (owned by this decoder).
        line_decode_ops: RS line decodes performed so far.
        elapsed: Wall-clock seconds spent inside ``receive``.
    """

    def __init__(self, code: GrmCode, state: ReceptionState | None = None) -> None:
        self.code = code
        self.state = ReceptionState.erased(code) if state is None else state.copy()
        if self.state.n != code.n:
            raise ParameterError(f"State holds {self.state.n} symbols, code length is {code.n}", context=code.params.as_dict())
        self.line_decode_ops = 0
        self.elapsed = 0.0
        self._threshold = code.r + 1
        self._incidence = code.lines.incidence_lists
        self._point_lists = code.lines.point_lists
        values = self.state.values
        self._line_known = [sum(1 for p in points if values[p] != ERASED) for points in self._point_lists]
        self._queue: deque[int] = deque(self.state.known_positions())
        if self._queue:
            start = perf_counter()
            self._drain()
            self.elapsed += perf_counter() - start

    def _mark_known(self, position: int) -> None:
        line_known = self._line_known
        for line_id in self._incidence[position]:
            line_known[line_id] += 1

    def _drain(self) -> list[int]:
        recovered: list[int] = []
        q, threshold = self.code.q, self._threshold
        line_known, queue = self._line_known, self._queue
        while queue:
            u = queue.popleft()
            for line_id in self._incidence[u]:
                if threshold <= line_known[line_id] < q:
                    fresh = decode_line(self.code, self.state, self._point_lists[line_id])
                    self.line_decode_ops += 1
                    for p in fresh:
                        self._mark_known(p)
                        queue.append(p)
                    recovered.extend(fresh)
        return recovered

    def receive(self, position: int, value: int) -> list[int]:
        """Process one arriving symbol and cascade.

        Returns:
            Positions recovered as a consequence of this arrival.

        Raises:
            ParameterError: Position out of range or already received.
            IntegrityError: The value contradicts a recovered symbol or a line.
        """
        start = perf_counter()
        recovered: list[int] = []
        if self.state.receive(position, value):
            self._mark_known(position)
            self._queue.append(position)
            recovered = self._drain()
        self.elapsed += perf_counter() - start
        return recovered

    def report(self) -> DecodeReport:
        """Snapshot of the current state."""
        return DecodeReport.of(self.state.copy(), line_decode_ops=self.line_decode_ops, elapsed=self.elapsed)


def decode_pld(code: GrmCode, arrivals: Sequence[tuple[int, int]]) -> list[DecodeReport]:
    """Progressive local decoding over an ordered arrival sequence.

    Args:
        code: The GRM code.
        arrivals: ``(position, value)`` pairs in arrival order.

    Returns:
        One report per arrival, each a snapshot after that arrival's cascade.

    Raises:
        ParameterError: Duplicate positions among the arrivals.
    """
    positions = [p for p, _ in arrivals]
    if len(set(positions)) != len(positions):
        raise ParameterError("Arrival positions must be distinct", context={"arrivals": len(positions)})
    decoder = ProgressiveDecoder(code)
    reports = []
    for position, value in arrivals:
        decoder.receive(position, value)
        reports.append(decoder.report())
    logger.debug("PLD: %d arrivals, %d line decodes", len(arrivals), decoder.line_decode_ops)
    return reports
