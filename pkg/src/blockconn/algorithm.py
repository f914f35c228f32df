"""Connectivity by symmetric row/column interchanges (Algorithm D).

The matrix is reordered so that every connected component occupies a
contiguous diagonal block. Isolated vertices are swept to the end first;
the remaining prefix is then grown one position at a time, always placing
the unplaced vertex whose leftmost neighbour comes earliest, and position
``i`` closes a component exactly when no edge crosses it.

All public functions take and report 1-based positions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EmptyCandidateRange, PositionOutOfRange, ZeroRow
from .graph import (
    AdjacencyMatrix,
    ConnectivityReport,
    Permutation,
    TraceStep,
    validate_adjacency,
)


@dataclass(frozen=True)
class PivotSelection:
    """Leftmost-1 columns ``k`` for rows ``p..p+len(k)-1``, their minimum, and its first row."""

    p: int
    k: tuple[int, ...]
    q_min: int
    s: int

    def k_of(self, j: int) -> int:
        return self.k[j - self.p]

    @property
    def k_map(self) -> dict[int, int]:
        return {self.p + off: kj for off, kj in enumerate(self.k)}


def isolated_sweep(m: AdjacencyMatrix, perm: Permutation, *, backend=None):
    """Move every zero row/column to the tail. Returns ``(r, n_active)``.

    A row swapped to the tail is replaced by an unexamined one, so the same
    position is checked again before moving on.
    """
    r, n_active, _ = _sweep(m, perm, kernels.resolve(backend), None)
    return r, n_active


def _sweep(m, perm, k, trace):
    a = m.entries
    i, n = 0, m.n
    r = swaps = 0
    while i != n:
        if k.row_is_zero(a, i, n):
            r += 1
            if i != n - 1:
                k.swap(a, perm.label_at, perm.position_of, i, n - 1)
                swaps += 1
            if trace is not None:
                trace.append(TraceStep("D3", i + 1, i + 1, swap=(i + 1, n)))
            n -= 1
        else:
            i += 1
    return r, n, swaps


def first_nonzero_index(m: AdjacencyMatrix, j: int, *, backend=None) -> int:
    """Column of the leftmost 1 in row ``j``."""
    if not 1 <= j <= m.n:
        raise PositionOutOfRange(j, m.n)
    c = kernels.resolve(backend).first_nonzero(m.entries, j - 1, m.n)
    if c < 0:
        raise ZeroRow(j)
    return c + 1


def select_pivot(m: AdjacencyMatrix, p: int, n_active: int, *, backend=None) -> PivotSelection:
    """Leftmost-1 column of each row ``p..n_active`` and the row that attains the minimum.

    Ties go to the smallest row index.
    """
    if p < 1 or n_active > m.n:
        raise PositionOutOfRange(p if p < 1 else n_active, m.n)
    if p > n_active:
        raise EmptyCandidateRange(p, n_active)
    out = np.empty(n_active - p + 1, dtype=np.intp)
    kernels.resolve(backend).first_nonzero_all(m.entries, p - 1, n_active, out)
    zero = np.flatnonzero(out < 0)
    if zero.size:
        raise ZeroRow(p + int(zero[0]))
    off = int(out.argmin())
    return PivotSelection(p=p, k=tuple(int(c) + 1 for c in out), q_min=int(out[off]) + 1, s=p + off)


def cut_holds(m: AdjacencyMatrix, i: int, n_active: int, *, backend=None) -> bool:
    """True when row ``i`` has no 1 right of the diagonal and rows below ``i`` have none in columns ``1..i``.

    Only the active ``n_active`` prefix is inspected. Both conditions are
    checked even though symmetry makes one imply the other.
    """
    if not 1 <= i <= n_active or n_active > m.n:
        raise PositionOutOfRange(i, n_active)
    return bool(kernels.resolve(backend).cut_holds(m.entries, i - 1, n_active))


class AlgorithmD:
    """Stepwise driver over a private copy of the input matrix.

    Use :meth:`run` for a full analysis, or :meth:`sweep` followed by
    repeated :meth:`advance` to inspect intermediate matrices.

    Attributes mirror the algorithm's variables (1-based): ``i`` the cut
    position under consideration, ``p`` the first unplaced row (always
    equal to ``i`` at the loop head), ``n_active`` the non-isolated prefix,
    ``r`` the isolated count, ``b`` the original order, ``l`` the cut
    counter, ``y`` the boundary counter and ``boundaries`` the list
    ``l_0..l_y``.
    """

    def __init__(self, m: AdjacencyMatrix, *, backend=None, trace: bool = False, debug: bool = False):
        self.original = m
        self.matrix = m.copy()
        self.perm = Permutation.identity(m.n)
        self.kernels = kernels.resolve(backend)
        self.debug = debug
        self.trace: list[TraceStep] | None = [] if trace else None

        self.b = m.n
        self.r = 0
        self.n_active = m.n
        self.i = self.p = 0
        self.l = 0
        self.y = 0
        self.boundaries = [0]
        self.swaps = 0
        self.done = False
        self._swept = False
        self._last_cut = False

    def sweep(self) -> None:
        """Isolated-vertex sweep, then set up the main loop."""
        if self._swept:
            return
        self._swept = True
        self.r, self.n_active, self.swaps = _sweep(self.matrix, self.perm, self.kernels, self.trace)

        if self.r == self.b:
            self.l = 0
            self._finish(record_final=False)
            self._log("D5", s=None)
        elif self.n_active < 3:
            self.l = 1
            self._finish()
        else:
            self.i = self.p = 2
            self.l = 1
            self.y = 0

    def advance(self) -> bool:
        """Process one cut position. Returns False once the run has finished."""
        if not self._swept:
            self.sweep()
        if self.done:
            return False
        if self.i >= self.n_active:
            self._finish()
            return False

        a, k = self.matrix.entries, self.kernels
        i0, n = self.i - 1, self.n_active
        s0, q0 = k.pivot(a, self.p - 1, n, i0)
        if s0 < 0:
            raise ZeroRow(self.p)
        s, q_min = s0 + 1, q0 + 1
        if self.debug and not self._last_cut:
            assert q_min <= self.i - 1, (
                f"no candidate row touches positions 1..{self.i - 1} although no cut was found there"
            )
        self._log("D10", s=s, q_min=q_min)
        if s != self.i:
            k.swap(a, self.perm.label_at, self.perm.position_of, s0, i0)
            self.swaps += 1
            self._log("D11", swap=(s, self.i))

        holds = bool(k.cut_holds(a, i0, n))
        self._log("D12", cut=holds)
        self._last_cut = holds
        if holds:
            self.l += 1
            self.y += 1
            self.boundaries.append(self.i)
        self.i += 1
        self.p += 1
        if self.i >= self.n_active:
            self._finish()
            return False
        return True

    def _finish(self, record_final: bool = True) -> None:
        if self.done:
            return
        self.done = True
        if record_final:
            self.y += 1
            self.boundaries.append(self.n_active)
            self._log("D7")

    def _log(self, step: str, **fields) -> None:
        if self.trace is not None:
            self.trace.append(TraceStep(step, self.i, self.p, **fields))

    def run(self) -> ConnectivityReport:
        self.sweep()
        while self.advance():
            pass
        return self.report()

    def report(self) -> ConnectivityReport:
        if not self.done:
            raise RuntimeError("analysis has not finished")
        labels = self.perm.label_at + 1
        components = [
            tuple(sorted(labels[lo:hi].tolist()))
            for lo, hi in zip(self.boundaries, self.boundaries[1:])
        ]
        components.extend((int(v),) for v in labels[self.n_active :])
        num = self.l + self.r
        assert num == len(components)
        perm = self.perm.copy()
        perm.label_at.setflags(write=False)
        perm.position_of.setflags(write=False)
        matrix = self.matrix.copy()
        matrix.entries.setflags(write=False)
        return ConnectivityReport(
            n=self.b,
            is_connected=num <= 1,
            num_components=num,
            isolated_count=self.r,
            cut_count=self.l,
            components=tuple(components),
            boundaries=tuple(self.boundaries),
            permutation=perm,
            permuted_matrix=matrix,
            n_active=self.n_active,
            swaps=self.swaps,
            trace=tuple(self.trace) if self.trace is not None else None,
        )


def run_algorithm_d(m, *, backend=None, trace: bool = False, debug: bool = False) -> ConnectivityReport:
    """Analyse a graph given as an :class:`AdjacencyMatrix` or raw square array.

    Raw input is validated first and validation errors propagate. The
    input matrix itself is never modified.
    """
    if not isinstance(m, AdjacencyMatrix):
        m = validate_adjacency(m)
    return AlgorithmD(m, backend=backend, trace=trace, debug=debug).run()
