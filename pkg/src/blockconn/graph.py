"""Dense adjacency matrices, the relabeling permutation, and the analysis report."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    Asymmetric,
    NonBinaryEntry,
    NotSquare,
    PositionOutOfRange,
    SelfLoop,
)


class AdjacencyMatrix:
    """Symmetric 0/1 matrix with a zero diagonal.

    Instances are normally built by :func:`validate_adjacency`; the
    constructor trusts its input and shares its array. ``entries`` is a C-contiguous ``uint8``
    array and is mutated in place by :func:`swap_vertices`.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        self.entries = np.ascontiguousarray(entries, dtype=np.uint8)

    @classmethod
    def empty(cls, n: int) -> "AdjacencyMatrix":
        return cls(np.zeros((n, n), dtype=np.uint8))

    @classmethod
    def from_edges(cls, n: int, edges) -> "AdjacencyMatrix":
        """Build from 1-based ``(u, v)`` pairs; duplicates collapse, no checks."""
        a = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            a[u - 1, v - 1] = a[v - 1, u - 1] = 1
        return cls(a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def copy(self) -> "AdjacencyMatrix":
        return AdjacencyMatrix(self.entries.copy())

    def degrees(self) -> np.ndarray:
        return self.entries.sum(axis=1, dtype=np.int64)

    def edge_count(self) -> int:
        return int(np.count_nonzero(self.entries)) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted 1-based ``(u, v)`` pairs with ``u < v``."""
        us, vs = np.nonzero(np.triu(self.entries, 1))
        return [(int(u) + 1, int(v) + 1) for u, v in zip(us, vs)]

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other):
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None

    def __repr__(self):
        return f"AdjacencyMatrix(n={self.n}, edges={self.edge_count()})"


def validate_adjacency(raw, *, symmetrize: bool = False) -> AdjacencyMatrix:
    """Check that ``raw`` describes a simple graph and wrap it.

    Args:
        raw: square array-like of integers (nested lists, numpy array, or an
            existing :class:`AdjacencyMatrix`). It is never modified.
        symmetrize: OR the input with its transpose before checking, which
            repairs half-specified undirected input.

    Raises:
        NotSquare, NonBinaryEntry, Asymmetric, SelfLoop: the first offending
        position in row-major order is reported (1-based).
    """
    if isinstance(raw, AdjacencyMatrix):
        raw = raw.entries
    arr = np.asarray(raw)
    if arr.size == 0 and arr.ndim <= 2 and (arr.ndim < 2 or arr.shape[0] == arr.shape[1]):
        return AdjacencyMatrix.empty(0)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSquare(arr.shape)
    if arr.dtype == object or not (
        np.issubdtype(arr.dtype, np.number) or arr.dtype == np.bool_
    ):
        bad = [(i, j) for (i, j), v in np.ndenumerate(arr) if v not in (0, 1)]
        if bad:
            i, j = bad[0]
            raise NonBinaryEntry(i + 1, j + 1, arr[i, j])
        arr = arr.astype(np.int64)

    nonbinary = (arr != 0) & (arr != 1)
    if symmetrize and not nonbinary.any():
        arr = np.maximum(arr, arr.T)
    binary = ~nonbinary
    selfloop = np.zeros(arr.shape, dtype=bool)
    np.fill_diagonal(selfloop, np.diagonal(arr) == 1)
    asym = binary & binary.T & (arr != arr.T)
    bad = nonbinary | selfloop | asym
    if bad.any():
        flat = int(np.flatnonzero(bad)[0])
        i, j = divmod(flat, arr.shape[0])
        if nonbinary[i, j]:
            raise NonBinaryEntry(i + 1, j + 1, arr[i, j].item())
        if selfloop[i, j]:
            raise SelfLoop(i + 1)
        raise Asymmetric(i + 1, j + 1)
    return AdjacencyMatrix(arr.astype(np.uint8))


class Permutation:
    """Bijection between original labels and current matrix positions.

    Stored 0-based: ``label_at[pos]`` is the original label sitting at
    ``pos`` and ``position_of[label]`` is its inverse.
    """

    __slots__ = ("label_at", "position_of")

    def __init__(self, label_at):
        self.label_at = np.ascontiguousarray(label_at, dtype=np.intp)
        self.position_of = np.empty_like(self.label_at)
        self.position_of[self.label_at] = np.arange(len(self.label_at), dtype=np.intp)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(n, dtype=np.intp))

    @property
    def n(self) -> int:
        return len(self.label_at)

    def copy(self) -> "Permutation":
        return Permutation(self.label_at.copy())

    def labels(self) -> list[int]:
        """1-based original label at each 1-based position."""
        return (self.label_at + 1).tolist()

    def matrix(self) -> np.ndarray:
        """The permutation matrix P with ``P @ A @ P.T`` equal to the current matrix."""
        p = np.zeros((self.n, self.n), dtype=np.int64)
        p[np.arange(self.n), self.label_at] = 1
        return p

    def apply(self, m: AdjacencyMatrix) -> AdjacencyMatrix:
        idx = self.label_at
        return AdjacencyMatrix(m.entries[np.ix_(idx, idx)])

    def is_bijection(self) -> bool:
        n = self.n
        return bool(
            np.array_equal(np.sort(self.label_at), np.arange(n))
            and np.array_equal(self.position_of[self.label_at], np.arange(n))
        )

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self.label_at, other.label_at)

    __hash__ = None

    def __repr__(self):
        return f"Permutation({self.labels()})"


def swap_vertices(m: AdjacencyMatrix, perm: Permutation, a: int, b: int, *, backend=None) -> None:
    """Interchange rows ``a``, ``b`` and then columns ``a``, ``b`` (1-based), in place."""
    n = m.n
    for pos in (a, b):
        if not 1 <= pos <= n:
            raise PositionOutOfRange(pos, n)
    k = kernels.resolve(backend)
    k.swap(m.entries, perm.label_at, perm.position_of, a - 1, b - 1)


@dataclass(frozen=True)
class TraceStep:
    """One logged action of the state machine. Positions are 1-based."""

    step: str
    i: int
    p: int
    s: int | None = None
    q_min: int | None = None
    swap: tuple[int, int] | None = None
    cut: bool | None = None

    def as_dict(self) -> dict:
        d = {"step": self.step, "i": self.i, "p": self.p}
        for key in ("s", "q_min", "swap", "cut"):
            value = getattr(self, key)
            if value is not None:
                d[key] = list(value) if key == "swap" else value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TraceStep":
        swap = d.get("swap")
        return cls(
            step=d["step"], i=d["i"], p=d["p"], s=d.get("s"), q_min=d.get("q_min"),
            swap=tuple(swap) if swap is not None else None, cut=d.get("cut"),
        )


@dataclass(frozen=True)
class ConnectivityReport:
    """Outcome of one analysis.

    ``components`` lists the blocks in position order (each as sorted
    original labels), followed by one singleton per isolated vertex.
    ``boundaries`` covers the non-isolated prefix only.
    """

    n: int
    is_connected: bool
    num_components: int
    isolated_count: int
    cut_count: int
    components: tuple[tuple[int, ...], ...]
    boundaries: tuple[int, ...]
    permutation: Permutation = field(compare=False)
    permuted_matrix: AdjacencyMatrix = field(compare=False)
    n_active: int = 0
    swaps: int = 0
    trace: tuple[TraceStep, ...] | None = field(default=None, compare=False)

    @property
    def component_sizes(self) -> list[int]:
        return [len(c) for c in self.components]

    @property
    def isolated_vertices(self) -> list[int]:
        return [c[0] for c in self.components[len(self.components) - self.isolated_count :]]
