"""Ground-truth connected components, computed without any reordering."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import AdjacencyMatrix


@dataclass(frozen=True)
class PartitionOracleResult:
    partition: frozenset[frozenset[int]]
    num_components: int

    def sizes(self) -> list[int]:
        return sorted(len(c) for c in self.partition)


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        root = x
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1
        return True

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            out.setdefault(self.find(v), []).append(v)
        return list(out.values())


def _union_find(a: np.ndarray) -> list[list[int]]:
    uf = UnionFind(a.shape[0])
    us, vs = np.nonzero(np.triu(a, 1))
    for u, v in zip(us.tolist(), vs.tolist()):
        uf.union(u, v)
    return uf.groups()


def _breadth_first(a: np.ndarray) -> list[list[int]]:
    rows = a.tolist()  # plain lists keep the row scan in pure Python
    n = len(rows)
    seen = [False] * n
    groups = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        group = [start]
        queue = deque([start])
        while queue:
            row = rows[queue.popleft()]
            for w in range(n):
                if row[w] and not seen[w]:
                    seen[w] = True
                    group.append(w)
                    queue.append(w)
        groups.append(group)
    return groups


METHODS = {"union_find": _union_find, "uf": _union_find, "breadth_first": _breadth_first, "bfs": _breadth_first}


def oracle_components(m: AdjacencyMatrix, method: str = "union_find") -> PartitionOracleResult:
    """Exact component partition of ``m`` as 1-based label sets."""
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown oracle method {method!r}") from None
    groups = fn(m.entries)
    partition = frozenset(frozenset(v + 1 for v in g) for g in groups)
    return PartitionOracleResult(partition=partition, num_components=len(partition))


def partition_of(report) -> frozenset[frozenset[int]]:
    """A report's components in the oracle's set-of-sets form."""
    return frozenset(frozenset(c) for c in report.components)
