"""Seeded graph synthesis for property tests, benchmarks and the CLI."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import InvalidSpec, UnknownNeighbor
from .graph import AdjacencyMatrix, validate_adjacency

FAMILIES = ("planted_components", "erdos_renyi", "path", "cycle", "complete", "star", "null")


@dataclass(frozen=True)
class GraphSpec:
    """Recipe for one graph.

    ``sizes`` and ``density`` apply to ``planted_components``; ``p`` is the
    edge probability for ``erdos_renyi``; every other family uses ``n``.
    With ``scramble`` the vertex labels are shuffled by a permutation drawn
    from the same seed.
    """

    family: str
    n: int | None = None
    sizes: tuple[int, ...] | None = None
    density: float = 0.0
    p: float = 0.0
    seed: int = 0
    scramble: bool = True

    def __post_init__(self):
        if self.sizes is not None:
            object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        self.validate()

    @property
    def order(self) -> int:
        if self.family == "planted_components":
            return sum(self.sizes)
        return self.n

    def validate(self) -> None:
        fam = self.family
        if fam not in FAMILIES:
            raise InvalidSpec(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidSpec(f"seed must fit in 64 bits, got {self.seed}")
        if fam == "planted_components":
            if self.sizes is None:
                raise InvalidSpec("planted_components needs sizes")
            if any(s < 1 for s in self.sizes):
                raise InvalidSpec(f"component sizes must be positive, got {list(self.sizes)}")
            if not 0.0 <= self.density <= 1.0:
                raise InvalidSpec(f"density must lie in [0, 1], got {self.density}")
            return
        if self.n is None or self.n < 0:
            raise InvalidSpec(f"{fam} needs a non-negative n, got {self.n}")
        if fam == "erdos_renyi" and not 0.0 <= self.p <= 1.0:
            raise InvalidSpec(f"edge probability must lie in [0, 1], got {self.p}")
        if fam == "cycle" and self.n < 3:
            raise InvalidSpec(f"cycle needs n >= 3, got {self.n}")

    def to_json(self) -> str:
        d = {k: v for k, v in asdict(self).items() if v is not None}
        if d.get("sizes") is not None:
            d["sizes"] = list(d["sizes"])
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GraphSpec":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidSpec(f"recipe is not valid JSON: {exc}") from None
        if not isinstance(d, dict):
            raise InvalidSpec("recipe must be a JSON object")
        known = set(cls.__dataclass_fields__)
        extra = set(d) - known
        if extra:
            raise InvalidSpec(f"unknown recipe keys: {sorted(extra)}")
        if "family" not in d:
            raise InvalidSpec("recipe needs a family")
        return cls(**d)


def _planted(rng, sizes, density):
    n = sum(sizes)
    a = np.zeros((n, n), dtype=np.uint8)
    start = 0
    for size in sizes:
        block = np.arange(start, start + size)
        order = rng.permutation(block)
        # random recursive tree keeps every block connected
        for t in range(1, size):
            parent = order[rng.integers(t)]
            a[order[t], parent] = a[parent, order[t]] = 1
        if density > 0 and size > 2:
            extra = np.triu(rng.random((size, size)) < density, 1)
            sub = a[start : start + size, start : start + size]
            sub |= (extra | extra.T).astype(np.uint8)
        start += size
    return a


def _erdos_renyi(rng, n, p):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return (upper | upper.T).astype(np.uint8)


def generate(spec: GraphSpec) -> AdjacencyMatrix:
    """Build the graph described by ``spec``; the same spec always yields the same matrix."""
    spec.validate()
    rng = np.random.default_rng(int(spec.seed))
    fam, n = spec.family, spec.order
    if fam == "planted_components":
        a = _planted(rng, spec.sizes, spec.density)
    elif fam == "erdos_renyi":
        a = _erdos_renyi(rng, n, spec.p)
    else:
        a = np.zeros((n, n), dtype=np.uint8)
        idx = np.arange(n - 1)
        if fam in ("path", "cycle"):
            a[idx, idx + 1] = a[idx + 1, idx] = 1
            if fam == "cycle":
                a[0, n - 1] = a[n - 1, 0] = 1
        elif fam == "complete":
            a[:] = 1
            np.fill_diagonal(a, 0)
        elif fam == "star" and n > 1:
            a[0, 1:] = a[1:, 0] = 1
    if spec.scramble and n > 1:
        q = rng.permutation(n)
        a = a[np.ix_(q, q)]
    return validate_adjacency(a)


def add_vertex(m: AdjacencyMatrix, neighbors) -> AdjacencyMatrix:
    """Return a copy of ``m`` with vertex ``n + 1`` joined to each 1-based label in ``neighbors``."""
    n = m.n
    nbrs = sorted(set(int(v) for v in neighbors))
    for v in nbrs:
        if not 1 <= v <= n:
            raise UnknownNeighbor(v, n)
    a = np.zeros((n + 1, n + 1), dtype=np.uint8)
    a[:n, :n] = m.entries
    idx = np.array(nbrs, dtype=np.intp) - 1
    a[n, idx] = a[idx, n] = 1
    return AdjacencyMatrix(a)


@dataclass
class Corpus:
    """A reproducible batch of (spec, matrix) pairs."""

    specs: list[GraphSpec] = field(default_factory=list)

    def __iter__(self):
        for spec in self.specs:
            yield spec, generate(spec)

    def __len__(self):
        return len(self.specs)


def random_spec(seed: int, max_n: int = 200, family: str | None = None) -> GraphSpec:
    """Draw a spec covering every family, with orders up to ``max_n``.

    Edge probabilities for ``erdos_renyi`` straddle the connectivity
    threshold so the batch mixes connected and fragmented graphs.
    """
    rng = np.random.default_rng([seed, 0x5EED])
    fam = family or FAMILIES[seed % len(FAMILIES)]
    if fam == "planted_components":
        sizes = []
        remaining = int(rng.integers(1, max_n + 1))
        while remaining:
            if rng.random() < 0.3:
                s = int(rng.choice([1, 1, 2, 3]))
            else:
                s = int(rng.integers(1, remaining + 1))
            s = min(s, remaining)
            sizes.append(s)
            remaining -= s
        return GraphSpec(fam, sizes=tuple(sizes), density=float(rng.choice([0.0, 0.05, 0.3, 1.0])), seed=seed)
    low = 3 if fam == "cycle" else 0
    n = int(rng.integers(low, max_n + 1))
    if fam == "erdos_renyi":
        scale = np.log(max(n, 2)) / max(n, 2)
        p = float(min(1.0, scale * rng.choice([0.0, 0.3, 0.7, 1.0, 1.5, 3.0, 20.0])))
        return GraphSpec(fam, n=n, p=p, seed=seed)
    return GraphSpec(fam, n=n, seed=seed)


def corpus(count: int = 1000, max_n: int = 200, start: int = 0) -> Corpus:
    return Corpus([random_spec(s, max_n) for s in range(start, start + count)])
