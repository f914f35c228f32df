"""Timing of Algorithm D against the oracle, written as CSV."""
from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass

from .algorithm import run_algorithm_d
from .generators import GraphSpec, generate
from .oracle import oracle_components

CSV_HEADER = ("n", "family", "algd_ms", "oracle_ms", "swaps")
BENCH_FAMILIES = ("dense", "sparse", "planted", "path", "complete", "null")


def bench_spec(family: str, n: int, seed: int) -> GraphSpec:
    if family == "dense":
        return GraphSpec("erdos_renyi", n=n, p=0.5, seed=seed)
    if family == "sparse":
        return GraphSpec("erdos_renyi", n=n, p=min(1.0, math.log(max(n, 2)) / max(n, 2)), seed=seed)
    if family == "planted":
        k = max(1, n // 10)
        sizes = [n // k + (1 if i < n % k else 0) for i in range(k)]
        return GraphSpec("planted_components", sizes=sizes, density=0.05, seed=seed)
    if family in ("path", "complete", "null", "star"):
        return GraphSpec(family, n=n, seed=seed)
    raise ValueError(f"unknown bench family {family!r}; expected one of {', '.join(BENCH_FAMILIES)}")


@dataclass(frozen=True)
class BenchRow:
    n: int
    family: str
    algd_ms: float
    oracle_ms: float
    swaps: int


def _best_ms(fn, repeat):
    best = math.inf
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1e3, out


def run_bench(sizes, families=("dense", "sparse", "planted"), *, seed=0, repeat=3,
              oracle="union_find", backend=None) -> list[BenchRow]:
    """One row per ``(n, family)``, best-of-``repeat`` wall time for each side."""
    rows = []
    for family in families:
        for n in sizes:
            m = generate(bench_spec(family, n, seed))
            algd_ms, report = _best_ms(lambda: run_algorithm_d(m, backend=backend), repeat)
            oracle_ms, _ = _best_ms(lambda: oracle_components(m, oracle), repeat)
            rows.append(BenchRow(n, family, algd_ms, oracle_ms, report.swaps))
    rows.sort(key=lambda r: (r.n, r.family))
    return rows


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, r.family, f"{r.algd_ms:.3f}", f"{r.oracle_ms:.3f}", r.swaps])
    return buf.getvalue()


def growth_exponent(rows, family: str) -> float:
    """Least-squares slope of log(algd_ms) against log(n) for one family."""
    pts = [(math.log(r.n), math.log(r.algd_ms)) for r in rows if r.family == family and r.algd_ms > 0]
    if len(pts) < 2:
        raise ValueError("need at least two sizes to fit a growth exponent")
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    num = sum((x - mx) * (y - my) for x, y in pts)
    den = sum((x - mx) ** 2 for x, _ in pts)
    return num / den
