"""Compare the compiled and numpy kernel backends on the same graphs.

    python benchmarks/bench_backends.py --sizes 200,500,1000 --repeat 3
"""
import argparse
import math
import sys
import time

from blockconn import kernels, run_algorithm_d
from blockconn.bench import bench_spec
from blockconn.generators import generate
from blockconn.oracle import partition_of


def best_of(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1e3, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="200,500,1000")
    ap.add_argument("--families", default="dense,sparse,planted,path")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if "cython" not in kernels.BACKENDS:
        sys.exit("compiled backend not built; run `pip install -e . --no-build-isolation`")
    print("n,family,python_ms,cython_ms,speedup")
    for family in args.families.split(","):
        for n in map(int, args.sizes.split(",")):
            m = generate(bench_spec(family, n, args.seed))
            py_ms, py = best_of(lambda: run_algorithm_d(m, backend="python"), args.repeat)
            c_ms, c = best_of(lambda: run_algorithm_d(m, backend="cython"), args.repeat)
            assert partition_of(py) == partition_of(c) and py.permutation == c.permutation
            print(f"{n},{family},{py_ms:.3f},{c_ms:.3f},{py_ms / c_ms:.1f}")


if __name__ == "__main__":
    main()
