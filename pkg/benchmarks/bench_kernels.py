"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--groups Z6 S3 Z8]

Each scan is warmed up once (so numba compilation is excluded) and then
timed ``--repeat`` times; the best time is reported. Masks from both
backends are compared before timing.
"""
import argparse
import time

import numpy as np

from setpentagon.groups import build_corpus
from setpentagon.kernels import as_table, get_backend


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def scans(groups):
    corpus = build_corpus()
    for name in groups:
        g = corpus[name]
        t, inv = as_table(g.table), as_table(g.inverse)
        yield f"theta_scan {name}", g.n ** g.n, "theta_scan", (t, inv)
        yield f"endo_scan {name}", g.n ** g.n, "endo_scan", (t,)
        if g.n <= 3:
            yield f"star_scan {name}", g.n ** (g.n * g.n), "star_scan", (t,)
            yield f"dot_scan {name}", g.n ** (g.n * g.n), "dot_scan", (t,)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--groups", nargs="+", default=["Z3", "Z5", "S3", "Z6", "Z7"])
    args = p.parse_args(argv)

    fast, slow = get_backend("numba"), get_backend("numpy")
    print(f"{'scan':<18}{'candidates':>12}{'numba s':>11}{'numpy s':>11}{'speedup':>9}")
    for label, size, fn, inputs in scans(args.groups):
        a, b = getattr(fast, fn), getattr(slow, fn)
        if not np.array_equal(a(*inputs), b(*inputs)):
            raise SystemExit(f"{label}: backends disagree")
        ta = best_of(lambda: a(*inputs), args.repeat)
        tb = best_of(lambda: b(*inputs), args.repeat)
        print(f"{label:<18}{size:>12}{ta:>11.4f}{tb:>11.4f}{tb / ta:>8.1f}x")


if __name__ == "__main__":
    main()
