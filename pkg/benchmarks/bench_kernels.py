"""Time the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from squareheron import _core

WORKLOADS = {
    "enumerate max_side=2000": lambda be: _core.two_square_hits(1, 44, 2000, backend=be),
    "enumerate max_side=300000, p=111": lambda be: _core.two_square_hits(111, 111, 300000, backend=be),
    "rank-0 search H=10^4": lambda be: _core.weierstrass_x_hits(16, 1, 0, 10**4, 100, backend=be),
    "E_7/9 search H=2*10^4": lambda be: _core.weierstrass_x_hits(69222400, 43046721, 0, 2 * 10**4, 141, backend=be),
}


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if _core.BACKEND == "cython" else [])
    print(f"{'workload':38s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, fn in WORKLOADS.items():
        times, results = [], []
        for be in backends:
            t, res = best_of(lambda: fn(be), args.repeat)
            times.append(t)
            results.append(res)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backends disagree on {name}")
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{name:38s} " + " ".join(f"{t:9.4f}s" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
