"""Compare the compiled and pure-Python serving kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Workloads: every permutation of an 8-element list under move-to-front
(the exhaustive sweeps), and one long uniform random sequence per
algorithm on a 100-element list.
"""

import argparse
import itertools
import random
import time

from listaccess import _backend

CODES = {"mtf": 0, "transpose": 1, "fc": 2}


def workloads(seed):
    order8 = list(range(8))
    perms = [list(p) for p in itertools.permutations(order8)]

    def exhaustive(k):
        return sum(k.total_positions(order8, p, 0) for p in perms)

    yield "mtf, all 8! permutations", exhaustive

    rng = random.Random(seed)
    order = list(range(100))
    requests = [rng.randrange(100) for _ in range(200_000)]
    for name, code in CODES.items():
        yield f"{name}, l=100 n=200000", lambda k, code=code: k.total_positions(order, requests, code)


def timed(fn, k, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(k)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    names = _backend.available()
    if "cython" not in names:
        print("compiled kernels are not built; only the Python fallback is available")
    backends = {name: _backend.load(name) for name in names}

    header = f"{'workload':<30}" + "".join(f"{n + ' (s)':>14}" for n in names) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, fn in workloads(args.seed):
        results, times = {}, {}
        for name, k in backends.items():
            results[name], times[name] = timed(fn, k, args.repeat)
        if len(set(results.values())) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        speedup = times["python"] / times["cython"] if len(times) == 2 else float("nan")
        print(f"{label:<30}" + "".join(f"{times[n]:>14.4f}" for n in names) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
