"""Compare the numba and numpy kernels on inputs large enough to matter.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

JIT compilation is done once before timing and reported separately.
"""

import argparse
import time
from itertools import combinations

import numpy as np

from sandtile import _kernels
from sandtile.linalg import det
from sandtile.tiling import adjugate


def box_case(rng, k, spread):
    while True:
        G = rng.integers(-spread, spread + 1, size=(k, k))
        d = int(round(np.linalg.det(G)))
        if d and det(G.tolist()) == d:
            break
    G = G.tolist()
    s = 1 if d > 0 else -1
    adj = [[s * x for x in row] for row in adjugate(G)]
    anchor = [0] * k
    lo = [sum(min(0, x) for x in row) for row in G]
    hi = [sum(max(0, x) for x in row) for row in G]
    closed = [1] * k
    args = (
        np.asarray(adj, dtype=np.int64),
        np.int64(abs(d)),
        np.asarray(closed, dtype=np.int64),
        np.asarray(anchor, dtype=np.int64),
        np.asarray(lo, dtype=np.int64),
        np.asarray(hi, dtype=np.int64),
    )
    box = int(np.prod(args[5] - args[4] + 1))
    return f"box k={k} |det|={abs(d)} scan={box}", args


def minors_case(rng, r, n):
    A = rng.integers(-4, 5, size=(r, n)).astype(np.int64)
    combos = np.array(list(combinations(range(n), r)), dtype=np.int64)
    return f"minors {r}x{n} ({len(combos)} subsets)", (A, combos)


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    opts = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed")
    rng = np.random.default_rng(opts.seed)

    cases = [
        (box_case(rng, 3, 6), _kernels._box_points_numba, _kernels._box_points_numpy),
        (box_case(rng, 4, 5), _kernels._box_points_numba, _kernels._box_points_numpy),
        (box_case(rng, 5, 3), _kernels._box_points_numba, _kernels._box_points_numpy),
        (minors_case(rng, 3, 12), _kernels._minors_numba, _kernels._minors_numpy),
        (minors_case(rng, 5, 16), _kernels._minors_numba, _kernels._minors_numpy),
    ]

    t = time.perf_counter()
    for (_, args), fast, _ in cases[:1] + cases[3:4]:
        fast(*args)
    print(f"JIT warm-up: {time.perf_counter() - t:.2f}s")
    print(f"{'case':<44} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for (label, args), fast, slow in cases:
        tf, a = best_of(fast, args, opts.repeat)
        ts, b = best_of(slow, args, opts.repeat)
        if isinstance(a, tuple):
            same = a[1] == b[1] and np.array_equal(a[0][: a[1]], b[0])
        else:
            same = np.array_equal(a, b)
        if not same:
            raise SystemExit(f"kernels disagree on {label}")
        print(f"{label:<44} {tf * 1e3:9.2f}ms {ts * 1e3:9.2f}ms {ts / tf:7.1f}x")


if __name__ == "__main__":
    main()
