"""Time the three hot kernels on every available backend.

Run from the repository root after installing:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --n 50000 --projections 4000

Each kernel is timed best-of-``--repeats`` on the same inputs for every
backend, and the outputs are cross-checked so a speedup never hides a
numerical divergence.
"""

import argparse
import time

import numpy as np

from xcausal._backend import available_backends


def _best_of(fn, repeats):
    fn()  # warmup
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases(n, projections, lags, seed):
    rng = np.random.default_rng(seed)
    t = np.sort(rng.uniform(0.0, 1.0, n))
    v = rng.standard_normal(n)
    delta_f = 2.0 * np.pi
    spec = rng.standard_normal(projections) + 1j * rng.standard_normal(projections)
    lag_values = np.linspace(-0.05, 0.05, lags)

    ty = np.sort(rng.uniform(0.0, 1.0, n))
    dx = rng.standard_normal(n - 1)
    dy = rng.standard_normal(n - 1)

    return {
        f"nudft (n={n}, P={projections})": lambda mod: mod.nudft(
            t, v, delta_f, projections),
        f"inverse (P={projections}, lags={lags})": lambda mod: mod.inverse_correlogram(
            spec, delta_f, lag_values),
        f"hy_overlap (n={n})": lambda mod: mod.hy_overlap_sum(
            t[:-1], t[1:], dx, ty[:-1], ty[1:], dy),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20_000,
                        help="observations per series (default 20000)")
    parser.add_argument("--projections", type=int, default=2_000,
                        help="frequency count (default 2000)")
    parser.add_argument("--lags", type=int, default=201,
                        help="lag count for the inversion (default 201)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats, best is reported (default 5)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"backends: {', '.join(names)}")
    if len(names) == 1:
        print("note: compiled extension not importable; timing the fallback only")
    print()

    header = f"{'kernel':<34}" + "".join(f"{b + ' (ms)':>16}" for b in names)
    if len(names) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, call in _cases(args.n, args.projections, args.lags,
                              args.seed).items():
        results = {b: call(backends[b]) for b in names}
        ref = results[names[0]]
        for b in names[1:]:
            got = results[b]
            if isinstance(ref, tuple):
                assert np.allclose(ref[0], got[0], atol=1e-9), label
            else:
                assert np.allclose(ref, got, atol=1e-9), label

        times = {b: _best_of(lambda b=b: call(backends[b]), args.repeats)
                 for b in names}
        row = f"{label:<34}" + "".join(f"{times[b] * 1e3:>16.3f}" for b in names)
        if len(names) > 1 and "python" in times:
            other = [b for b in names if b != "python"][0]
            row += f"{times['python'] / times[other]:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
