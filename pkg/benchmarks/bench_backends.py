"""Benchmark the compiled sweep kernels against the pure-Python fallback.

The Monte Carlo sweep spends its time in the per-trial design kernels, so
this times exactly those batch calls on a shared pre-drawn channel batch.

    python benchmarks/bench_backends.py --trials 5000 --n 4
"""

import argparse
import time

from secjam import backend
from secjam.channel import dbm_to_mw, los_magnitude
from secjam.sim import _channel_batch, _draw_phases, effective_geometry


def time_call(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=5000)
    parser.add_argument("--n", type=int, default=4, help="relay antennas")
    parser.add_argument("--d-se", type=float, default=40.0)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    geom = effective_geometry(50.0, 25.0, args.d_se)
    mags = tuple(los_magnitude(d, 3.5) for d in (geom.d_sd, geom.d_se,
                                                 geom.d_sr, geom.d_rd,
                                                 geom.d_re))
    sigma2 = dbm_to_mw(-100.0)
    p0 = dbm_to_mw(-40.0)

    t0 = time.perf_counter()
    phases = _draw_phases(args.seed, 0, args.n, args.trials)
    batch = _channel_batch(mags, args.n, phases)
    setup = time.perf_counter() - t0

    backends = backend.available_backends()
    print(f"trials={args.trials}  n={args.n}  d_se={args.d_se} m  "
          f"(stream setup + channel draw: {setup:.3f} s, shared)")
    print(f"{'backend':<8} {'kernel':<10} {'time':>9}  {'trials/s':>12}")

    results = {}
    for name in ("python", "cython"):
        mod = backends.get(name)
        if mod is None:
            print(f"{name:<8} {'-':<10} {'missing':>9}")
            continue
        for kernel, extra in (("ratemax_trials", p0), ("powermin_trials", 1.0)):
            fn = getattr(mod, kernel)
            dt = time_call(fn, *batch, sigma2, extra)
            results[(name, kernel)] = dt
            print(f"{name:<8} {kernel:<10} {dt:>8.4f}s  {args.trials / dt:>12.0f}")

    for kernel in ("ratemax_trials", "powermin_trials"):
        py = results.get(("python", kernel))
        cy = results.get(("cython", kernel))
        if py and cy:
            print(f"speedup {kernel}: {py / cy:.1f}x")


if __name__ == "__main__":
    main()
