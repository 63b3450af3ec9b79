"""Time the numba kernels against their numpy fallbacks.

Usage::

    python benchmarks/bench_kernels.py [--sizes 100 400 1000] [--repeat 5] [--csv out.csv]

Each kernel runs on the same inputs through both implementations; the
outputs are compared before timing. Set ``KRYLOVREG_DISABLE_NUMBA=1`` to see
the numpy column alone.
"""
import argparse
import csv
import sys
import timeit

import numpy as np

from krylovreg import kernels


def _inputs(name, n, rng):
    if name == "top_svals":
        # staircase of a graded bidiagonal, all singular values requested
        c = np.abs(rng.standard_normal(2 * n - 1)) * np.repeat(0.9 ** np.arange(n), 2)[: 2 * n - 1]
        return (c, n)
    if name == "log_products":
        theta = np.sort(rng.uniform(0.1, 1.0, 40))[::-1] ** 2
        sigma = np.sort(rng.uniform(0.0, 1.0, n))[::-1] ** 2
        return (theta, sigma)
    if name == "forward_sub":
        alpha = rng.uniform(0.5, 1.5, n)
        beta = rng.uniform(0.5, 1.5, n)
        return (alpha, beta, 1.0)
    raise KeyError(name)


def bench(sizes, repeat, seed=0):
    rng = np.random.default_rng(seed)
    rows = []
    for name, (nb, npf) in kernels.IMPLEMENTATIONS.items():
        for n in sizes:
            args = _inputs(name, n, rng)
            ref = npf(*args)
            t_np = min(timeit.repeat(lambda: npf(*args), number=1, repeat=repeat))
            t_nb = float("nan")
            if nb is not None:
                out = nb(*args)  # compile outside the timed region
                if not np.allclose(out, ref, rtol=1e-10, atol=1e-300):
                    raise AssertionError(f"{name} n={n}: numba and numpy disagree")
                t_nb = min(timeit.repeat(lambda: nb(*args), number=1, repeat=repeat))
            rows.append((name, n, t_np * 1e3, t_nb * 1e3))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 400, 1000])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--csv", help="also write results to this CSV file")
    args = ap.parse_args(argv)
    rows = bench(args.sizes, args.repeat)
    print(f"{'kernel':<14}{'n':>7}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, n, t_np, t_nb in rows:
        sp = t_np / t_nb if np.isfinite(t_nb) and t_nb > 0 else float("nan")
        print(f"{name:<14}{n:>7}{t_np:>12.3f}{t_nb:>12.3f}{sp:>10.1f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["kernel", "n", "numpy_ms", "numba_ms"])
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
