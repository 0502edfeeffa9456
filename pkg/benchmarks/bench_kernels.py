"""Compare the numba and numpy Bessel kernels (and scipy as a reference).

    python3 benchmarks/bench_kernels.py [--sizes 10000 1000000] [--repeat 5]

The numpy path is what runs when RESTRICT_LAB_NUMBA=0 or numba is missing.
"""
import argparse
import json
import time

import numpy as np
from scipy.special import jv

from restrictlab._bessel import jv_kernel
from restrictlab.transforms import extension_grid
from restrictlab.symgeom import CapProfile, SymmetryParams


def best_of(fn, repeat):
    ts = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t)
    return min(ts)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10_000, 1_000_000])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="also write results here")
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    rows = []
    for n in args.sizes:
        # spans series, Miller and Hankel branches
        x = np.sort(rng.uniform(0.0, 200.0, n))
        for nu in (0.0, 0.5, 2.5):
            jv_kernel(nu, x[:10], use_numba=True)  # compile outside the timing
            t_nb = best_of(lambda: jv_kernel(nu, x, use_numba=True), args.repeat)
            t_np = best_of(lambda: jv_kernel(nu, x, use_numba=False), args.repeat)
            t_sp = best_of(lambda: jv(nu, x), args.repeat)
            err = float(np.max(np.abs(jv_kernel(nu, x, use_numba=True) - jv_kernel(nu, x, use_numba=False))))
            rows.append({"n": n, "nu": nu, "numba_s": t_nb, "numpy_s": t_np, "scipy_s": t_sp,
                         "speedup": t_np / t_nb, "max_diff": err})

    # end to end: a 256 x 256 extension grid
    F = CapProfile.constant(SymmetryParams(4, 2), 96)
    g = np.linspace(0, 50, 256)
    extension_grid(F, g[:4], g[:4])
    t_e2e = best_of(lambda: extension_grid(F, g, g), args.repeat)

    print(f"{'n':>9} {'nu':>4} {'numba[ms]':>10} {'numpy[ms]':>10} {'scipy[ms]':>10} {'speedup':>8} {'max diff':>9}")
    for r in rows:
        print(f"{r['n']:>9d} {r['nu']:>4.1f} {1e3 * r['numba_s']:>10.2f} {1e3 * r['numpy_s']:>10.2f} "
              f"{1e3 * r['scipy_s']:>10.2f} {r['speedup']:>8.2f} {r['max_diff']:>9.1e}")
    print(f"extension grid 256x256, 96 cap nodes: {1e3 * t_e2e:.1f} ms (kernel set by RESTRICT_LAB_NUMBA)")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"kernels": rows, "extension_grid_s": t_e2e}, fh, indent=2)


if __name__ == "__main__":
    main()
