"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py --q 5 7 8 9 --repeat 3

Both implementations are called directly (the env flag only picks the
default), so one run compares them side by side.  Outputs are checked equal
before any timing is reported.
"""

import argparse
import time

import numpy as np

from desargues import FiniteField, kernels
from desargues._accel import HAVE_NUMBA

FIELDS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2), 11: (11, 1)}


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench(q, repeat):
    F = FiniteField(*FIELDS[q])
    T = kernels.build_plane_tables(F.add_table, F.neg_table, F.mul_table, F.inv_table, q, use_numba=False)
    jobs = {
        "incidence": (F.add_table.astype(np.int64), F.mul_table.astype(np.int64), T.lines, q),
        "axioms": (T.incidence,),
        "pappus": (q, T.pts_on_line, T.inter, T.slope, T.meet),
        "desargues": (q, T.pts_on_line, T.classes, T.slope, T.meet),
    }
    rows = []
    for name, args in jobs.items():
        t_np, out_np = best_of(kernels.IMPLEMENTATIONS["numpy"][name], args, repeat)
        if HAVE_NUMBA:
            kernels.IMPLEMENTATIONS["numba"][name](*args)  # compile / load cache
            t_nb, out_nb = best_of(kernels.IMPLEMENTATIONS["numba"][name], args, repeat)
            a = out_np if isinstance(out_np, tuple) else (out_np,)
            b = out_nb if isinstance(out_nb, tuple) else (out_nb,)
            assert all(np.array_equal(x, y) for x, y in zip(a, b)), f"{name} q={q}: outputs differ"
        else:
            t_nb = float("nan")
        rows.append((q, name, t_np, t_nb))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--q", type=int, nargs="+", default=[5, 7, 8, 9], choices=sorted(FIELDS))
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba not installed; numpy timings only")
    print(f"{'q':>3} {'kernel':<10} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for q in args.q:
        for q_, name, t_np, t_nb in bench(q, args.repeat):
            print(f"{q_:>3} {name:<10} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
