"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is run on identical inputs by both backends; the best of
``--repeat`` runs is reported along with the largest output difference.
"""
import argparse
import timeit

import numpy as np

from solenoid_scatter._backend import available_backends


def cases():
    rng = np.random.default_rng(1)
    x = np.linspace(0.0, 150.0, 100_000)
    b = rng.uniform(-1.0, 1.0, 1_000_000)
    b_small = b[:100_000]
    return [
        ("j0_array 1e5 pts", lambda k: k.j0_array(x)),
        ("j1_array 1e5 pts", lambda k: k.j1_array(x)),
        ("rk4_exit step=1e-4", lambda k: k.rk4_exit(0.5, 0.3, 1e-4, 0)[:6]),
        ("arc_deflections 1e5", lambda k: np.asarray(k.arc_deflections(2.0, b_small))),
        ("mc_counts 1e6", lambda k: k.mc_counts(0.5, b, 128)),
    ]


def max_diff(a, c):
    a = np.asarray(a, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    return float(np.max(np.abs(a - c))) if a.size else 0.0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    names = sorted(backends)
    print(f"{'kernel':24s}" + "".join(f"{n + ' [s]':>14s}" for n in names) + f"{'speedup':>10s}{'max diff':>12s}")
    for label, fn in cases():
        times, outs = {}, {}
        for n in names:
            k = backends[n]
            outs[n] = fn(k)
            times[n] = min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
        row = f"{label:24s}" + "".join(f"{times[n]:14.4f}" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:10.1f}x"
            row += f"{max_diff(outs['python'], outs['cython']):12.2e}"
        print(row)


if __name__ == "__main__":
    main()
