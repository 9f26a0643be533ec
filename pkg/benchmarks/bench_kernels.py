"""Compiled vs pure-Python kernels: per-call timings and one end-to-end curve.

    python benchmarks/bench_kernels.py [--number 2000] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from susypiv import kernels
from susypiv.seeds import SeedFamily, SeedParams
from susypiv.susy import pain4_solution

ORDER = 14


def micro_cases():
    rng = np.random.default_rng(7)
    a = rng.normal(size=ORDER + 1)
    b = rng.normal(size=ORDER + 1)
    b[0] = 2.0
    return {
        "kummer_series(1.375, 0.5, 25)": lambda: kernels.kummer_series(1.375, 0.5, 25.0, 100_000),
        f"jet_mul (order {ORDER})": lambda: kernels.jet_mul(a, b),
        f"jet_div (order {ORDER})": lambda: kernels.jet_div(a, b),
        f"jet_exp (order {ORDER})": lambda: kernels.jet_exp(a),
        f"jet_log (order {ORDER})": lambda: kernels.jet_log(b),
        f"gauged_taylor (order {ORDER})": lambda: kernels.gauged_taylor(1.0, 0.3, 1.2, -0.75, ORDER),
    }


def curve_case(k):
    fam = SeedFamily(SeedParams(-0.75, 0.5, k))
    xs = np.linspace(-5.0, 5.0, 101)
    return lambda: [pain4_solution(fam, x) for x in xs]


def best_time(fn, number, repeat):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--number", type=int, default=2000, help="calls per timing run")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; only the Python backend is timed")
    rows = []
    cases = dict(micro_cases())
    for k in (1, 3):
        cases[f"g_{k} on 101 points"] = curve_case(k)
    for name, fn in cases.items():
        number = args.number if not name.startswith("g_") else 1
        times = {}
        for be in backends:
            kernels.use_backend(be)
            times[be] = best_time(fn, number, args.repeat)
        rows.append((name, times))
    kernels.use_backend(backends[0])

    print(f"{'case':34s} " + " ".join(f"{be:>12s}" for be in backends) + "   speedup")
    for name, times in rows:
        cols = " ".join(f"{times[be] * 1e6:10.2f}us" for be in backends)
        speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{name:34s} {cols}   {speed:6.2f}x")


if __name__ == "__main__":
    main()
