"""Compare the compiled and pure-Python integer kernels.

Two measurements:

* micro: each kernel on random integer inputs, both modules imported
  side by side;
* end to end: the variant-agreement workload over 200 random polynomials,
  run in a subprocess once per backend (``DEGENFE_PURE=1`` forces the
  fallback).

Usage: ``python benchmarks/bench_kernels.py [--repeat N]``
"""

from __future__ import annotations

import argparse
import importlib
import os
import random
import subprocess
import sys
import timeit

from degenfe import _kernels_py
from degenfe.exact_poly import binomial_rows

WORKLOAD = """
import random, time
from fractions import Fraction as F
from degenfe.exact_poly import BACKEND, Poly
from degenfe.representation import FIRST_ORDER_VARIANTS, ORDER_R_VARIANTS, represent_dfe, represent_dfe_r
rng = random.Random(1)
polys = [Poly([F(rng.randint(-100, 100), rng.randint(1, 100)) for _ in range(rng.randint(1, 11))])
         for _ in range(200)]
lams = [F(1), F(1, 2), F(-1, 3), F(2)]
us = [F(-1), F(2), F(1, 2), F(-3)]
t = time.perf_counter()
for i, p in enumerate(polys):
    lam, u = lams[i % 4], us[(i // 4) % 4]
    for v in FIRST_ORDER_VARIANTS:
        represent_dfe(p, lam, u, v)
    for r in (1, 2, 3, 4):
        for v in ORDER_R_VARIANTS:
            represent_dfe_r(p, lam, u, r, v)
print(BACKEND, time.perf_counter() - t)
"""


def micro(compiled, repeat: int) -> list[tuple[str, float, float]]:
    rng = random.Random(7)
    big = lambda: rng.randint(-10**30, 10**30)  # noqa: E731
    a = [big() for _ in range(40)]
    b = [big() for _ in range(40)]
    rows = [list(r) for r in binomial_rows(39)]
    cases = {
        "int_poly_mul": lambda m: m.int_poly_mul(a, b),
        "int_taylor_shift": lambda m: m.int_taylor_shift(a, 12345),
        "int_horner": lambda m: m.int_horner(a, 17, 23),
        "int_binomial_convolve": lambda m: m.int_binomial_convolve(a, b, rows),
    }
    out = []
    for name, fn in cases.items():
        assert fn(compiled) == fn(_kernels_py)
        t_c = min(timeit.repeat(lambda: fn(compiled), number=200, repeat=repeat))
        t_p = min(timeit.repeat(lambda: fn(_kernels_py), number=200, repeat=repeat))
        out.append((name, t_c, t_p))
    return out


def end_to_end(pure: bool) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("DEGENFE_PURE", None)
    if pure:
        env["DEGENFE_PURE"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
    backend, secs = res.stdout.split()
    return backend, float(secs)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    try:
        compiled = importlib.import_module("degenfe._kernels")
    except ImportError:
        sys.exit("compiled kernels not built; run `pip install --no-build-isolation -e .` first")

    print(f"{'kernel':<24}{'cython (s)':>12}{'python (s)':>12}{'speedup':>10}")
    for name, t_c, t_p in micro(compiled, args.repeat):
        print(f"{name:<24}{t_c:>12.4f}{t_p:>12.4f}{t_p / t_c:>9.2f}x")

    print()
    print("end to end (200 polynomials, all expansion variants, r = 1..4):")
    results = [end_to_end(pure=False), end_to_end(pure=True)]
    for backend, secs in results:
        print(f"  {backend:<8}{secs:8.2f} s")
    print(f"  speedup {results[1][1] / results[0][1]:.2f}x")


if __name__ == "__main__":
    main()
