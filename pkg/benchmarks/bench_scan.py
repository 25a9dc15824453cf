"""Compare the compiled and pure table-scan backends on growing spaces.

The axiom scan is cubic in the point count, so it is the only part of
the package whose runtime is worth a compiled core. Tables are built
from the Lipschitz construction (d(x,y) + f(x) + f(y)) / 2, which is
valid by construction, so every timing run exercises the full P1-P4
sweep without finding a violation (the worst case).

Run:  python3 benchmarks/bench_scan.py [--sizes 16,32,64,128] [--repeats 3]
"""

import argparse
import random
import time
from fractions import Fraction

from partialmetric import kernels
from partialmetric.core import FinitePMSpace, p_m_matrix

F = Fraction


def build_space(n: int, seed: int = 0) -> FinitePMSpace:
    rng = random.Random(f"bench/{seed}/{n}")
    values = [F(rng.randint(0, 24 * n), 12) for _ in range(n)]
    base = F(1, 12)

    def d(i: int, j: int) -> Fraction:
        return abs(values[i] - values[j]) + (base if i != j else F(0))

    f = [d(i, 0) + F(1, 6) for i in range(n)]
    matrix = [[(d(i, j) + f[i] + f[j]) / 2 for j in range(n)] for i in range(n)]
    return FinitePMSpace([F(i) for i in range(n)], matrix)


def time_scan(scan, matrix, backend: str, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = scan(matrix, backend=backend)
        best = min(best, time.perf_counter() - start)
        assert result is None
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="16,32,64,128")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not kernels.compiled_available():
        print("compiled backend not built; timing the pure reference only")
    header = f"{'n':>5} {'scan':>12} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        space = build_space(n)
        for label, matrix in (("axioms", space.matrix), ("p_m metric", p_m_matrix(space))):
            scan = kernels.axiom_scan if label == "axioms" else kernels.metric_scan
            pure = time_scan(scan, matrix, "pure", args.repeats)
            row = f"{n:>5} {label:>12} {pure * 1e3:>12.2f}"
            if kernels.compiled_available():
                fast = time_scan(scan, matrix, "compiled", args.repeats)
                row += f" {fast * 1e3:>14.2f} {pure / fast:>8.1f}x"
            print(row)


if __name__ == "__main__":
    main()
