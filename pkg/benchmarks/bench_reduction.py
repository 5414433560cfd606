"""Benchmark the compiled monomial-reduction kernel against its pure twin.

The inner loop of every Groebner computation is reduce_monomial: scan a
flat table of lead/tail exponent rows, apply the first lead that divides,
restart.  This script times that loop on reducer tables taken from real
runs, checks the two implementations agree bit for bit, and reports the
end-to-end effect on a full standard-pair decomposition.

Run from the repository root:

    python3 benchmarks/bench_reduction.py
"""

from __future__ import annotations

import random
import sys
import time
from array import array
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from toricip import _fastreduce_py
from toricip.groebner import groebner_basis, standard_pair_decomposition
from toricip.lattice import validate_problem

try:
    from toricip import _fastreduce
except ImportError:
    _fastreduce = None

LONG_CHAIN = [[5, 0, 0, 2, 1, 0], [0, 5, 0, 1, 4, 2], [0, 0, 5, 2, 0, 3]]
LONG_COST = (21, 6, 1, 0, 0, 0)
WIDE = [
    [1, 0, 0, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 2, 2, 2],
    [0, 0, 1, 1, 2, 2, 3, 3],
    [0, 0, 0, 1, 2, 3, 4, 5],
]
WIDE_COST = (7, 3, 1, 0, 2, 0, 5, 0)


def reducer_table(A, c):
    P = validate_problem(A, c)
    gb = groebner_basis(P, c)
    n = P.n
    leads = array("q")
    tails = array("q")
    for g in gb:
        leads.extend(g.plus)
        tails.extend(g.minus)
    return n, len(gb), leads, tails


def sample_points(n, count, seed):
    rng = random.Random(seed)
    return [tuple(rng.randint(0, 9) for _ in range(n)) for _ in range(count)]


def time_kernel(kernel, points, leads, tails, m, n, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = [kernel.reduce_monomial(u, leads, tails, m, n) for u in points]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    print(f"compiled kernel available: {_fastreduce is not None}")
    for label, A, c in (("long-chain 3x6", LONG_CHAIN, LONG_COST), ("wide 4x8", WIDE, WIDE_COST)):
        n, m, leads, tails = reducer_table(A, c)
        points = sample_points(n, 2000, seed=hash(label) & 0xFFFF)
        t_py, out_py = time_kernel(_fastreduce_py, points, leads, tails, m, n, repeats=3)
        print(f"{label}: table of {m} reducers, 2000 points")
        print(f"  python kernel:   {t_py * 1e3:8.2f} ms")
        if _fastreduce is not None:
            t_c, out_c = time_kernel(_fastreduce, points, leads, tails, m, n, repeats=3)
            assert out_c == out_py, "kernels disagree"
            print(f"  compiled kernel: {t_c * 1e3:8.2f} ms   ({t_py / t_c:.1f}x faster, identical output)")

    # end-to-end: one full decomposition, current in-process kernel only
    # (the kernel is chosen at import time; set TORICIP_PURE=1 to force the twin)
    P = validate_problem(LONG_CHAIN, LONG_COST)
    t0 = time.perf_counter()
    pairs = standard_pair_decomposition(P, LONG_COST)
    dt = time.perf_counter() - t0
    from toricip.groebner import kernel_implementation

    print(f"standard-pair decomposition (70 pairs) with {kernel_implementation()} kernel: "
          f"{dt * 1e3:.1f} ms")
    assert len(pairs) == 70


if __name__ == "__main__":
    main()
