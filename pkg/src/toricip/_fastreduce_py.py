"""Pure-Python monomial reduction kernel.

Mirrors the compiled extension exactly: scan the reducer table in order,
apply the first lead that divides, restart the scan, stop when nothing
applies. Both implementations must produce identical output for the same
table, so the scan discipline here is the contract.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def reduce_monomial(u, leads, tails, m, n):
    """Reduce exponent vector u by the flat reducer table.

    leads and tails hold m rows of n entries each; row k applies when
    leads[k*n:(k+1)*n] <= u componentwise, rewriting u to u - lead + tail.
    """
    out = list(u)
    k = 0
    while k < m:
        base = k * n
        fits = True
        for i in range(n):
            if leads[base + i] > out[i]:
                fits = False
                break
        if fits:
            for i in range(n):
                out[i] += tails[base + i] - leads[base + i]
            k = 0
        else:
            k += 1
    return tuple(out)
