"""Pure-Python versions of the inner loops; reference for ``_ckernels.pyx``."""

from __future__ import annotations

from itertools import product


def adjacent_pairs(pos, neg, masks):
    """Combinatorial adjacency test of the double description method.

    ``masks[i]`` is the bitmask of processed inequalities tight at ray ``i``.
    A pair (p, n) is adjacent iff no third ray is tight on every inequality
    that is tight at both p and n.
    """
    out = []
    nrays = len(masks)
    for p in pos:
        mp = masks[p]
        for n in neg:
            common = mp & masks[n]
            for r in range(nrays):
                if r != p and r != n and masks[r] & common == common:
                    break
            else:
                out.append((p, n))
    return out


def count_lattice_points(rows, rhs, lo, hi):
    """Number of integer x with lo <= x <= hi (componentwise) and rows·x >= rhs."""
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    count = 0
    for x in product(*ranges):
        for row, b in zip(rows, rhs):
            if sum(c * xi for c, xi in zip(row, x)) < b:
                break
        else:
            count += 1
    return count
