"""Independent reference computations for the tests.

Nothing here imports the package's cone, polytope or intersection code.
Surfaces use the classical self-intersection rule for a smooth complete
toric surface; polytopes are handled by brute-force vertex enumeration in
sympy.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import sympy


def _cyclic_order(rays):
    return sorted(range(len(rays)), key=lambda i: math.atan2(rays[i][1], rays[i][0]))


def surface_intersection_matrix(rays):
    """D_i.D_j on the smooth complete toric surface with the given rays.

    Neighbours meet once, D_i^2 = -a_i where u_{i-1} + u_{i+1} = a_i u_i.
    """
    order = _cyclic_order(rays)
    r = len(rays)
    M = [[0] * r for _ in range(r)]
    for pos, i in enumerate(order):
        prev, nxt = order[pos - 1], order[(pos + 1) % r]
        M[i][prev] = M[prev][i] = 1
        M[i][nxt] = M[nxt][i] = 1
        s = [rays[prev][k] + rays[nxt][k] for k in range(2)]
        u = rays[i]
        a = s[0] // u[0] if u[0] else s[1] // u[1]
        assert [a * x for x in u] == s
        M[i][i] = -a
    return M


def surface_product(rays, a, b) -> Fraction:
    M = surface_intersection_matrix(rays)
    return sum(Fraction(a[i]) * b[j] * M[i][j] for i in range(len(a)) for j in range(len(b)))


def surface_pairings(rays, a):
    """(A.D_rho)_rho, the curve-class coordinates of the divisor A on a surface."""
    M = surface_intersection_matrix(rays)
    return tuple(sum(Fraction(a[i]) * M[i][j] for i in range(len(a))) for j in range(len(rays)))


def polytope_vertices(rays, coeffs):
    """Vertices of {m : <m,u_rho> >= -a_rho} by solving every n x n subsystem."""
    n = len(rays[0])
    verts = set()
    for sub in combinations(range(len(rays)), n):
        A = sympy.Matrix([list(rays[i]) for i in sub])
        if A.det() == 0:
            continue
        b = sympy.Matrix([-sympy.Rational(str(coeffs[i])) for i in sub])
        m = A.LUsolve(b)
        ok = all(sum(m[k] * rays[j][k] for k in range(n)) >= -sympy.Rational(str(coeffs[j]))
                 for j in range(len(rays)))
        if ok:
            verts.add(tuple(Fraction(int(x.p), int(x.q)) for x in m))
    return sorted(verts)


def max_multiplicity(rays, coeffs, sigma):
    """Largest vanishing order at x_sigma of a torus-invariant section.

    The section chi^m of O(D) vanishes to order sum_{rho in sigma} (<m,u_rho> + a_rho)
    at the fixed point, and the maximum over P_D is attained at a vertex.
    """
    verts = polytope_vertices(rays, coeffs)
    if not verts:
        return None
    n = len(rays[0])
    return max(sum(sum(m[k] * rays[i][k] for k in range(n)) + Fraction(coeffs[i]) for i in sigma)
               for m in verts)


def count_points_brute(rays, coeffs, m=1):
    """Lattice points of m P_D by a crude box scan."""
    verts = polytope_vertices(rays, coeffs)
    if not verts:
        return 0
    n = len(rays[0])
    lo = [math.floor(min(v[k] for v in verts) * m) for k in range(n)]
    hi = [math.ceil(max(v[k] for v in verts) * m) for k in range(n)]
    count = 0

    def rec(prefix):
        nonlocal count
        if len(prefix) == n:
            if all(sum(p * u for p, u in zip(prefix, rays[j])) >= -m * Fraction(coeffs[j]) for j in range(len(rays))):
                count += 1
            return
        for x in range(lo[len(prefix)], hi[len(prefix)] + 1):
            rec(prefix + [x])

    rec([])
    return count


def simplex_volume_sympy(points) -> Fraction:
    p0 = points[0]
    M = sympy.Matrix([[x - y for x, y in zip(p, p0)] for p in points[1:]])
    v = abs(M.det()) / sympy.factorial(len(p0))
    return Fraction(int(v.p), int(v.q))
