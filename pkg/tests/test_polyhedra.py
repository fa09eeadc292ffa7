import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from oracles import simplex_volume_sympy
from toric_seshadri.polyhedra import (INF, Polytope, RationalCone, cone_contains, cone_dual, cone_from_generators,
                                      cone_max_shift, double_description, ehrhart_leading_coefficient,
                                      lattice_point_count, polytope_volume)

vec = st.integers(-3, 3)


@st.composite
def cones(draw, max_dim=6):
    d = draw(st.integers(1, max_dim))
    gens = draw(st.lists(st.lists(vec, min_size=d, max_size=d), min_size=1, max_size=7))
    return RationalCone(gens, d)


def box(lo, hi, n):
    ineqs = []
    for i in range(n):
        e = [int(i == j) for j in range(n)]
        ineqs.append((e, lo))
        ineqs.append(([-x for x in e], -hi))
    return Polytope(ineqs)


def simplex(n, d=1):
    ineqs = [([int(i == j) for j in range(n)], 0) for i in range(n)]
    ineqs.append(([-1] * n, -d))
    return Polytope(ineqs)


# -- cones -----------------------------------------------------------------


def test_first_quadrant_facets():
    K = cone_from_generators([(1, 0), (0, 1)])
    assert set(K.facets) == {(1, 0), (0, 1)}
    assert K.is_full_dimensional and K.is_pointed


def test_line_has_lineality_one():
    K = cone_from_generators([(1, 0), (-1, 0)])
    assert K.lineality_dim == 1
    assert K.dim == 1
    assert not K.is_pointed


def test_wall_classes_span_a_plane_cone():
    rel = [(1, 0, -1, 1), (0, 1, -1, 1)]
    K = RationalCone([(1, 1, 0, -1), (0, 0, 1, 1)], 4, ambient_equations=rel)
    assert K.dim == 2
    assert K.is_full_dimensional
    assert K.ray_set() == {(1, 1, 0, -1), (0, 0, 1, 1)}


def test_strict_and_boundary_membership():
    K = cone_from_generators([(1, 0), (0, 1)])
    assert cone_contains(K, (1, 1), strict=True)
    assert not cone_contains(K, (1, 0), strict=True)
    assert cone_contains(K, (1, 0))
    assert not cone_contains(K, (-1, 1))


def test_max_shift_examples():
    K = cone_from_generators([(1, 0), (0, 1)])
    assert cone_max_shift(K, (2, 1), (1, 0)) == 2
    assert cone_max_shift(K, (2, 1), (-1, 0)) == INF
    assert cone_max_shift(K, (-1, 1), (1, 0)) is None


def test_generator_outside_ambient_subspace_rejected():
    with pytest.raises(ValueError, match="ambient equation"):
        RationalCone([(1, 0)], 2, ambient_equations=[(1, 1)])


def test_double_description_equations():
    rays, lin = double_description([(1, 0, 0), (0, 1, 0)], [(0, 0, 1)], 3)
    assert sorted(rays) == [(0, 1, 0), (1, 0, 0)]
    assert lin == []


@given(cones())
def test_dual_dual_round_trip(K):
    DD = cone_dual(cone_dual(K))
    assert DD.same_as(K)
    assert DD.ray_set() == K.ray_set() or not K.is_pointed


@given(cones(max_dim=4))
def test_dual_pairs_nonnegatively(K):
    D = K.dual()
    for g in K.generators:
        for h in D.generators:
            assert sum(a * b for a, b in zip(g, h)) >= 0


@given(cones(max_dim=4), st.data())
def test_max_shift_is_tight(K, data):
    d = K.ambient_dim
    coeffs = [data.draw(st.integers(0, 2)) for _ in K.generators]
    v = [sum(c * g[i] for c, g in zip(coeffs, K.generators)) for i in range(d)]
    w = data.draw(st.lists(vec, min_size=d, max_size=d).filter(any))
    t = K.max_shift(v, w)
    assert t is not None
    if t == INF:
        assert K.contains([a - 100 * b for a, b in zip(v, w)])
        return
    assert K.contains([a - t * b for a, b in zip(v, w)])
    assert not K.contains([a - (t + 1) * b for a, b in zip(v, w)])


@given(cones(max_dim=4), st.lists(vec, min_size=4, max_size=4), st.fractions(min_value=Fraction(1, 10),
                                                                              max_value=10))
def test_membership_scale_invariant(K, v, lam):
    v = v[:K.ambient_dim] + [0] * max(0, K.ambient_dim - len(v))
    assert K.contains(v) == K.contains([lam * x for x in v])
    assert K.contains(v, strict=True) == K.contains([lam * x for x in v], strict=True)


# -- polytopes -------------------------------------------------------------


@pytest.mark.parametrize("n,d", [(1, 3), (2, 1), (2, 4), (3, 2), (4, 3)])
def test_simplex_volume(n, d):
    assert polytope_volume(simplex(n, d)) == Fraction(d ** n, math.factorial(n))


def test_unit_square():
    P = box(0, 1, 2)
    assert polytope_volume(P) == 1
    assert lattice_point_count(P, 2) == 9
    assert lattice_point_count(simplex(2, 2), 1) == 6


def test_section_polytope_of_3h_minus_e():
    # {m1, m2 >= 0, m1 + m2 <= 3, m1 + m2 >= 1}
    P = Polytope([((1, 0), 0), ((0, 1), 0), ((-1, -1), -3), ((1, 1), 1)])
    assert set(P.vertices) == {(0, 1), (0, 3), (1, 0), (3, 0)}
    assert polytope_volume(P) == 4
    counts = [lattice_point_count(P, m) for m in range(1, 9)]
    # 4 m^2 + 4 m + 1 points: the quadratic coefficient is the volume
    assert counts == [4 * m * m + 4 * m + 1 for m in range(1, 9)]
    assert ehrhart_leading_coefficient(P) == 4


def test_empty_and_unbounded():
    P = Polytope([((1,), 1), ((-1,), 0)])
    assert P.is_empty and polytope_volume(P) == 0 and lattice_point_count(P) == 0
    Q = Polytope([((1, 0), 0)])
    assert not Q.is_bounded
    with pytest.raises(ValueError):
        polytope_volume(Q)


def test_redundant_inequality_detected():
    P = Polytope([((1, 0), 0), ((0, 1), 0), ((-1, -1), -1), ((-1, 0), -5)])
    assert P.redundant_inequalities() == [3]


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)), min_size=4, max_size=4))
def test_tetrahedron_volume_matches_sympy(points):
    vol = simplex_volume_sympy(points)
    assume(vol > 0)
    # H-representation from the four facet planes
    import sympy
    ineqs = []
    for skip in range(4):
        face = [p for k, p in enumerate(points) if k != skip]
        a = sympy.Matrix([[x - y for x, y in zip(face[1], face[0])],
                          [x - y for x, y in zip(face[2], face[0])]]).nullspace()[0]
        a = [Fraction(int(x.p), int(x.q)) for x in a]
        b = sum(x * y for x, y in zip(a, face[0]))
        if sum(x * y for x, y in zip(a, points[skip])) < b:
            a, b = [-x for x in a], -b
        ineqs.append((a, b))
    assert polytope_volume(Polytope(ineqs)) == vol


@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2))
def test_volume_equals_ehrhart_on_lattice_boxes_and_simplices(a, b, c):
    P = Polytope([((1, 0), 0), ((0, 1), 0), ((-1, 0), -a), ((0, -1), -b), ((-1, -1), -(a + b - c))])
    assert ehrhart_leading_coefficient(P) == polytope_volume(P)
