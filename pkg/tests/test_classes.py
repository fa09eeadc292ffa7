from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import count_points_brute, polytope_vertices, surface_pairings, surface_product
from toric_seshadri.battery import battery_fans
from toric_seshadri.classes import (CurveClass, DivisorClass, ample_class, blowup_context, cone_system,
                                    curve_from_json, divisor_from_json, divisor_volume, is_ample, is_effective,
                                    is_nef, movable_orthant, nef_power_curve, pairing, relation_rows,
                                    section_polytope, top_self_intersection, wall_curve_class)
from toric_seshadri.lattice_fan import Fan, hirzebruch, projective_space
from toric_seshadri.polyhedra import polytope_volume

SURFACES = ["P2", "P1xP1", "F1", "F2", "F3", "Bl_pP2", "Bl_pqP2"]


def test_pairing_examples(p2, blp2):
    assert pairing(CurveClass(p2, (1, 1, 1)), DivisorClass.unit(p2, 2)) == 1
    assert pairing(CurveClass(blp2, (2, 2, 3, 1)), DivisorClass.unit(blp2, 3)) == 1
    # (3H - E).E = 1 via H.E = 0, E^2 = -1
    assert surface_product(blp2.rays, (0, 0, 3, -1), (0, 0, 0, 1)) == 1


def test_relations_pair_to_zero(fans):
    for fan in fans.values():
        for c in cone_system(fan).mori.rays:
            for rel in relation_rows(fan):
                assert pairing(CurveClass(fan, c), DivisorClass(fan, rel)) == 0


def test_curve_constraint_checked(p2):
    CurveClass(p2, (1, 1, 1))
    with pytest.raises(ValueError, match=r"\(1, 0\) != 0"):
        CurveClass(p2, (1, 0, 0))
    with pytest.raises(ValueError, match="coeffs"):
        DivisorClass(p2, (1, 0))


def test_json_helpers(p2):
    assert divisor_from_json(p2, {"coeffs": ["1/2", "0", "0"]}).coeffs[0] == Fraction(1, 2)
    assert curve_from_json(p2, {"pairings": ["1", "1", "1"]}).to_json() == {"pairings": ["1", "1", "1"]}
    with pytest.raises(ValueError, match="coeffs"):
        divisor_from_json(p2, {})


def test_linear_equivalence(p2):
    assert DivisorClass.unit(p2, 0).equivalent(DivisorClass.unit(p2, 2))
    assert not DivisorClass.unit(p2, 0).equivalent(DivisorClass.unit(p2, 0) * 2)


def test_wall_curve_examples(p2, blp2):
    for w in [(0,), (1,), (2,)]:
        assert wall_curve_class(p2, w).pairings == (1, 1, 1)
    assert wall_curve_class(blp2, (3,)).pairings == (1, 1, 0, -1)
    assert wall_curve_class(blp2, (0,)).pairings == (0, 0, 1, 1)


@pytest.mark.parametrize("name", SURFACES)
def test_wall_curves_match_intersection_matrix(name, fans):
    fan = fans[name]
    for rho in range(fan.nrays):
        unit = [int(i == rho) for i in range(fan.nrays)]
        assert wall_curve_class(fan, (rho,)).pairings == surface_pairings(fan.rays, unit)


def test_cone_examples(p2, blp2):
    cs = cone_system(p2)
    assert cs.mov1.ray_set() == cs.mori.ray_set() == {(1, 1, 1)}
    cs = cone_system(blp2)
    assert cs.mov1.ray_set() == {(1, 1, 1, 0), (0, 0, 1, 1)}
    assert cs.mori.ray_set() == {(1, 1, 0, -1), (0, 0, 1, 1)}
    cs = cone_system(hirzebruch(0))
    assert cs.mov1.ray_set() == cs.mori.ray_set() == {(1, 0, 1, 0), (0, 1, 0, 1)}


def test_non_projective_rejected():
    fan = Fan([(1, 0), (0, 1), (-1, -1)], [(0, 1), (0, 2)])
    with pytest.raises(ValueError, match="not complete"):
        cone_system(fan)


def test_mov1_strict_interior(blp2):
    assert not cone_system(blp2).mov1.contains((1, 1, 1, 0), strict=True)
    assert cone_system(blp2).mov1.contains((2, 2, 3, 1), strict=True)


@pytest.mark.parametrize("name", list(battery_fans()))
def test_cone_system_relations(name, fans):
    fan = fans[name]
    cs = cone_system(fan)
    assert all(cs.check().values())
    assert cs.mov1.same_as(movable_orthant(fan))
    for c in cs.mori.generators:
        CurveClass(fan, c)


def test_positivity_predicates(blp2):
    H, E = DivisorClass.unit(blp2, 2), DivisorClass.unit(blp2, 3)
    assert is_nef(H) and not is_ample(H)
    assert is_ample(H * 3 - E) and is_ample(ample_class(blp2))
    assert is_effective(E) and not is_nef(E)
    assert not is_effective(E * -1)


def test_nef_power_examples(p2, blp2):
    assert nef_power_curve(DivisorClass.unit(p2, 2)).pairings == (1, 1, 1)
    assert nef_power_curve(DivisorClass.unit(projective_space(3), 3)).pairings == (1, 1, 1, 1)
    h = DivisorClass(blp2, (0, 0, 2, -1))
    assert nef_power_curve(h).pairings == (1, 1, 2, 1)
    with pytest.raises(ValueError, match="not nef"):
        nef_power_curve(DivisorClass.unit(blp2, 3))


@pytest.mark.parametrize("name", SURFACES)
def test_nef_power_on_surfaces_matches_pairing(name, fans):
    fan = fans[name]
    for h in [ample_class(fan)] + [DivisorClass(fan, r) for r in cone_system(fan).nef1.rays]:
        c = nef_power_curve(h)
        assert c.pairings == surface_pairings(fan.rays, h.coeffs)
        assert c.pairings == tuple(pairing(c, DivisorClass.unit(fan, i)) for i in range(fan.nrays))


def test_volume_examples(blp2, p2):
    for n in range(2, 5):
        H = DivisorClass.unit(projective_space(n), n)
        for d in range(1, 4):
            assert divisor_volume(H * d) == d ** n
    assert divisor_volume(DivisorClass(blp2, (0, 0, 3, -1))) == 8
    assert divisor_volume(DivisorClass.unit(p2, 2) * -1) == 0


@pytest.mark.parametrize("name", SURFACES)
def test_surface_volume_is_self_intersection(name, fans):
    fan = fans[name]
    h = ample_class(fan)
    assert top_self_intersection(h) == surface_product(fan.rays, h.coeffs, h.coeffs)


@pytest.mark.parametrize("name", list(battery_fans()))
def test_volume_homogeneous(name, fans):
    h = ample_class(fans[name])
    v = divisor_volume(h)
    for d in (1, 2, 3):
        assert divisor_volume(h * d) == d ** fans[name].dim * v


def test_section_polytope_vertices_match_oracle(blp2):
    d = DivisorClass(blp2, (0, 0, 3, -1))
    assert sorted(section_polytope(d).vertices) == polytope_vertices(blp2.rays, d.coeffs)
    assert polytope_volume(section_polytope(d)) == 4
    from toric_seshadri.polyhedra import lattice_point_count
    assert [lattice_point_count(section_polytope(d), m) for m in (1, 2, 3)] == \
        [count_points_brute(blp2.rays, d.coeffs, m) for m in (1, 2, 3)]


# -- blow-up maps ------------------------------------------------------------


def test_blowup_context_basics(p2):
    ctx = blowup_context(p2, (0, 1))
    assert ctx.ell.pairings == (1, 1, 0, -1)
    assert ctx.E.coeffs == (0, 0, 0, 1)
    assert pairing(ctx.ell, ctx.E) == -1


def test_pullback_of_3h_minus_e_has_mu_5(blp2):
    ctx = blowup_context(blp2, 0)
    L = ctx.pull_divisor(DivisorClass(blp2, (0, 0, 3, -1)))
    eff = cone_system(ctx.fan).eff1
    assert eff.max_shift(L.coeffs, ctx.E.coeffs) == 5


def test_pullback_keeps_strict_transform_pairings(blp2):
    # pi^* D pairs with strict transforms of invariant curves like D does with the original curves
    ctx = blowup_context(blp2, 1)
    D = DivisorClass(blp2, (1, 2, 3, -1))
    pulled = ctx.pull_divisor(D)
    for rho in range(blp2.nrays):
        if rho in ctx.sigma_rays:
            continue
        unit_up = DivisorClass.unit(ctx.fan, rho)
        assert pairing(ctx.pull_curve(wall_curve_class(blp2, (rho,))), unit_up) == \
            pairing(wall_curve_class(blp2, (rho,)), DivisorClass.unit(blp2, rho))
    assert pulled.coeffs[-1] == D.coeffs[1] + D.coeffs[3]


@pytest.mark.parametrize("name", list(battery_fans()))
def test_pull_push_properties(name, fans):
    fan = fans[name]
    ctx = blowup_context(fan, 0)
    curves = [CurveClass(fan, r) for r in cone_system(fan).mori.rays]
    divisors = [DivisorClass.unit(fan, i) for i in range(fan.nrays)]
    for c in curves:
        up = ctx.pull_curve(c)
        assert ctx.push_curve(up) == c
        assert pairing(up, ctx.E) == 0
        for d in divisors:
            # projection formula
            assert pairing(up, ctx.pull_divisor(d)) == pairing(c, d)
    for a, b in zip(curves, curves[1:]):
        assert ctx.pull_curve(a + b * 2) == ctx.pull_curve(a) + ctx.pull_curve(b) * 2
    for d in divisors:
        assert ctx.push_divisor(ctx.pull_divisor(d)).equivalent(d)


@given(st.sampled_from(SURFACES), st.data())
def test_pulled_divisor_matches_surface_oracle(name, data):
    fan = battery_fans()[name]
    k = data.draw(st.integers(0, len(fan.max_cones) - 1))
    a = data.draw(st.lists(st.integers(-2, 3), min_size=fan.nrays, max_size=fan.nrays))
    b = data.draw(st.lists(st.integers(-2, 3), min_size=fan.nrays, max_size=fan.nrays))
    ctx = blowup_context(fan, k)
    up_a, up_b = ctx.pull_divisor(DivisorClass(fan, a)), ctx.pull_divisor(DivisorClass(fan, b))
    # (pi^*A . pi^*B) = (A.B) and (pi^*A . E) = 0
    assert surface_product(ctx.fan.rays, up_a.coeffs, up_b.coeffs) == surface_product(fan.rays, a, b)
    assert surface_product(ctx.fan.rays, up_a.coeffs, ctx.E.coeffs) == 0


@pytest.mark.parametrize("name", list(battery_fans()))
def test_strict_transforms_are_unit_classes(name, fans):
    fan = fans[name]
    for k in range(len(fan.max_cones)):
        ctx = blowup_context(fan, k)
        for rho in range(fan.nrays):
            pulled = ctx.pull_divisor(DivisorClass.unit(fan, rho))
            strict = pulled - ctx.E if rho in ctx.sigma_rays else pulled
            assert strict == DivisorClass.unit(ctx.fan, rho)
            assert pairing(ctx.ell, pulled) == 0


@pytest.mark.parametrize("name", list(battery_fans()))
def test_power_class_of_integral_nef_is_integral(name, fans):
    fan = fans[name]
    for h in [ample_class(fan)] + [DivisorClass(fan, r) for r in cone_system(fan).nef1.rays]:
        c = nef_power_curve(h)
        assert all(x.denominator == 1 and x >= 0 for x in c.pairings)
        assert cone_system(fan).mov1.contains(c.pairings)
