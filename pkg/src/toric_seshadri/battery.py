"""Self-contained verification battery.

Every criterion is a function returning a list of :class:`Check` rows; all
fans and classes are built here, nothing is read from disk.  Sweeps report
one row per property (discrepancy count against an expected 0) plus a row
for the sample size, so reports stay short while every case is evaluated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import rank_one
from .classes import (CurveClass, DivisorClass, ample_class, blowup_context, cone_system, divisor_volume,
                      movable_orthant, nef_power_curve, relation_rows, section_polytope)
from .cone_vertex import ConeVertexInput, vertex_seshadri_curve, vertex_seshadri_dual
from .lattice_fan import Fan, fan_validate, hirzebruch, projective_space, star_subdivision
from .polyhedra import RationalCone, ehrhart_leading_coefficient, polytope_volume
from .seshadri import (NEG_INF, bound_product_check, bound_vol_checks, fujita_divisor, null_locus,
                       power_bound_check, seshadri_curve, seshadri_curve_blowup, seshadri_divisor,
                       theorem_a_check)

SEED = 20240611


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    got: object
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "got": self.got, "pass": self.passed}


def check(name, expected, got) -> Check:
    return Check(name, expected, got, expected == got)


def at_least(name, bound, got) -> Check:
    return Check(name, f">= {bound}", got, got >= bound)


# -- fans ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def bl_p_p2() -> Fan:
    """Bl_p P^2 with rays e1, e2, -e1-e2, e1+e2; cone 0 is cone(e1, e1+e2)."""
    return star_subdivision(projective_space(2), (0, 1))[0]


@lru_cache(maxsize=None)
def battery_fans() -> dict[str, Fan]:
    blp2 = bl_p_p2()
    return {
        "P2": projective_space(2),
        "P3": projective_space(3),
        "P4": projective_space(4),
        "P1xP1": hirzebruch(0),
        "F1": hirzebruch(1),
        "F2": hirzebruch(2),
        "F3": hirzebruch(3),
        "Bl_pP2": blp2,
        "Bl_pqP2": star_subdivision(blp2, (1, 2))[0],
        "Bl_pP3": star_subdivision(projective_space(3), (0, 1, 2))[0],
    }


# -- sampling ------------------------------------------------------------------


def _combo(rng, vectors, lo, hi):
    while True:
        coeffs = [rng.randint(lo, hi) for _ in vectors]
        v = [sum(c * x[i] for c, x in zip(coeffs, vectors)) for i in range(len(vectors[0]))]
        if any(v):
            return v


def movable_sample(fan: Fan, rng: random.Random, count: int) -> list[CurveClass]:
    rays = cone_system(fan).mov1.rays
    out = [CurveClass(fan, r) for r in rays]
    while len(out) < count:
        out.append(CurveClass(fan, _combo(rng, rays, 0, 3)))
    return out


def integral_sample(fan: Fan, rng: random.Random, count: int) -> list[CurveClass]:
    """Integral curve classes, movable or not, from small wall-curve combinations."""
    gens = cone_system(fan).mori.rays
    return [CurveClass(fan, _combo(rng, gens, -2, 3)) for _ in range(count)]


def ample_sample(fan: Fan, rng: random.Random, count: int) -> list[DivisorClass]:
    base = ample_class(fan)
    nef_rays = cone_system(fan).nef1.rays
    out = [base]
    while len(out) < count:
        extra = _combo(rng, nef_rays, 0, 2)
        out.append(DivisorClass(fan, [a + b for a, b in zip(base.coeffs, extra)]))
    return out


def big_sample(fan: Fan, rng: random.Random, count: int) -> list[DivisorClass]:
    """Ample plus a small effective part: big, usually not nef."""
    amples = ample_sample(fan, rng, count)
    out = []
    for h in amples:
        extra = [rng.randint(0, 2) for _ in range(fan.nrays)]
        out.append(DivisorClass(fan, [a + b for a, b in zip(h.coeffs, extra)]))
    return out


def line_class(n: int) -> CurveClass:
    return CurveClass(projective_space(n), [1] * (n + 1))


def hyperplane(n: int) -> DivisorClass:
    return DivisorClass.unit(projective_space(n), n)


# -- criteria ------------------------------------------------------------------


def criterion_1(rng) -> list[Check]:
    out = []
    for n in range(2, 6):
        fan = projective_space(n)
        line, h = line_class(n), hyperplane(n)
        for k in range(len(fan.max_cones)):
            ray = seshadri_curve(line, k)
            blow = seshadri_curve_blowup(line, k)
            out.append(check(f"P{n} point {k}: eps(line) ray formula", "1 Exact", f"{ray.value} {ray.status.value}"))
            out.append(check(f"P{n} point {k}: eps(line) blow-up", 1, blow.value))
            out.append(check(f"P{n} point {k}: eps(H)", 1, seshadri_divisor(h, k)))
    return out


def criterion_2(rng) -> list[Check]:
    fan = bl_p_p2()
    e_curve = CurveClass(fan, (1, 1, 0, -1))
    out = []
    for k, cone in enumerate(fan.max_cones):
        r = seshadri_curve(e_curve, k)
        if 3 in cone:
            out.append(check(f"point {k} on E: eps(E)", "-1 UpperBoundOnly", f"{r.value} {r.status.value}"))
        else:
            out.append(check(f"point {k} off E: eps(E)", "-inf NegInfinityWitness witness=3",
                             f"{'-inf' if r.value == NEG_INF else r.value} {r.status.value} witness={r.witness}"))
    return out


def criterion_3(rng) -> list[Check]:
    fan = bl_p_p2()
    d = DivisorClass(fan, (0, 0, 3, -1))
    c = nef_power_curve(d)
    out = [check("3H-E as curve class", (2, 2, 3, 1), tuple(int(x) for x in c.pairings))]
    for k, cone in enumerate(fan.max_cones):
        if 3 not in cone:
            continue
        out.append(check(f"point {k}: eps(3H-E as curve)", 1, seshadri_curve(c, k).value))
        out.append(check(f"point {k}: eps(3H-E as curve), blow-up", 1, seshadri_curve_blowup(c, k).value))
        out.append(check(f"point {k}: eps(3H-E as divisor)", 1, seshadri_divisor(d, k)))
        out.append(check(f"point {k}: mu(3H-E)", 5, fujita_divisor(d, k).value))
    out.append(check("vol(3H-E)", 8, divisor_volume(d)))
    ctx = blowup_context(fan, 0)
    H = ctx.pull_divisor(DivisorClass.unit(fan, 2))
    E = ctx.pull_divisor(DivisorClass.unit(fan, 3))
    F = ctx.E
    expected = RationalCone([F.coeffs, (H - E - F).coeffs, (E - F).coeffs]
                            + _relations_pm(ctx.fan), ctx.fan.nrays)
    eff = cone_system(ctx.fan).eff1
    out.append(check("blow-up Eff^1 = <F, H-E-F, E-F>", True, eff.same_as(expected)))
    out.append(check("blow-up Eff^1 has 3 extremal rays", 3, len(eff.rays)))
    return out


def _relations_pm(fan):
    rel = relation_rows(fan)
    return rel + [tuple(-x for x in r) for r in rel]


def criterion_4(rng) -> list[Check]:
    bad = classes = 0
    for name, fan in battery_fans().items():
        for c in movable_sample(fan, rng, 22):
            classes += 1
            for k in range(len(fan.max_cones)):
                if seshadri_curve(c, k).value != seshadri_curve_blowup(c, k).value:
                    bad += 1
    return [at_least("movable classes sampled", 200, classes),
            check("RayFormula != BlowupMaxShift", 0, bad)]


def criterion_5(rng) -> list[Check]:
    bad = classes = 0
    for name, fan in battery_fans().items():
        sample = movable_sample(fan, rng, 12) + integral_sample(fan, rng, 12)
        for c in sample:
            classes += 1
            if not theorem_a_check(c).consistent:
                bad += 1
    return [at_least("classes sampled", 200, classes), check("interior <-> min eps > 0 discrepancies", 0, bad)]


def criterion_6(rng) -> list[Check]:
    bad_indep = bad_zero = classes = with_witness = 0
    for name, fan in battery_fans().items():
        for c in movable_sample(fan, rng, 22):
            classes += 1
            nl = null_locus(c)
            if nl.witness_point_exists:
                with_witness += 1
            if not nl.consistent:
                bad_indep += 1
            for k, cone in enumerate(fan.max_cones):
                zero = seshadri_curve(c, k).value == 0
                if zero != any(i in nl.rays for i in cone):
                    bad_zero += 1
    return [at_least("movable classes sampled", 200, classes),
            at_least("classes with a positive invariant point", 100, with_witness),
            check("independence discrepancies", 0, bad_indep),
            check("eps = 0 <-> null ray discrepancies", 0, bad_zero)]


def criterion_7(rng) -> list[Check]:
    prod = vol_mu = vol_eps = power = upper = 0
    n_prod = n_vol = n_pow = 0
    for name, fan in battery_fans().items():
        curves = movable_sample(fan, rng, 6)
        bigs = big_sample(fan, rng, 4)
        amples = ample_sample(fan, rng, 3)
        nmax = len(fan.max_cones)
        for i, c in enumerate(curves):
            for j, L in enumerate(bigs):
                k = (i + j) % nmax
                r = bound_product_check(c, L, k)
                n_prod += 1
                prod += not r["holds"]
                v = bound_vol_checks(c, L, k)
                n_vol += 1
                vol_mu += not v["mu_vs_vol"]
                vol_eps += not v["eps_vs_vol"]
        for h in amples:
            for k in range(nmax):
                p = power_bound_check(h, k)
                n_pow += 1
                power += not p["holds"]
                upper += not p["upper_holds"]
    out = [at_least("product triples", 100, n_prod), check("eps*mu > C.L violations", 0, prod),
           at_least("volume triples", 100, n_vol), check("mu^n < vol violations", 0, vol_mu),
           check("eps^n vol > (C.L)^n violations", 0, vol_eps),
           at_least("power triples", 100, n_pow), check("eps(H^{n-1}) < eps(H)^{n-1} violations", 0, power),
           check("eps(H^{n-1})^n > (H^n)^{n-1} violations", 0, upper)]
    for n in range(2, 5):
        line, h = line_class(n), hyperplane(n)
        r = bound_product_check(line, h, 0)
        v = bound_vol_checks(line, h, 0)
        p = power_bound_check(h, 0)
        out.append(check(f"P{n} tight: eps*mu = C.L", (1, 1), (r["lhs"], r["rhs"])))
        out.append(check(f"P{n} tight: mu^n = vol", (1, 1), (v["mu"] ** n, v["vol"])))
        out.append(check(f"P{n} tight: eps(H^{{n-1}}) = eps(H)^{{n-1}} = (H^n)^{{(n-1)/n}}", (1, 1, 1),
                         (p["eps_power"], p["eps_base"], p["Hn"])))
    return out


def random_cone(rng: random.Random) -> RationalCone:
    d = rng.randint(1, 6)
    k = rng.randint(1, 8)
    gens = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(k)]
    return RationalCone(gens, d)


def criterion_8(rng) -> list[Check]:
    bad = pointed_bad = 0
    for _ in range(50):
        K = random_cone(rng)
        DD = K.dual().dual()
        if not DD.same_as(K):
            bad += 1
        if K.is_pointed and DD.ray_set() != K.ray_set():
            pointed_bad += 1
    out = [check("dual(dual(K)) != K over 50 random cones", 0, bad),
           check("extremal rays differ (pointed cones)", 0, pointed_bad)]
    for name, fan in battery_fans().items():
        cs = cone_system(fan)
        out.append(check(f"{name}: Mov_1 dual(Eff^1) = orthant slice", True, cs.mov1.same_as(movable_orthant(fan))))
        out.append(check(f"{name}: Nef^1 in Eff^1", True, cs.eff1.contains_cone(cs.nef1)))
        out.append(check(f"{name}: Mov_1 in Mori", True, cs.mori.contains_cone(cs.mov1)))
    return out


def criterion_9(rng) -> list[Check]:
    out = []
    for n in range(2, 5):
        for d in range(1, 4):
            out.append(check(f"vol O_P{n}({d})", d ** n, divisor_volume(hyperplane(n) * d)))
    for name, fan in battery_fans().items():
        polys = [section_polytope(h) for h in ample_sample(fan, rng, 2 if fan.dim < 4 else 1)]
        for i, P in enumerate(polys):
            out.append(check(f"{name} polytope {i}: volume = Ehrhart leading coefficient",
                             polytope_volume(P), ehrhart_leading_coefficient(P)))
    P = section_polytope(DivisorClass(bl_p_p2(), (0, 0, 3, -1)))
    out.append(check("P_{3H-E}: Ehrhart leading coefficient", 4, ehrhart_leading_coefficient(P)))
    return out


def criterion_10(rng) -> list[Check]:
    Q = Fraction
    out = []
    g24 = rank_one.solve(rank_one.dataset("G(2,4)"))
    out.append(check("G(2,4): eps(line)", Q(1, 2), g24.eps_c))
    for k, n in [(1, 3), (1, 5), (2, 4), (2, 5), (3, 6), (2, 7), (3, 7), (4, 8), (5, 7)]:
        g = rank_one.solve(rank_one.grassmannian(k, n))
        out.append(check(f"G({k},{n}): eps(line) = 1/min(k,n-k)", Q(1, min(k, n - k)), g.eps_c))
    g2 = rank_one.solve(rank_one.dataset("jac-genus2"))
    out.append(check("genus 2: eps(C), eps(theta), mu(theta)", (Q(4, 3), Q(4, 3), Q(3, 2)),
                     (g2.eps_c, g2.eps_div, g2.mu_div)))
    out.append(check("genus 2: (4/3)^2 < 2 < (3/2)^2", True, g2.eps_div ** 2 < g2.deg < g2.mu_div ** 2))
    ab = rank_one.solve(rank_one.dataset("abelian-surface"))
    out.append(check("abelian surface: eps(H)^2 < H^2 < mu(H)^2", True, ab.eps_div ** 2 < ab.deg < ab.mu_div ** 2))
    for flavor, sigma in [("nonhyp", Q(12, 7)), ("hyp", Q(3, 2))]:
        g3 = rank_one.solve(rank_one.dataset(f"jac-genus3-{flavor}"))
        cones = rank_one.blowup_cones(g3)
        out.append(check(f"genus 3 {flavor}: eps(C), mu(theta)", (Q(3, 2), Q(2)), (g3.eps_c, g3.mu_div)))
        out.append(check(f"genus 3 {flavor}: Eff^1 = <E, pi*theta - 2E>",
                         [{"pullback": "0", "exceptional": "1"}, {"pullback": "1", "exceptional": "-2"}],
                         cones["eff"]))
        out.append(check(f"genus 3 {flavor}: nef boundary coefficient", sigma, g3.eps_div))
    return out


def criterion_11(rng) -> list[Check]:
    fan = bl_p_p2()
    inp = ConeVertexInput(DivisorClass.unit(fan, 2), DivisorClass(fan, (0, 0, 2, -1)))
    dual, curve = vertex_seshadri_dual(inp), vertex_seshadri_curve(inp)
    p2 = projective_space(2)
    h = DivisorClass.unit(p2, 2)
    inp2 = ConeVertexInput(h, h)
    return [check("Bl_pP2, alpha=H, h=2H-E: dual value", 0, dual),
            check("Bl_pP2, alpha=H, h=2H-E: curve value", Fraction(2, 3), curve),
            check("strict inequality dual < curve", True, dual < curve),
            check("P2, alpha=h=H: (dual, curve)", (1, 1), (vertex_seshadri_dual(inp2), vertex_seshadri_curve(inp2)))]


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "P^n: eps(line) = eps(H) = 1, both methods", criterion_1),
    (2, "Bl_pP2: eps(E) = -1 on E, -inf off E", criterion_2),
    (3, "Bl_pP2: eps(3H-E) = 1, mu = 5, vol = 8, blow-up Eff cone", criterion_3),
    (4, "RayFormula = BlowupMaxShift on the battery", criterion_4),
    (5, "Mov_1 interior <-> least invariant-point eps > 0", criterion_5),
    (6, "Null rays independent; eps = 0 <-> null ray in sigma", criterion_6),
    (7, "Inequality sweeps", criterion_7),
    (8, "Cone duality properties", criterion_8),
    (9, "Volumes and Ehrhart oracle", criterion_9),
    (10, "Picard rank one datasets", criterion_10),
    (11, "Cone-vertex constants", criterion_11),
]


def run_criterion(number: int, seed: int = SEED) -> list[Check]:
    for num, _, fn in CRITERIA:
        if num == number:
            return fn(random.Random(seed + num))
    raise ValueError(f"criterion: no criterion {number}")


def run_battery(seed: int = SEED, only: list[int] | None = None):
    results = []
    for num, title, fn in CRITERIA:
        if only and num not in only:
            continue
        results.append((num, title, fn(random.Random(seed + num))))
    return results


def validate_battery() -> dict[str, bool]:
    """Every battery fan must be smooth, complete and projective."""
    out = {}
    for name, fan in battery_fans().items():
        rep = fan_validate(fan)
        out[name] = rep.smooth and rep.complete and rep.projective
    return out
