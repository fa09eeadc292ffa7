"""Seshadri constants and Fujita-Nakayama invariants at torus-fixed points.

Points are maximal cones.  Curve classes use the ray-pairing coordinates of
:mod:`toric_seshadri.classes`, so for a movable class the Seshadri constant
at x_sigma is the least pairing with a divisor through the point.  The same
number is also produced on the blow-up as the largest shift of pi^*C
towards the line class that stays movable; the two routes share nothing
beyond the fan.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .classes import (CurveClass, DivisorClass, blowup_context, cone_system, divisor_volume, fraction_str,
                      is_ample, is_effective, is_nef, nef_power_curve, pairing, relation_rows,
                      top_self_intersection, wall_curve_class)
from .lattice_fan import Fan, subcones, walls
from .linalg import rank

NEG_INF = -math.inf


class Status(str, enum.Enum):
    EXACT = "Exact"
    NEG_INFINITY_WITNESS = "NegInfinityWitness"
    UPPER_BOUND_ONLY = "UpperBoundOnly"


class Method(str, enum.Enum):
    RAY_FORMULA = "RayFormula"
    BLOWUP_MAX_SHIFT = "BlowupMaxShift"


def value_str(x) -> str:
    if x == NEG_INF:
        return "-inf"
    if x == math.inf:
        return "inf"
    return fraction_str(x)


@dataclass(frozen=True)
class SeshadriResult:
    value: object  # Fraction or NEG_INF
    status: Status
    method: Method
    witness: int | None = None

    def to_json(self) -> dict:
        out = {"value": value_str(self.value), "status": self.status.value, "method": self.method.value}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class FujitaResult:
    value: Fraction
    kind: str  # "DivisorAtPoint" or "CurveAtPoint"

    def to_json(self) -> dict:
        return {"value": value_str(self.value), "kind": self.kind}


def _sigma_rays(fan: Fan, sigma) -> tuple:
    return fan.max_cones[fan.cone_index(sigma)]


def seshadri_curve(curve: CurveClass, sigma) -> SeshadriResult:
    """Ray formula: min of C.D_rho over the rays of sigma.

    Exact for movable classes.  Off a negative divisor the constant is
    -infinity; otherwise the minimum is only an upper bound.
    """
    sig = _sigma_rays(curve.fan, sigma)
    c = curve.pairings
    low = min(c[i] for i in sig)
    if curve.is_movable:
        return SeshadriResult(low, Status.EXACT, Method.RAY_FORMULA)
    witness = next((i for i, x in enumerate(c) if x < 0 and i not in sig), None)
    if witness is not None:
        return SeshadriResult(NEG_INF, Status.NEG_INFINITY_WITNESS, Method.RAY_FORMULA, witness)
    return SeshadriResult(low, Status.UPPER_BOUND_ONLY, Method.RAY_FORMULA)


def seshadri_curve_blowup(curve: CurveClass, sigma) -> SeshadriResult:
    """max{t : pi^*C - t l in Mov_1 of the blow-up}, with Mov_1 taken as the dual of Eff^1."""
    if not curve.is_movable:
        raise ValueError("curve class is not movable")
    ctx = blowup_context(curve.fan, curve.fan.cone_index(sigma))
    mov = cone_system(ctx.fan).mov1
    t = mov.max_shift(ctx.pull_curve(curve).pairings, ctx.ell.pairings)
    return SeshadriResult(t, Status.EXACT, Method.BLOWUP_MAX_SHIFT)


def seshadri_divisor(divisor: DivisorClass, sigma) -> Fraction:
    """Least degree of a nef divisor on the invariant curves through x_sigma."""
    if not is_nef(divisor):
        raise ValueError("divisor is not nef")
    fan = divisor.fan
    sig = _sigma_rays(fan, sigma)
    return min(pairing(wall_curve_class(fan, tau), divisor) for tau in subcones(sig, fan.dim - 1))


def seshadri_nef_dual(fan: Fan, k: int, table: Mapping[tuple, Fraction], sigma) -> Fraction:
    """min of alpha.V_theta over the (n-k)-dimensional subcones theta of sigma.

    ``table`` maps sorted ray-index tuples to alpha.V_theta; on a smooth fan
    every V_theta has multiplicity one at x_sigma.
    """
    if not 1 <= k <= fan.dim - 1:
        raise ValueError(f"k must lie in 1..{fan.dim - 1}")
    sig = _sigma_rays(fan, sigma)
    values = []
    for theta in subcones(sig, fan.dim - k):
        key = tuple(sorted(theta))
        if key not in table:
            raise ValueError(f"table: missing entry for cone {list(key)}")
        values.append(Fraction(table[key]))
    return min(values)


def table_from_divisor(divisor: DivisorClass) -> dict[tuple, Fraction]:
    """alpha.V_theta for a nef divisor alpha (k = 1): degrees on invariant curves."""
    return {w: pairing(wall_curve_class(divisor.fan, w), divisor) for w, _ in walls(divisor.fan)}


def table_from_curve(curve: CurveClass) -> dict[tuple, Fraction]:
    """alpha.V_theta for alpha in N^{n-1} = N_1 (k = n - 1): pairings with invariant divisors."""
    return {(i,): x for i, x in enumerate(curve.pairings)}


def fujita_divisor(divisor: DivisorClass, sigma) -> FujitaResult:
    """max{t : pi^*L - tE pseudo-effective}."""
    if not is_effective(divisor):
        raise ValueError("divisor is not pseudo-effective")
    ctx = blowup_context(divisor.fan, divisor.fan.cone_index(sigma))
    eff = cone_system(ctx.fan).eff1
    t = eff.max_shift(ctx.pull_divisor(divisor).coeffs, ctx.E.coeffs)
    return FujitaResult(t, "DivisorAtPoint")


def fujita_curve(curve: CurveClass, sigma) -> FujitaResult:
    """max{t : pi^*C - t l in the Mori cone of the blow-up}."""
    if not cone_system(curve.fan).mori.contains(curve.pairings):
        raise ValueError("curve class is not pseudo-effective")
    ctx = blowup_context(curve.fan, curve.fan.cone_index(sigma))
    mori = cone_system(ctx.fan).mori
    t = mori.max_shift(ctx.pull_curve(curve).pairings, ctx.ell.pairings)
    return FujitaResult(t, "CurveAtPoint")


@dataclass(frozen=True)
class NullLocus:
    rays: tuple[int, ...]
    independent: bool
    witness_point_exists: bool

    @property
    def consistent(self) -> bool:
        """Independence must hold as soon as some invariant point has positive constant."""
        return self.independent or not self.witness_point_exists

    def to_json(self) -> dict:
        return {"rays": list(self.rays), "independent": self.independent,
                "witness_point_exists": self.witness_point_exists, "consistent": self.consistent}


def null_locus(curve: CurveClass) -> NullLocus:
    if not curve.is_movable:
        raise ValueError("curve class is not movable")
    fan = curve.fan
    zero = tuple(i for i, x in enumerate(curve.pairings) if x == 0)
    units = [tuple(int(j == i) for j in range(fan.nrays)) for i in zero]
    rel = relation_rows(fan)
    independent = rank(units + rel) == len(zero) + rank(rel)
    witness = any(all(curve.pairings[i] > 0 for i in cone) for cone in fan.max_cones)
    return NullLocus(zero, independent, witness)


@dataclass(frozen=True)
class TheoremACheck:
    interior: bool
    min_over_invariant_points: object
    consistent: bool

    def to_json(self) -> dict:
        return {"interior": self.interior, "min_over_invariant_points": value_str(self.min_over_invariant_points),
                "consistent": self.consistent}


def theorem_a_check(curve: CurveClass) -> TheoremACheck:
    """Strict interiority in Mov_1 against positivity of the least invariant-point constant.

    The infimum over X is taken over torus-fixed points only; other points
    cannot have smaller constants.
    """
    interior = cone_system(curve.fan).mov1.contains(curve.pairings, strict=True)
    low = min(seshadri_curve(curve, k).value for k in range(len(curve.fan.max_cones)))
    return TheoremACheck(interior, low, interior == (low > 0))


def bound_product_check(curve: CurveClass, divisor: DivisorClass, sigma) -> dict:
    """eps(C;x) mu(L;x) <= C.L."""
    if not curve.is_movable:
        raise ValueError("curve class is not movable")
    eps = seshadri_curve(curve, sigma).value
    mu = fujita_divisor(divisor, sigma).value
    rhs = pairing(curve, divisor)
    lhs = eps * mu
    return {"eps": eps, "mu": mu, "lhs": lhs, "rhs": rhs, "holds": lhs <= rhs}


def bound_vol_checks(curve: CurveClass, divisor: DivisorClass, sigma) -> dict:
    """mu(L)^n >= vol(L) and eps(C)^n vol(L) <= (C.L)^n, compared as exact n-th powers."""
    if not curve.is_movable:
        raise ValueError("curve class is not movable")
    vol = divisor_volume(divisor)
    if vol <= 0:
        raise ValueError("divisor is not big")
    n = divisor.fan.dim
    mu = fujita_divisor(divisor, sigma).value
    eps = seshadri_curve(curve, sigma).value
    cl = pairing(curve, divisor)
    return {"mu": mu, "eps": eps, "vol": vol, "CL": cl,
            "mu_vs_vol": mu ** n >= vol, "eps_vs_vol": eps ** n * vol <= cl ** n}


def power_bound_check(divisor: DivisorClass, sigma) -> dict:
    """eps(H^{n-1}) >= eps(H)^{n-1}, plus the upper bound eps(H^{n-1})^n <= (H^n)^{n-1}."""
    if not is_ample(divisor):
        raise ValueError("divisor is not ample")
    n = divisor.fan.dim
    eps_power = seshadri_curve(nef_power_curve(divisor), sigma).value
    eps_base = seshadri_divisor(divisor, sigma)
    hn = top_self_intersection(divisor)
    return {"eps_power": eps_power, "eps_base": eps_base, "holds": eps_power >= eps_base ** (n - 1),
            "Hn": hn, "upper_holds": eps_power ** n <= hn ** (n - 1)}


def ci_hypothesis(n: int, hn) -> bool:
    """(H^n) >= n^(n-2); informational only."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Fraction(hn) >= Fraction(n) ** (n - 2)
