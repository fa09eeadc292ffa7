"""Divisor and curve classes on a smooth projective toric variety.

Coordinates:

* a divisor class is a coefficient vector ``a`` for sum a_rho D_rho, taken
  modulo the relations (<m, u_rho>)_rho for m in M;
* a curve class is its vector of pairings ``c_rho = C . D_rho``; these are
  exactly the vectors with sum c_rho u_rho = 0.

With these choices the movable cone of curves is the nonnegative orthant
slice of N_1 and the pairing is the plain dot product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .lattice_fan import (Fan, fan_validate, require_projective, star_subdivision, wall_relation,
                          walls)
from .linalg import det, dot, fvec, in_span, lattice_complement_basis, solve
from .polyhedra import Polytope, RationalCone, polytope_volume


def relation_rows(fan: Fan) -> list[tuple[int, ...]]:
    """(<e_i, u_rho>)_rho for each basis vector e_i of M."""
    return [tuple(r[i] for r in fan.rays) for i in range(fan.dim)]


@dataclass(frozen=True)
class DivisorClass:
    fan: Fan
    coeffs: tuple

    def __post_init__(self):
        coeffs = fvec(self.coeffs)
        if len(coeffs) != self.fan.nrays:
            raise ValueError(f"coeffs: expected {self.fan.nrays} entries, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def unit(cls, fan: Fan, i: int) -> "DivisorClass":
        return cls(fan, tuple(int(j == i) for j in range(fan.nrays)))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_fan(self.fan, other.fan)
        return DivisorClass(self.fan, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + other * -1

    def __mul__(self, s) -> "DivisorClass":
        s = Fraction(s)
        return DivisorClass(self.fan, tuple(s * x for x in self.coeffs))

    __rmul__ = __mul__

    def equivalent(self, other: "DivisorClass") -> bool:
        """Linear equivalence: the difference lies in the span of the relations."""
        _same_fan(self.fan, other.fan)
        diff = [x - y for x, y in zip(self.coeffs, other.coeffs)]
        return in_span(diff, relation_rows(self.fan))

    def canonical(self) -> tuple[Fraction, ...]:
        """Representative vanishing on the rays of the first maximal cone (display only)."""
        cone = self.fan.max_cones[0]
        basis = [self.fan.rays[i] for i in cone]
        m = solve(basis, [-self.coeffs[i] for i in cone])
        return tuple(a + dot(m, u) for a, u in zip(self.coeffs, self.fan.rays))

    def to_json(self) -> dict:
        return {"coeffs": [fraction_str(x) for x in self.coeffs]}


@dataclass(frozen=True)
class CurveClass:
    fan: Fan
    pairings: tuple

    def __post_init__(self):
        c = fvec(self.pairings)
        if len(c) != self.fan.nrays:
            raise ValueError(f"pairings: expected {self.fan.nrays} entries, got {len(c)}")
        residual = tuple(sum(ci * u[k] for ci, u in zip(c, self.fan.rays)) for k in range(self.fan.dim))
        if any(residual):
            raise ValueError("pairings: not a curve class, sum c_rho u_rho = "
                             f"({', '.join(fraction_str(x) for x in residual)}) != 0")
        object.__setattr__(self, "pairings", c)

    def __add__(self, other: "CurveClass") -> "CurveClass":
        _same_fan(self.fan, other.fan)
        return CurveClass(self.fan, tuple(x + y for x, y in zip(self.pairings, other.pairings)))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        return self + other * -1

    def __mul__(self, s) -> "CurveClass":
        s = Fraction(s)
        return CurveClass(self.fan, tuple(s * x for x in self.pairings))

    __rmul__ = __mul__

    @property
    def is_movable(self) -> bool:
        return all(x >= 0 for x in self.pairings)

    def to_json(self) -> dict:
        return {"pairings": [fraction_str(x) for x in self.pairings]}


def fraction_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _same_fan(a: Fan, b: Fan) -> None:
    if a != b:
        raise ValueError("classes live on different fans")


def pairing(curve: CurveClass, divisor: DivisorClass) -> Fraction:
    _same_fan(curve.fan, divisor.fan)
    return dot(curve.pairings, divisor.coeffs)


def divisor_from_json(fan: Fan, data: dict) -> DivisorClass:
    if "coeffs" not in data:
        raise ValueError("coeffs: missing field")
    return DivisorClass(fan, tuple(Fraction(str(x)) for x in data["coeffs"]))


def curve_from_json(fan: Fan, data: dict) -> CurveClass:
    if "pairings" not in data:
        raise ValueError("pairings: missing field")
    return CurveClass(fan, tuple(Fraction(str(x)) for x in data["pairings"]))


# -- wall curves and cones -----------------------------------------------


def wall_curve_class(fan: Fan, wall: Sequence[int]) -> CurveClass:
    """Class of the invariant curve V(wall)."""
    wall = tuple(sorted(wall))
    nbrs = dict(walls(fan)).get(wall)
    if nbrs is None:
        raise ValueError(f"wall: {list(wall)} is not a wall of the fan")
    for k in nbrs:
        if abs(_cone_det(fan, fan.max_cones[k])) != 1:
            raise ValueError(f"wall {list(wall)}: adjacent cone {list(fan.max_cones[k])} is not smooth")
    rel = wall_relation(fan, wall, nbrs)
    return CurveClass(fan, tuple(rel.get(i, Fraction(0)) for i in range(fan.nrays)))


def _cone_det(fan, cone):
    return det([fan.rays[i] for i in cone])


@dataclass(frozen=True)
class ConeSystem:
    eff1: RationalCone
    nef1: RationalCone
    mov1: RationalCone
    mori: RationalCone

    def check(self) -> dict[str, bool]:
        return {
            "nef1 = dual(mori)": self.nef1.same_as(self.mori.dual()),
            "mov1 = dual(eff1)": self.mov1.same_as(self.eff1.dual()),
            "nef1 in eff1": self.eff1.contains_cone(self.nef1),
            "mov1 in mori": self.mori.contains_cone(self.mov1),
        }


@lru_cache(maxsize=None)
def cone_system(fan: Fan) -> ConeSystem:
    require_projective(fan)
    r = fan.nrays
    rel = relation_rows(fan)
    units = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    eff1 = RationalCone(units + rel + [tuple(-x for x in v) for v in rel], r)
    wall_classes = [wall_curve_class(fan, w).pairings for w, _ in walls(fan)]
    mori = RationalCone(wall_classes, r, ambient_equations=rel)
    return ConeSystem(eff1=eff1, nef1=mori.dual(), mov1=eff1.dual(), mori=mori)


def movable_orthant(fan: Fan) -> RationalCone:
    """{c : c_rho >= 0, sum c_rho u_rho = 0}, built from inequalities."""
    r = fan.nrays
    units = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    return RationalCone.from_inequalities(units, relation_rows(fan), r)


def is_nef(d: DivisorClass) -> bool:
    return cone_system(d.fan).nef1.contains(d.coeffs)


def is_ample(d: DivisorClass) -> bool:
    return cone_system(d.fan).nef1.contains(d.coeffs, strict=True)


def is_effective(d: DivisorClass) -> bool:
    """Pseudo-effective; on a projective toric variety Eff^1 is generated by the D_rho."""
    return cone_system(d.fan).eff1.contains(d.coeffs)


def ample_class(fan: Fan) -> DivisorClass:
    witness = fan_validate(fan).ample_witness
    if witness is None:
        raise ValueError("fan is not projective")
    return DivisorClass(fan, witness)


# -- polytopes, volumes and powers ---------------------------------------


def section_polytope(d: DivisorClass) -> Polytope:
    """P_D = {m : <m, u_rho> >= -a_rho}."""
    return Polytope([(u, -a) for u, a in zip(d.fan.rays, d.coeffs)])


def divisor_volume(d: DivisorClass) -> Fraction:
    """vol(D) = n! vol(P_D); zero exactly when D is not big."""
    return math.factorial(d.fan.dim) * polytope_volume(section_polytope(d))


def _facet_polytope(d: DivisorClass, rho: int) -> Polytope:
    # coordinates y in a lattice basis of u_rho^perp, so volumes come out normalized
    fan = d.fan
    u = fan.rays[rho]
    basis, m0 = lattice_complement_basis(u)
    p = [-d.coeffs[rho] * x for x in m0]
    ineqs = []
    for j, (uj, aj) in enumerate(zip(fan.rays, d.coeffs)):
        if j == rho:
            continue
        ineqs.append(([dot(b, uj) for b in basis], -aj - dot(p, uj)))
    return Polytope(ineqs)


def nef_power_curve(h: DivisorClass) -> CurveClass:
    """The curve class H^{n-1} of a nef divisor, via normalized facet volumes of P_H."""
    if not is_nef(h):
        raise ValueError("divisor is not nef")
    n = h.fan.dim
    c = []
    for rho in range(h.fan.nrays):
        facet = _facet_polytope(h, rho)
        c.append(math.factorial(n - 1) * polytope_volume(facet))
    return CurveClass(h.fan, tuple(c))


def top_self_intersection(h: DivisorClass) -> Fraction:
    """(H^n) for nef H, equal to its volume."""
    if not is_nef(h):
        raise ValueError("divisor is not nef")
    return divisor_volume(h)


# -- blow-up at a torus-fixed point ----------------------------------------


@dataclass(frozen=True)
class BlowupContext:
    base: Fan
    fan: Fan
    sigma: int
    sigma_rays: tuple
    new_ray: int
    E: DivisorClass
    ell: CurveClass

    def pull_divisor(self, d: DivisorClass) -> DivisorClass:
        # the Cartier datum of D is linear on sigma; its value at u_0 is the sum over sigma
        _same_fan(d.fan, self.base)
        a0 = sum(d.coeffs[i] for i in self.sigma_rays)
        return DivisorClass(self.fan, d.coeffs + (a0,))

    def pull_curve(self, c: CurveClass) -> CurveClass:
        _same_fan(c.fan, self.base)
        return CurveClass(self.fan, c.pairings + (Fraction(0),))

    def push_divisor(self, d: DivisorClass) -> DivisorClass:
        _same_fan(d.fan, self.fan)
        return DivisorClass(self.base, d.coeffs[:-1])

    def push_curve(self, c: CurveClass) -> CurveClass:
        _same_fan(c.fan, self.fan)
        c0 = c.pairings[-1]
        out = [x + c0 if i in self.sigma_rays else x for i, x in enumerate(c.pairings[:-1])]
        return CurveClass(self.base, tuple(out))


@lru_cache(maxsize=None)
def blowup_context(fan: Fan, sigma) -> BlowupContext:
    k = fan.cone_index(sigma)
    require_projective(fan)
    new_fan, new = star_subdivision(fan, k)
    sig = fan.max_cones[k]
    ell = tuple(1 if i in sig else (-1 if i == new else 0) for i in range(new_fan.nrays))
    return BlowupContext(base=fan, fan=new_fan, sigma=k, sigma_rays=sig, new_ray=new,
                         E=DivisorClass.unit(new_fan, new), ell=CurveClass(new_fan, ell))
