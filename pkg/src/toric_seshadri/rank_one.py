"""Picard rank one: the four local invariants and the blow-up cones they bound.

With H the ample generator, the products

    mu(H^{n-1}) * eps(H) = (H^n)      eps(H^{n-1}) * mu(H) = (H^n)

tie the curve side to the divisor side, so one member of each pair fixes
the other.  Curve-side values are stored for the power class H^{n-1};
``curve_scale`` converts them to a named curve C = curve_scale * H^{n-1}.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .classes import fraction_str

Q = Fraction


@dataclass(frozen=True)
class RankOneData:
    n: int
    deg: Fraction
    eps_div: Optional[Fraction] = None
    mu_div: Optional[Fraction] = None
    eps_curve: Optional[Fraction] = None
    mu_curve: Optional[Fraction] = None
    curve_scale: Fraction = Fraction(1)
    name: str = ""
    ordered: bool = False
    note: str = ""

    def __post_init__(self):
        for f in ("deg", "eps_div", "mu_div", "eps_curve", "mu_curve", "curve_scale"):
            v = getattr(self, f)
            if v is not None and not isinstance(v, Fraction):
                object.__setattr__(self, f, Fraction(v))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.curve_scale <= 0:
            raise ValueError("curve_scale must be positive")

    @classmethod
    def from_curve_values(cls, n, deg, curve_scale, eps_c=None, mu_c=None, **kw) -> "RankOneData":
        """Build from invariants of the named curve C = curve_scale * H^{n-1}."""
        s = Fraction(curve_scale)
        return cls(n=n, deg=deg, curve_scale=s,
                   eps_curve=None if eps_c is None else Fraction(eps_c) / s,
                   mu_curve=None if mu_c is None else Fraction(mu_c) / s, **kw)

    @property
    def eps_c(self) -> Optional[Fraction]:
        return None if self.eps_curve is None else self.curve_scale * self.eps_curve

    @property
    def mu_c(self) -> Optional[Fraction]:
        return None if self.mu_curve is None else self.curve_scale * self.mu_curve

    @property
    def complete(self) -> bool:
        return None not in (self.eps_div, self.mu_div, self.eps_curve, self.mu_curve)

    def to_json(self) -> dict:
        def s(x):
            return None if x is None else fraction_str(x)
        return {"name": self.name, "n": self.n, "deg": s(self.deg), "eps_div": s(self.eps_div),
                "mu_div": s(self.mu_div), "eps_curve": s(self.eps_curve), "mu_curve": s(self.mu_curve),
                "curve_scale": s(self.curve_scale), "eps_c": s(self.eps_c), "mu_c": s(self.mu_c),
                "note": self.note}


def _fill(deg, a, b, label_a, label_b):
    if a is None and b is None:
        raise ValueError(f"need at least one of {label_a}, {label_b}")
    if a is not None and b is not None:
        if a * b != deg:
            raise ValueError(f"inconsistent data: {label_a} * {label_b} = {fraction_str(a * b)} "
                             f"but deg = {fraction_str(deg)}")
        return a, b
    if a is not None:
        if a <= 0:
            raise ValueError(f"{label_a} must be positive")
        return a, deg / a
    if b <= 0:
        raise ValueError(f"{label_b} must be positive")
    return deg / b, b


def solve(data: RankOneData) -> RankOneData:
    """Fill the missing invariants from the two product relations."""
    if data.deg <= 0:
        raise ValueError("deg must be positive")
    eps_div, mu_curve = _fill(data.deg, data.eps_div, data.mu_curve, "eps_div", "mu_curve")
    eps_curve, mu_div = _fill(data.deg, data.eps_curve, data.mu_div, "eps_curve", "mu_div")
    out = replace(data, eps_div=eps_div, mu_div=mu_div, eps_curve=eps_curve, mu_curve=mu_curve)
    if data.ordered and not ordering_holds(out):
        raise ValueError("declared ordering eps(H)^n <= (H^n) <= mu(H)^n fails")
    return out


def ordering_holds(data: RankOneData) -> bool:
    """eps(H) <= (H^n)^(1/n) <= mu(H), compared through n-th powers."""
    n = data.n
    return data.eps_div ** n <= data.deg <= data.mu_div ** n


def _boundary(pull, exc) -> dict:
    return {"pullback": fraction_str(pull), "exceptional": fraction_str(exc)}


def blowup_cones(data: RankOneData) -> dict:
    """Boundary rays as coefficient pairs.

    Divisors are written a*pi^*H + b*E; curves a*pi^*H^{n-1} + b*l, and in
    ``curve_normalized`` as a*pi^*C + b*l.
    """
    if not data.complete:
        raise ValueError("blowup_cones needs all four invariants; run solve() first")
    s = data.curve_scale
    return {
        "eff": [_boundary(0, 1), _boundary(1, -data.mu_div)],
        "nef": [_boundary(1, 0), _boundary(1, -data.eps_div)],
        "eff1": [_boundary(0, 1), _boundary(1, -data.mu_curve)],
        "mov1": [_boundary(1, 0), _boundary(1, -data.eps_curve)],
        "curve_normalized": {
            "eff1": [_boundary(0, 1), _boundary(1, -s * data.mu_curve)],
            "mov1": [_boundary(1, 0), _boundary(1, -s * data.eps_curve)],
        },
    }


# -- datasets ----------------------------------------------------------------


def grassmann_degree(k: int, n: int) -> Fraction:
    """Degree of G(k, n) in its Pluecker embedding."""
    dim = k * (n - k)
    prod = 1
    for i in range(1, k + 1):
        for j in range(k + 1, n + 1):
            prod *= j - i
    return Fraction(math.factorial(dim), prod)


def projective_space(n: int) -> RankOneData:
    return RankOneData(n=n, deg=Q(1), eps_div=Q(1), mu_div=Q(1), name=f"P{n}")


def grassmannian(k: int, n: int) -> RankOneData:
    """G(k, n) with the Pluecker polarization L and l = L^{dim-1} / deg the line class."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    d = grassmann_degree(k, n)
    return RankOneData(n=k * (n - k), deg=d, eps_div=Q(1), mu_div=Q(min(k, n - k)),
                       curve_scale=1 / d, name=f"G({k},{n})")


def jacobian_genus2() -> RankOneData:
    return RankOneData.from_curve_values(
        2, 2, 1, eps_c=Q(4, 3), eps_div=Q(4, 3), name="jac-genus2", ordered=True,
        note="C = theta on a principally polarized surface; eps(C) = eps(theta) = 4/3")


def jacobian_genus3(hyperelliptic: bool) -> RankOneData:
    return RankOneData.from_curve_values(
        3, 6, Q(1, 2), eps_c=Q(3, 2), eps_div=Q(3, 2) if hyperelliptic else Q(12, 7),
        name="jac-genus3-hyp" if hyperelliptic else "jac-genus3-nonhyp",
        note="[C] = theta^2/2, (theta^3) = 6")


def abelian_surface() -> RankOneData:
    return RankOneData(n=2, deg=Q(2), eps_div=Q(4, 3), mu_div=Q(3, 2), name="abelian-surface", ordered=True,
                       note="principal polarization, Picard number 1: 4/3 < sqrt(2) < 3/2")


_NAMED = {
    "G(2,4)": lambda: grassmannian(2, 4),
    "jac-genus2": jacobian_genus2,
    "jac-genus3-nonhyp": lambda: jacobian_genus3(False),
    "jac-genus3-hyp": lambda: jacobian_genus3(True),
    "abelian-surface": abelian_surface,
}


def dataset(name: str) -> RankOneData:
    """Look up a dataset: a fixed name, ``P<n>`` or ``G(k,n)``."""
    if name in _NAMED:
        return _NAMED[name]()
    m = re.fullmatch(r"P\^?(\d+)", name)
    if m:
        return projective_space(int(m.group(1)))
    m = re.fullmatch(r"G\((\d+),\s*(\d+)\)", name)
    if m:
        return grassmannian(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"dataset: unknown name {name!r}")


def builtin_datasets() -> list[RankOneData]:
    out = [projective_space(n) for n in range(2, 6)]
    out += [grassmannian(k, n) for k, n in [(1, 4), (2, 4), (2, 5), (2, 6), (3, 6), (3, 7), (4, 8)]]
    out += [f() for key, f in _NAMED.items() if key != "G(2,4)"]
    return out
