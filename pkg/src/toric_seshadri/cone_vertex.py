"""Seshadri constants at the vertex of a projective cone over a toric surface.

For a surface X with very ample h and nef alpha on X, the cone over X has
two natural invariants at its vertex o:

* the nef dual class, max{t >= 0 : alpha - t h nef}, which is the infimum
  of (alpha.L)/(h.L) over effective curves L by duality;
* the movable curve it caps, (alpha.h)/(h^2).

The first never exceeds the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classes import DivisorClass, cone_system, is_ample, is_nef, nef_power_curve, pairing


@dataclass(frozen=True)
class ConeVertexInput:
    alpha: DivisorClass
    h: DivisorClass

    def __post_init__(self):
        if self.alpha.fan != self.h.fan:
            raise ValueError("alpha and h live on different fans")
        if self.alpha.fan.dim != 2:
            raise ValueError(f"fan: expected a surface fan, got dimension {self.alpha.fan.dim}")
        if not is_nef(self.alpha):
            raise ValueError("alpha: not nef")
        if not is_ample(self.h):
            raise ValueError("h: not ample")


def vertex_seshadri_dual(inp: ConeVertexInput) -> Fraction:
    return cone_system(inp.h.fan).nef1.max_shift(inp.alpha.coeffs, inp.h.coeffs)


def vertex_seshadri_curve(inp: ConeVertexInput) -> Fraction:
    h_curve = nef_power_curve(inp.h)
    return pairing(h_curve, inp.alpha) / pairing(h_curve, inp.h)
