"""Exact Seshadri constants and Fujita-Nakayama invariants on smooth projective toric varieties."""

from .classes import (CurveClass, DivisorClass, cone_system, divisor_volume, nef_power_curve, pairing,
                      top_self_intersection)
from .kernels import BACKEND
from .lattice_fan import Fan, fan_validate, hirzebruch, load_fan, projective_space, star_subdivision
from .polyhedra import Polytope, RationalCone, polytope_volume
from .seshadri import (fujita_curve, fujita_divisor, null_locus, seshadri_curve, seshadri_curve_blowup,
                       seshadri_divisor, seshadri_nef_dual)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CurveClass", "DivisorClass", "Fan", "Polytope", "RationalCone", "cone_system", "divisor_volume",
    "fan_validate", "fujita_curve", "fujita_divisor", "hirzebruch", "load_fan", "nef_power_curve", "null_locus",
    "pairing", "polytope_volume", "projective_space", "seshadri_curve", "seshadri_curve_blowup",
    "seshadri_divisor", "seshadri_nef_dual", "star_subdivision", "top_self_intersection",
]
