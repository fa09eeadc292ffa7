"""Exact rational polyhedral cones and polytopes.

Both representations of a cone are produced by one routine,
:func:`double_description`, which turns ``{x : A x >= 0, E x = 0}`` into
extreme rays plus a lineality basis.  Each step of it is a Fourier-Motzkin
elimination on the dual side: rays on opposite sides of the new inequality
are combined pairwise, and only combinatorially adjacent pairs are kept,
which removes redundant rays as the iteration proceeds.  All vectors are
kept as primitive integer tuples, so no rational blow-up occurs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .linalg import det, dot, fvec, primitive, rank, to_fraction

INF = math.inf


def _neg(v):
    return tuple(-x for x in v)


def double_description(inequalities: Sequence[Sequence[int]],
                       equations: Sequence[Sequence[int]] = (),
                       dim: int | None = None):
    """Generators of ``{x : a·x >= 0 for a in inequalities, e·x = 0 for e in equations}``.

    Returns ``(rays, lineality)`` as lists of primitive integer tuples.  The
    rays are extreme modulo the lineality space and pairwise distinct.
    """
    if dim is None:
        rows = list(inequalities) + list(equations)
        if not rows:
            raise ValueError("dimension required when there are no constraints")
        dim = len(rows[0])
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    for e in equations:
        e = primitive(e)
        idx = next((i for i, v in enumerate(lin) if dot(e, v) != 0), None)
        if idx is None:
            continue
        v = lin.pop(idx)
        ev = dot(e, v)
        lin = [primitive([ev * wi - dot(e, w) * vi for wi, vi in zip(w, v)]) for w in lin]

    rays: list[tuple[int, ...]] = []
    masks: list[int] = []
    for j, a in enumerate(inequalities):
        a = primitive(a)
        bit = 1 << j
        idx = next((i for i, v in enumerate(lin) if dot(a, v) != 0), None)
        if idx is not None:
            v = lin.pop(idx)
            av = dot(a, v)
            if av < 0:
                v, av = _neg(v), -av
            lin = [primitive([av * wi - dot(a, w) * vi for wi, vi in zip(w, v)]) for w in lin]
            rays = [primitive([av * ri - dot(a, r) * vi for ri, vi in zip(r, v)]) for r in rays]
            masks = [m | bit for m in masks]
            rays.append(v)
            masks.append(bit - 1)
            continue
        vals = [dot(a, r) for r in rays]
        pos = [i for i, x in enumerate(vals) if x > 0]
        neg = [i for i, x in enumerate(vals) if x < 0]
        zero = [i for i, x in enumerate(vals) if x == 0]
        if not neg:
            masks = [m | bit if vals[i] == 0 else m for i, m in enumerate(masks)]
            continue
        pairs = kernels.adjacent_pairs(pos, neg, masks)
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        new_masks = [masks[i] for i in pos] + [masks[i] | bit for i in zero]
        for p, n in pairs:
            vp, vn = vals[p], vals[n]
            new_rays.append(primitive([vp * x - vn * y for x, y in zip(rays[n], rays[p])]))
            new_masks.append((masks[p] & masks[n]) | bit)
        rays, masks = new_rays, new_masks
    return rays, lin


class RationalCone:
    """A closed convex polyhedral cone over Q.

    Built from generators.  ``ambient_equations`` optionally declares the
    linear subspace the cone is considered in (for instance N_1 inside the
    space of ray pairings); full-dimensionality and strict interiors are
    measured relative to that subspace.
    """

    def __init__(self, generators: Iterable[Sequence], ambient_dim: int | None = None,
                 ambient_equations: Iterable[Sequence] = ()):
        gens = [fvec(g) for g in generators]
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient_dim is required for the zero cone")
            ambient_dim = len(gens[0])
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError("generators have inconsistent dimensions")
        eqs = [primitive(e) for e in ambient_equations]
        eqs = [e for e in eqs if any(e)]
        if any(len(e) != ambient_dim for e in eqs):
            raise ValueError("ambient equation has wrong dimension")
        for g in gens:
            for e in eqs:
                if dot(e, g) != 0:
                    raise ValueError(f"generator {g} violates ambient equation {e}")
        self.ambient_dim = ambient_dim
        self.generators = tuple(gens)
        self.ambient_equations = tuple(eqs)

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[Sequence], equations: Iterable[Sequence] = (),
                          ambient_dim: int | None = None, ambient_equations=None) -> "RationalCone":
        """Cone ``{x : a·x >= 0, e·x = 0}``; generators found by double description."""
        ineqs = [primitive(a) for a in inequalities]
        eqs = [primitive(e) for e in equations]
        if ambient_dim is None:
            ambient_dim = len((ineqs + eqs)[0])
        rays, lin = double_description(ineqs, eqs, ambient_dim)
        gens = list(rays) + list(lin) + [_neg(v) for v in lin]
        if ambient_equations is None:
            ambient_equations = eqs
        return cls(gens, ambient_dim, ambient_equations)

    def __repr__(self):
        return f"RationalCone(dim={self.dim}, ambient={self.ambient_dim}, rays={len(self.rays)}, lineality={self.lineality_dim})"

    # -- representations -------------------------------------------------

    @cached_property
    def _hrep(self):
        gens = [primitive(g) for g in self.generators]
        gens = [g for g in gens if any(g)]
        facets, eqs = double_description(gens, (), self.ambient_dim)
        return tuple(facets), tuple(eqs)

    @cached_property
    def _vrep(self):
        facets, eqs = self._hrep
        rays, lin = double_description(facets, eqs, self.ambient_dim)
        return tuple(rays), tuple(lin)

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        """Inward facet normals phi with phi(x) >= 0 on the cone (irredundant)."""
        return self._hrep[0]

    @property
    def equations(self) -> tuple[tuple[int, ...], ...]:
        """Basis of the functionals vanishing on the cone."""
        return self._hrep[1]

    @property
    def rays(self) -> tuple[tuple[int, ...], ...]:
        """Extremal rays modulo the lineality space, as primitive integer vectors."""
        return self._vrep[0]

    @property
    def lineality(self) -> tuple[tuple[int, ...], ...]:
        return self._vrep[1]

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim - rank(self.ambient_equations)

    @property
    def is_pointed(self) -> bool:
        return self.lineality_dim == 0

    def ray_set(self) -> frozenset:
        return frozenset(self.rays)

    # -- queries ---------------------------------------------------------

    def contains(self, v: Sequence, strict: bool = False) -> bool:
        v = fvec(v)
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} tested against cone in dimension {self.ambient_dim}")
        if any(dot(e, v) != 0 for e in self.equations):
            return False
        if strict:
            if not self.is_full_dimensional:
                return False
            return all(dot(f, v) > 0 for f in self.facets)
        return all(dot(f, v) >= 0 for f in self.facets)

    __contains__ = contains

    def max_shift(self, v: Sequence, w: Sequence):
        """max{t >= 0 : v - t w in the cone}; ``None`` if v is outside, ``INF`` if unbounded."""
        v, w = fvec(v), fvec(w)
        if all(x == 0 for x in w):
            raise ValueError("shift direction must be nonzero")
        if not self.contains(v):
            return None
        if any(dot(e, w) != 0 for e in self.equations):
            return Fraction(0)
        best = None
        for f in self.facets:
            fw = dot(f, w)
            if fw > 0:
                t = Fraction(dot(f, v)) / fw
                if best is None or t < best:
                    best = t
        return INF if best is None else best

    def dual(self) -> "RationalCone":
        facets, eqs = self._hrep
        gens = list(facets) + list(eqs) + [_neg(e) for e in eqs]
        return RationalCone(gens, self.ambient_dim, ambient_equations=self.lineality)

    def contains_cone(self, other: "RationalCone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_as(self, other: "RationalCone") -> bool:
        return self.ambient_dim == other.ambient_dim and self.contains_cone(other) and other.contains_cone(self)


def cone_from_generators(vectors: Iterable[Sequence], ambient_dim: int | None = None) -> RationalCone:
    return RationalCone(vectors, ambient_dim)


def cone_dual(cone: RationalCone) -> RationalCone:
    return cone.dual()


def cone_contains(cone: RationalCone, v: Sequence, strict: bool = False) -> bool:
    return cone.contains(v, strict)


def cone_max_shift(cone: RationalCone, v: Sequence, w: Sequence):
    return cone.max_shift(v, w)


class Polytope:
    """``{x : a·x >= b for (a, b) in inequalities}`` with exact vertices on demand."""

    def __init__(self, inequalities: Iterable[tuple[Sequence, object]]):
        ineqs = [(fvec(a), to_fraction(b)) for a, b in inequalities]
        if not ineqs:
            raise ValueError("a polytope needs at least one inequality")
        n = len(ineqs[0][0])
        if any(len(a) != n for a, _ in ineqs):
            raise ValueError("inequalities have inconsistent dimensions")
        self.dim_ambient = n
        self.inequalities = tuple(ineqs)

    @cached_property
    def _homogenized(self):
        rows = [primitive(list(a) + [-b]) for a, b in self.inequalities]
        rows.append(tuple([0] * self.dim_ambient + [1]))
        return double_description(rows, (), self.dim_ambient + 1)

    @property
    def is_empty(self) -> bool:
        rays, _ = self._homogenized
        return not any(r[-1] > 0 for r in rays)

    @property
    def is_bounded(self) -> bool:
        if self.is_empty:
            return True
        rays, lin = self._homogenized
        return not lin and all(r[-1] > 0 for r in rays)

    @cached_property
    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        if not self.is_bounded:
            raise ValueError("polytope is unbounded")
        rays, _ = self._homogenized
        verts = {tuple(Fraction(x, r[-1]) for x in r[:-1]) for r in rays if r[-1] > 0}
        return tuple(sorted(verts))

    @property
    def affine_dim(self) -> int:
        vs = self.vertices
        if not vs:
            return -1
        return rank([[x - y for x, y in zip(v, vs[0])] for v in vs[1:]]) if len(vs) > 1 else 0

    def _tight(self, i) -> frozenset:
        a, b = self.inequalities[i]
        return frozenset(k for k, v in enumerate(self.vertices) if dot(a, v) == b)

    def redundant_inequalities(self) -> list[int]:
        """Indices of inequalities that do not define a facet."""
        d = self.affine_dim
        out = []
        for i in range(len(self.inequalities)):
            t = sorted(self._tight(i))
            if len(t) == len(self.vertices) or _affine_rank([self.vertices[k] for k in t]) < d - 1:
                out.append(i)
        return out

    def triangulation(self) -> list[tuple[int, ...]]:
        """Simplices (vertex index tuples) triangulating the polytope."""
        d = self.affine_dim
        if d < 1:
            return [tuple(range(len(self.vertices)))] if d == 0 else []
        tight = [self._tight(i) for i in range(len(self.inequalities))]
        return _triangulate(frozenset(range(len(self.vertices))), d, tight, self.vertices)

    def volume(self) -> Fraction:
        return polytope_volume(self)


def _affine_rank(points) -> int:
    if not points:
        return -1
    return rank([[x - y for x, y in zip(p, points[0])] for p in points[1:]]) if len(points) > 1 else 0


def _triangulate(face: frozenset, d: int, tight: list[frozenset], verts) -> list[tuple[int, ...]]:
    if d == 0:
        return [tuple(face)]
    apex = min(face)
    subfaces = set()
    for t in tight:
        s = face & t
        if s and s != face and apex not in s:
            subfaces.add(s)
    out = []
    for s in subfaces:
        if _affine_rank([verts[k] for k in sorted(s)]) != d - 1:
            continue
        for simplex in _triangulate(s, d - 1, tight, verts):
            out.append((apex,) + simplex)
    return out


def polytope_volume(polytope: Polytope) -> Fraction:
    """Exact Euclidean volume; 0 for lower-dimensional or empty polytopes."""
    if not polytope.is_bounded:
        raise ValueError("cannot take the volume of an unbounded polytope")
    n = polytope.dim_ambient
    if polytope.affine_dim < n:
        return Fraction(0)
    verts = polytope.vertices
    total = Fraction(0)
    for simplex in polytope.triangulation():
        v0 = verts[simplex[0]]
        total += abs(det([[x - y for x, y in zip(verts[k], v0)] for k in simplex[1:]]))
    return total / math.factorial(n)


def lattice_point_count(polytope: Polytope, m: int = 1) -> int:
    """Number of integer points in the dilate ``m * P``."""
    if m < 1:
        raise ValueError("dilation factor must be a positive integer")
    if polytope.is_empty:
        return 0
    verts = polytope.vertices
    n = polytope.dim_ambient
    lo = [math.ceil(min(v[k] for v in verts) * m) for k in range(n)]
    hi = [math.floor(max(v[k] for v in verts) * m) for k in range(n)]
    rows, rhs = [], []
    for a, b in polytope.inequalities:
        den = 1
        for x in a:
            den = den * x.denominator // math.gcd(den, x.denominator)
        row = [int(x * den) for x in a]
        rows.append(row)
        rhs.append(math.ceil(b * m * den))
    return kernels.count_lattice_points(rows, rhs, lo, hi)


def ehrhart_leading_coefficient(polytope: Polytope) -> Fraction:
    """Leading coefficient of the degree-n interpolant through m = 1..n+1 point counts.

    Equals the volume whenever the polytope has integral vertices.
    """
    n = polytope.dim_ambient
    ms = list(range(1, n + 2))
    counts = [lattice_point_count(polytope, m) for m in ms]
    # divided differences; the n-th one is the leading coefficient
    table = [Fraction(c) for c in counts]
    for level in range(1, n + 1):
        table = [(table[i + 1] - table[i]) / (ms[i + level] - ms[i]) for i in range(len(table) - 1)]
    return table[0]


__all__ = [
    "INF", "RationalCone", "Polytope", "double_description", "cone_from_generators", "cone_dual",
    "cone_contains", "cone_max_shift", "polytope_volume", "lattice_point_count",
    "ehrhart_leading_coefficient",
]
