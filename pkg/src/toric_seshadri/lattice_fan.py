"""Fans of smooth complete toric varieties and the point blow-up.

A fan is stored as its primitive ray generators and its maximal cones
(sorted tuples of ray indices).  Ray order is the order of the input and
indexes every class vector elsewhere in the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Sequence

from .linalg import det, dot, inverse, nullspace
from .polyhedra import RationalCone, double_description

Cone = tuple  # sorted tuple of ray indices


@dataclass(frozen=True)
class Fan:
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[Cone, ...]

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        if not rays:
            raise ValueError("rays: fan has no rays")
        n = len(rays[0])
        if n < 2:
            raise ValueError(f"rays: lattice rank must be at least 2, got {n}")
        for i, r in enumerate(rays):
            if len(r) != n:
                raise ValueError(f"rays[{i}]: expected {n} coordinates, got {len(r)}")
            g = 0
            for x in r:
                g = gcd(g, x)
            if g != 1:
                raise ValueError(f"rays[{i}]: {r} is not primitive (gcd {g})")
        if len(set(rays)) != len(rays):
            dup = next(r for r in rays if rays.count(r) > 1)
            raise ValueError(f"rays: duplicate ray {dup}")
        for k, c in enumerate(cones):
            if len(c) != n or len(set(c)) != n:
                raise ValueError(f"max_cones[{k}]: expected {n} distinct ray indices, got {list(c)}")
            if any(i < 0 or i >= len(rays) for i in c):
                raise ValueError(f"max_cones[{k}]: ray index out of range in {list(c)}")
            if det([rays[i] for i in c]) == 0:
                raise ValueError(f"max_cones[{k}]: rays {list(c)} are linearly dependent")
        if len(set(cones)) != len(cones):
            raise ValueError("max_cones: duplicate cone")
        used = {i for c in cones for i in c}
        missing = [i for i in range(len(rays)) if i not in used]
        if missing:
            raise ValueError(f"max_cones: rays {missing} lie in no maximal cone")

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @property
    def nrays(self) -> int:
        return len(self.rays)

    def cone_index(self, sigma) -> int:
        """Index of a maximal cone given as an index or as a collection of ray indices."""
        if isinstance(sigma, int):
            if not 0 <= sigma < len(self.max_cones):
                raise ValueError(f"point: maximal cone index {sigma} out of range 0..{len(self.max_cones) - 1}")
            return sigma
        key = tuple(sorted(sigma))
        try:
            return self.max_cones.index(key)
        except ValueError:
            raise ValueError(f"sigma: {list(key)} is not a maximal cone") from None

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays], "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_json(cls, data: dict) -> "Fan":
        for key in ("rays", "max_cones"):
            if key not in data:
                raise ValueError(f"{key}: missing field")
        try:
            rays = [[int(x) for x in r] for r in data["rays"]]
        except (TypeError, ValueError):
            raise ValueError("rays: coordinates must be integers") from None
        try:
            cones = [[int(x) for x in c] for c in data["max_cones"]]
        except (TypeError, ValueError):
            raise ValueError("max_cones: entries must be integer ray indices") from None
        return cls(rays, cones)


@dataclass(frozen=True)
class ValidationReport:
    smooth: bool
    complete: bool
    projective: bool
    problems: tuple[str, ...] = field(default=())
    ample_witness: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"smooth": self.smooth, "complete": self.complete, "projective": self.projective,
               "problems": list(self.problems)}
        if self.ample_witness is not None:
            out["ample_witness"] = [str(x) for x in self.ample_witness]
        return out


def load_fan(path) -> Fan:
    with open(path) as fh:
        return Fan.from_json(json.load(fh))


def _wall_map(fan: Fan) -> dict[tuple, list[int]]:
    out: dict[tuple, list[int]] = {}
    for k, c in enumerate(fan.max_cones):
        for w in combinations(c, fan.dim - 1):
            out.setdefault(w, []).append(k)
    return out


def _side(fan: Fan, wall: tuple, ray: int) -> int:
    d = det([fan.rays[i] for i in wall] + [fan.rays[ray]])
    return (d > 0) - (d < 0)


def _off_ray(cone: tuple, wall: tuple) -> int:
    return next(i for i in cone if i not in wall)


def _intersection_is_face(fan: Fan, a: int, b: int) -> bool:
    ca, cb = fan.max_cones[a], fan.max_cones[b]
    ba = [fan.rays[i] for i in ca]
    bb = [fan.rays[i] for i in cb]
    # rows of the inverse transpose are the inward facet normals of a simplicial cone
    fa = [list(col) for col in zip(*inverse(ba))]
    fb = [list(col) for col in zip(*inverse(bb))]
    rays, lin = double_description(fa + fb, (), fan.dim)
    if lin:
        return False
    common = set(ca) & set(cb)
    for r in rays:
        for i, normal in zip(ca, fa):
            if i not in common and dot(normal, r) != 0:
                return False
    return True


def wall_relation(fan: Fan, wall: tuple, neighbors: tuple[int, int]) -> dict[int, Fraction]:
    """The linear relation among u, u' (off-wall rays) and the wall rays, scaled so u has coefficient 1.

    On a smooth fan u' also gets coefficient 1 and the wall coefficients
    are the intersection numbers of V(wall) with the wall divisors.
    """
    c1, c2 = (fan.max_cones[k] for k in neighbors)
    u, v = _off_ray(c1, wall), _off_ray(c2, wall)
    idx = [u, v] + list(wall)
    cols = [[fan.rays[i][r] for i in idx] for r in range(fan.dim)]
    ns = nullspace(cols, len(idx))
    if len(ns) != 1 or ns[0][0] == 0:
        raise ValueError(f"wall {list(wall)}: no linear relation; adjacent cones are degenerate")
    rel: dict[int, Fraction] = {}
    for i, c in zip(idx, ns[0]):
        rel[i] = rel.get(i, Fraction(0)) + Fraction(c, ns[0][0])
    return rel


@lru_cache(maxsize=None)
def fan_validate(fan: Fan) -> ValidationReport:
    problems = []
    smooth = True
    for k, c in enumerate(fan.max_cones):
        d = abs(det([fan.rays[i] for i in c]))
        if d != 1:
            smooth = False
            problems.append(f"max_cones[{k}]: multiplicity {d} (not unimodular)")
    complete = True
    for w, nbrs in _wall_map(fan).items():
        if len(nbrs) != 2:
            complete = False
            problems.append(f"wall {list(w)}: lies in {len(nbrs)} maximal cone(s), expected 2")
            continue
        s1 = _side(fan, w, _off_ray(fan.max_cones[nbrs[0]], w))
        s2 = _side(fan, w, _off_ray(fan.max_cones[nbrs[1]], w))
        if s1 == s2:
            complete = False
            problems.append(f"wall {list(w)}: both neighbors on the same side")
    for a, b in combinations(range(len(fan.max_cones)), 2):
        if not _intersection_is_face(fan, a, b):
            complete = False
            problems.append(f"max_cones[{a}] and max_cones[{b}] overlap improperly")
    projective = False
    witness = None
    if complete:
        rels = [wall_relation(fan, w, tuple(nbrs)) for w, nbrs in walls_unchecked(fan)]
        rows = [[rel.get(i, Fraction(0)) for i in range(fan.nrays)] for rel in rels]
        nef = RationalCone.from_inequalities(rows, (), fan.nrays)
        projective = nef.is_full_dimensional
        if projective:
            point = [sum(r[i] for r in nef.rays) for i in range(fan.nrays)]
            margin = min(dot(row, point) for row in rows)
            witness = tuple(Fraction(x) / margin for x in point)
            if all(x.denominator == 1 for x in witness):
                witness = tuple(int(x) for x in witness)
        else:
            problems.append("no strictly convex support function (not projective)")
    return ValidationReport(smooth, complete, projective, tuple(problems), witness)


def walls_unchecked(fan: Fan) -> list[tuple[tuple, tuple[int, int]]]:
    return [(w, tuple(n)) for w, n in sorted(_wall_map(fan).items()) if len(n) == 2]


def walls(fan: Fan) -> list[tuple[tuple, tuple[int, int]]]:
    """Every (n-1)-cone with its two adjacent maximal cones."""
    out = []
    for w, nbrs in sorted(_wall_map(fan).items()):
        if len(nbrs) != 2:
            raise ValueError(f"wall {list(w)} has {len(nbrs)} neighboring maximal cones; fan is incomplete or malformed")
        out.append((w, (nbrs[0], nbrs[1])))
    return out


def subcones(sigma: Sequence[int], d: int) -> list[tuple]:
    sigma = tuple(sorted(sigma))
    if not 0 <= d <= len(sigma):
        raise ValueError(f"subcone dimension {d} outside 0..{len(sigma)}")
    return list(combinations(sigma, d))


def require_smooth_complete(fan: Fan) -> None:
    rep = fan_validate(fan)
    if not rep.smooth:
        raise ValueError("fan is not smooth: " + "; ".join(rep.problems))
    if not rep.complete:
        raise ValueError("fan is not complete: " + "; ".join(rep.problems))


def require_projective(fan: Fan) -> None:
    require_smooth_complete(fan)
    if not fan_validate(fan).projective:
        raise ValueError("fan is not projective")


def star_subdivision(fan: Fan, sigma) -> tuple[Fan, int]:
    """Blow up the torus-fixed point of the maximal cone ``sigma``.

    Returns the subdivided fan and the index of the new ray (always last).
    The cone ``sigma`` is replaced in place by the n cones obtained by
    swapping one of its rays for the new one, last ray first.
    """
    k = fan.cone_index(sigma)
    require_smooth_complete(fan)
    cone = fan.max_cones[k]
    new_ray = tuple(sum(fan.rays[i][c] for i in cone) for c in range(fan.dim))
    new = fan.nrays
    pieces = [tuple(sorted([j for j in cone if j != i] + [new])) for i in reversed(cone)]
    cones = list(fan.max_cones[:k]) + pieces + list(fan.max_cones[k + 1:])
    return Fan(fan.rays + (new_ray,), tuple(cones)), new


# -- standard fans -------------------------------------------------------


def projective_space(n: int) -> Fan:
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [tuple([-1] * n)]
    cones = [tuple(j for j in range(n + 1) if j != i) for i in range(n, -1, -1)]
    return Fan(rays, cones)


def hirzebruch(a: int) -> Fan:
    """F_a; F_0 is P^1 x P^1."""
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    return Fan(rays, [(0, 1), (1, 2), (2, 3), (3, 0)])
