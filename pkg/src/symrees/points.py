"""Projective points, their defining ideals, finite point sets, and symbolic powers.

Points are homogeneous coordinate triples normalized so the last nonzero
coordinate is 1, matching the (a : b : 1) shape of the grid constructions.
The defining ideal of a point comes from the 2x2 minors of the coordinate
matrix and always reduces to two independent linear forms.

Symbolic power membership is checked point by point (a normal form against
the r-th power of each point ideal); the global intersection is only formed
by ``symbolic_power_ideal``, which is budget-guarded because its cost grows
with #points * r.
"""

from __future__ import annotations

from .errors import BudgetExceededError, DuplicatePointsError, InputError
from .ideals import Ideal, intersect_all
from .polynomials import PolyRing


class ProjectivePoint:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = [field.from_int(c) if isinstance(c, int) else c for c in coords]
        if len(coords) != 3:
            raise InputError("a projective point needs three coordinates")
        last = None
        for i in range(2, -1, -1):
            if not field.is_zero(coords[i]):
                last = i
                break
        if last is None:
            raise InputError("(0 : 0 : 0) is not a projective point")
        inv = field.inv(coords[last])
        self.field = field
        self.coords = tuple(field.mul(c, inv) for c in coords)

    def __eq__(self, other):
        return (
            isinstance(other, ProjectivePoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __str__(self):
        return "(" + " : ".join(self.field.scalar_str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjectivePoint{self}"


class PointSet:
    """An ordered set of pairwise distinct projective points."""

    __slots__ = ("points", "label")

    def __init__(self, points, label=""):
        points = tuple(points)
        if len(set(points)) != len(points):
            raise DuplicatePointsError("point set contains repeated points")
        if not points:
            raise InputError("point set is empty")
        self.points = points
        self.label = label

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def field(self):
        return self.points[0].field

    def __repr__(self):
        return f"PointSet({self.label or len(self.points)}, {len(self.points)} points)"


def base_ring(field) -> PolyRing:
    return PolyRing(field, ("x", "y", "z"))


def defining_ideal(point: ProjectivePoint, ring: PolyRing) -> Ideal:
    """Ideal of the point, generated by the 2x2 minors b*x-a*y, c*x-a*z, c*y-b*z."""
    a, b, c = point.coords
    x, y, z = (ring.var(v) for v in ("x", "y", "z"))
    gens = [x.scale(b) - y.scale(a), x.scale(c) - z.scale(a), y.scale(c) - z.scale(b)]
    return Ideal([g for g in gens if not g.is_zero()], ring=ring)


def points_ideal(H: PointSet, ring: PolyRing) -> Ideal:
    """Intersection of the point ideals, iterated left to right."""
    return intersect_all(defining_ideal(P, ring) for P in H)


class PointPowerCache:
    """Reduced bases of I_P^r, keyed by (point, r); shared across membership sweeps."""

    def __init__(self, ring):
        self.ring = ring
        self._bases = {}

    def basis(self, point, r):
        key = (point, r)
        gb = self._bases.get(key)
        if gb is None:
            lin = defining_ideal(point, self.ring).groebner().polynomials
            gb = Ideal(list(lin), ring=self.ring).power(r).groebner()
            self._bases[key] = gb
        return gb


def symbolic_power_membership(xi, H: PointSet, r: int, cache: PointPowerCache | None = None) -> bool:
    """True iff xi lies in the r-th power of every point ideal of H."""
    if r < 1:
        raise InputError("symbolic power exponent must be >= 1")
    if xi.is_zero():
        return True
    if cache is None:
        cache = PointPowerCache(xi.ring)
    return all(cache.basis(P, r).contains(xi) for P in H)


def symbolic_power_ideal(H: PointSet, r: int, ring: PolyRing, budget: int = 64) -> Ideal:
    """The full intersection of the r-th powers of the point ideals.

    Cost grows quickly with #H * r, hence the budget guard; membership tests
    should go through ``symbolic_power_membership`` instead.
    """
    if r < 1:
        raise InputError("symbolic power exponent must be >= 1")
    if len(H) * r > budget:
        raise BudgetExceededError(
            f"#H * r = {len(H) * r} exceeds the budget of {budget}"
        )
    pieces = []
    for P in H:
        lin = defining_ideal(P, ring).groebner().polynomials
        pieces.append(Ideal(list(lin), ring=ring).power(r))
    return intersect_all(pieces)
