import pytest

from symrees.errors import BudgetExceededError, DuplicatePointsError, InputError
from symrees.fields import CyclotomicField, RationalField
from symrees.ideals import Ideal
from symrees.points import (
    PointPowerCache,
    PointSet,
    ProjectivePoint,
    base_ring,
    defining_ideal,
    points_ideal,
    symbolic_power_ideal,
    symbolic_power_membership,
)

Q = RationalField()
R = base_ring(Q)
x, y, z = R.var("x"), R.var("y"), R.var("z")


def P(*coords, field=Q):
    return ProjectivePoint(field, list(coords))


def test_normalization_last_nonzero_is_one():
    from fractions import Fraction

    assert P(2, 4, 2).coords == (1, 2, 1)
    assert P(3, 6, 0).coords == (Fraction(1, 2), 1, 0)
    assert P(5, 0, 0).coords == (1, 0, 0)
    assert P(2, 4, 2) == P(1, 2, 1)


def test_zero_point_rejected():
    with pytest.raises(InputError):
        P(0, 0, 0)


def test_defining_ideal_examples():
    assert defining_ideal(P(0, 0, 1), R) == Ideal([x, y])
    assert defining_ideal(P(1, 0, 0), R) == Ideal([y, z])
    assert defining_ideal(P(0, 1, 0), R) == Ideal([z, x])
    gb = defining_ideal(P(1, 1, 1), R).groebner()
    assert set(str(g) for g in gb) == {"y - z", "x - z"}


def test_defining_ideal_vanishes_at_its_point():
    for pt in (P(1, 2, 3), P(1, 1, 0), P(0, 5, 1)):
        for g in defining_ideal(pt, R).generators:
            assert Q.is_zero(g.evaluate(pt.coords))
        gb = defining_ideal(pt, R).groebner()
        assert len(gb) == 2
        assert all(p.total_degree() == 1 for p in gb)


def test_point_set_rejects_duplicates():
    with pytest.raises(DuplicatePointsError):
        PointSet([P(1, 0, 0), P(2, 0, 0)])


def test_points_ideal_examples():
    assert points_ideal(PointSet([P(1, 0, 0)]), R) == Ideal([y, z])
    two = points_ideal(PointSet([P(1, 0, 0), P(0, 1, 0)]), R)
    assert two == Ideal([z, x * y])
    # both inclusions
    for g in two.generators:
        assert Q.is_zero(g.evaluate((1, 0, 0)))
        assert Q.is_zero(g.evaluate((0, 1, 0)))


def test_points_ideal_of_pencil_grid_is_the_pencil():
    # the four points (+-1 : +-1 : 1) are cut out by y^2 - z^2 and z^2 - x^2
    H = PointSet([P(1, 1, 1), P(1, -1, 1), P(-1, 1, 1), P(-1, -1, 1)])
    f = y**2 - z**2
    g = z**2 - x**2
    assert points_ideal(H, R) == Ideal([f, g])


def test_symbolic_power_membership_examples():
    H = PointSet([P(0, 0, 1)])
    assert symbolic_power_membership(x * y, H, 2)
    assert not symbolic_power_membership(z, H, 1)
    assert not symbolic_power_membership(x, H, 2)


def test_symbolic_power_ideal_examples():
    single = symbolic_power_ideal(PointSet([P(0, 0, 1)]), 2, R)
    assert single == Ideal([x**2, x * y, y**2])
    # the pencil grid: symbolic powers are ordinary powers of the pencil
    H = PointSet([P(1, 1, 1), P(1, -1, 1), P(-1, 1, 1), P(-1, -1, 1)])
    f = y**2 - z**2
    g = z**2 - x**2
    assert symbolic_power_ideal(H, 2, R) == Ideal([f, g]).power(2)
    # r = 1 must agree with the points ideal
    three = PointSet([P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)])
    assert symbolic_power_ideal(three, 1, R) == points_ideal(three, R)


def test_symbolic_power_budget():
    H = PointSet([P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)])
    with pytest.raises(BudgetExceededError):
        symbolic_power_ideal(H, 3, R, budget=8)


def test_ordinary_power_inside_symbolic_power():
    H = PointSet([P(1, 0, 0), P(0, 1, 0), P(1, 1, 1)])
    I = points_ideal(H, R)
    cache = PointPowerCache(R)
    for r in (1, 2):
        for g in I.power(r).generators:
            assert symbolic_power_membership(g, H, r, cache)


def test_product_rule_for_symbolic_powers():
    H = PointSet([P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)])
    I = points_ideal(H, R)
    cache = PointPowerCache(R)
    xi = I.generators[0]
    eta = I.generators[-1]
    assert symbolic_power_membership(xi * eta, H, 2, cache)


def test_membership_agrees_with_full_intersection():
    H = PointSet([P(1, 0, 0), P(0, 1, 0), P(1, 1, 1)])
    full = symbolic_power_ideal(H, 2, R)
    cache = PointPowerCache(R)
    samples = list(full.generators) + [x**4, (x - z) ** 2 * (y - z) ** 2]
    for f in samples:
        assert symbolic_power_membership(f, H, 2, cache) == full.contains(f)


def test_cyclotomic_grid_points():
    F = CyclotomicField(3)
    S = base_ring(F)
    w = F.generator()
    pts = [ProjectivePoint(F, [F.pow(w, i), F.pow(w, j), F.one]) for i in range(1, 4) for j in range(1, 4)]
    H = PointSet(pts)
    assert len(H) == 9
    f = S.var("y") ** 3 - S.var("z") ** 3
    g = S.var("z") ** 3 - S.var("x") ** 3
    assert points_ideal(H, S) == Ideal([f, g])
