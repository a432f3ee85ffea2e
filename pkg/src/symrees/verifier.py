"""Finite-generation verification for symbolic Rees rings of point ideals.

Two routes establish the criterion for a witness pair (xi1, r1), (xi2, r2)
with xi_i in the r_i-th symbolic power of the points ideal I:

* the homogeneous product check: both witnesses homogeneous of degrees d1, d2,
  height((xi1, xi2)) = 2, and d1*d2 = r1*r2*e(S/I);
* the length check against a validated linear form u: the local length of
  S/(u, xi1, xi2) at the origin equals r1*r2 * dim_K S/(uS + I).

The local length is computed by m-adic truncation: colengths of J + m^N are
non-decreasing in N and agreement of two consecutive values certifies, by
Nakayama, that the value is exact.  A verified criterion implies the symbolic
Rees ring is finitely generated; a failed check proves nothing (the criterion
is existential over witness pairs).
"""

from __future__ import annotations

import random
import time

from .errors import (
    CapExceededError,
    GenericityExhaustedError,
    InputError,
    InvariantError,
    MembershipFailedError,
    NotHomogeneousError,
)
from .groebner import lead_monomial_basis
from .ideals import INFINITE, Ideal
from .points import (
    PointPowerCache,
    PointSet,
    base_ring,
    points_ideal,
    symbolic_power_membership,
)
from .polynomials import Polynomial, mono_divides

VERDICT_VERIFIED = "condition-verified"
VERDICT_NOT_ESTABLISHED = "condition-not-established"
METHOD_HOMOGENEOUS = "prop-1.2"
METHOD_LENGTH = "thm-2.1"

GENERIC_FORM_DRAWS = 32
COEFFICIENT_RANGE = 9
HARD_CAP = 256


class GenericLinearForm:
    """A validated linear form: vanishing at no configuration point and cutting
    the points ideal down to colength #H."""

    __slots__ = ("polynomial", "int_coefficients", "seed", "draws", "colength")

    def __init__(self, polynomial, int_coefficients, seed, draws, colength):
        self.polynomial = polynomial
        self.int_coefficients = int_coefficients
        self.seed = seed
        self.draws = draws
        self.colength = colength

    def __repr__(self):
        return f"GenericLinearForm({self.polynomial}, seed={self.seed})"


class VerificationReport:
    """Everything one run produced, in the shape the CLI serializes."""

    def __init__(self, config, field, seed):
        self.schema = 1
        self.config = config
        self.field = field
        self.memberships = []
        self.method = None
        self.height = None
        self.product_check = None
        self.lengths = None
        self.u = None
        self.seed = seed
        self.verdict = VERDICT_NOT_ESTABLISHED
        self.timings_ms = {}
        self.notes = []
        self.confirmation = None

    def to_json_dict(self):
        lengths = None
        if self.lengths is not None:
            lengths = {
                k: ("Infinite" if v == INFINITE else v) for k, v in self.lengths.items()
            }
        return {
            "schema": self.schema,
            "config": self.config,
            "field": self.field,
            "memberships": self.memberships,
            "method": self.method,
            "height": self.height,
            "product_check": self.product_check,
            "lengths": lengths,
            "u": self.u,
            "seed": self.seed,
            "verdict": self.verdict,
            "timings_ms": self.timings_ms,
            "notes": self.notes,
            "confirmation": self.confirmation,
        }


def _ms(t0):
    return round((time.monotonic() - t0) * 1000, 3)


def membership_results(H: PointSet, witnesses, ring, cache=None):
    """Membership record for both witnesses, via per-point normal forms."""
    cache = cache or PointPowerCache(ring)
    out = []
    for idx, (xi, r) in enumerate(((witnesses.xi1, witnesses.r1), (witnesses.xi2, witnesses.r2)), 1):
        out.append({"witness": idx, "r": r, "member": symbolic_power_membership(xi, H, r, cache)})
    return out


def pick_generic_linear_form(H: PointSet, seed: int, ideal: Ideal | None = None) -> GenericLinearForm:
    """Draw u = a*x + b*y + c*z with small integer coefficients from the seed.

    Accepted only if u vanishes at no point of H and dim_K S/(uS + I_H) equals
    #H; up to 32 draws before giving up (tiny prime fields can exhaust this).
    """
    field = H.field
    ring = base_ring(field)
    if ideal is None:
        ideal = points_ideal(H, ring)
    rng = random.Random(seed)
    for draw in range(GENERIC_FORM_DRAWS):
        coeffs = tuple(rng.randint(-COEFFICIENT_RANGE, COEFFICIENT_RANGE) for _ in range(3))
        if not any(coeffs):
            continue
        u = ring.zero()
        for name, c in zip(("x", "y", "z"), coeffs):
            if c:
                u = u + ring.var(name).scale(field.from_int(c))
        if u.is_zero():
            continue  # coefficients can collapse mod p
        if any(field.is_zero(u.evaluate(P.coords)) for P in H):
            continue
        colength = Ideal(list(ideal.generators) + [u], ring=ring).vector_space_dimension()
        if colength == len(H):
            return GenericLinearForm(u, coeffs, seed, draw, colength)
    raise GenericityExhaustedError(
        f"no acceptable linear form in {GENERIC_FORM_DRAWS} draws from seed {seed}"
    )


# --- local length by m-adic truncation ----------------------------------------------


def _monomials_of_degree(ring, d):
    out = []
    nv = ring.nvars
    def rec(i, left, prefix):
        if i == nv - 1:
            out.append(ring.monomial(prefix + (left,)))
            return
        for e in range(left, -1, -1):
            rec(i + 1, left - e, prefix + (e,))
    rec(0, d, ())
    return out


def _truncated_colength(gens, ring, n):
    """dim_K S/(J + m^N): lead monomials of a basis computed modulo degree > N
    with the degree-N monomials among the generators, then a standard-monomial
    count below degree N."""
    trunc = []
    for g in gens:
        items = {m: c for m, c in g.terms.items() if sum(m) < n}
        if items:
            trunc.append(Polynomial(ring, items))
    trunc.extend(_monomials_of_degree(ring, n))
    leads = lead_monomial_basis(trunc, truncate_degree=n)
    count = 0
    for mono in _exponents_below(ring.nvars, n):
        if not any(mono_divides(lm, mono) for lm in leads):
            count += 1
    return count


def _exponents_below(nvars, n):
    if nvars == 2:
        for a in range(n):
            for b in range(n - a):
                yield (a, b)
        return
    stack = [((), 0)]
    while stack:
        prefix, used = stack.pop()
        if len(prefix) == nvars:
            yield prefix
            continue
        for e in range(n - used):
            stack.append((prefix + (e,), used + e))


def local_length_at_origin(J: Ideal, cap: int, start: int = 2, target: int | None = None):
    """Length of the localization at the irrelevant maximal ideal, or INFINITE.

    Computes colengths of J + m^N along an increasing schedule; since they are
    non-decreasing and eventually constant exactly when the local length is
    finite, agreement of two consecutive values is a proof of exactness.  When
    equality first shows up across a gap, the adjacent pair right after the
    earlier point is recomputed so the certificate is always two consecutive
    values.  Positive dimensional components through the origin are detected
    up front via saturation and reported as INFINITE.

    ``target`` is a scheduling hint only (the expected length): the loop
    approaches it with shrinking jumps and single steps beyond it.  It never
    affects the returned value.
    """
    ring = J.ring
    gens = [g for g in J.generators if not g.is_zero()]
    if not gens:
        return INFINITE, None
    J = Ideal(gens, ring=ring)
    if J.is_unit():
        return 0, None
    if J.krull_dimension() >= 1:
        maximal = Ideal([ring.var(v) for v in ring.variables], ring=ring)
        sat = J.saturation(maximal)
        if not sat.is_unit() and all(
            ring.field.is_zero(p.constant_term()) for p in sat.groebner()
        ):
            return INFINITE, None
    if cap < 3:
        raise InputError("the truncation cap must be at least 3")
    n = max(2, min(start, cap - 1))
    prev_n, prev_val = None, None
    while True:
        val = _truncated_colength(gens, ring, n)
        if prev_val is not None and val == prev_val:
            if n == prev_n + 1:
                return val, n
            # colengths are monotone, so the value is flat on the whole gap;
            # recompute the adjacent point to certify a consecutive pair
            mid = _truncated_colength(gens, ring, prev_n + 1)
            if mid != prev_val:
                raise InvariantError("truncated colengths are not monotone")
            return val, prev_n + 1
        if n >= cap:
            raise CapExceededError(f"no stabilization up to the cap N = {cap}")
        if target is not None and val < target:
            # extrapolate along the observed growth rate, never past doubling
            gap = target - val
            if prev_val is not None and val > prev_val:
                slope = (val - prev_val) / (n - prev_n)
                step = max(1, min(int(gap / slope), n))
            else:
                step = max(1, gap // (n + 1))
        elif target is not None:
            step = 1
        else:
            step = max(1, n // 3)
        prev_n, prev_val = n, val
        n = min(n + step, cap)


def default_cap(rhs: int) -> int:
    """Default truncation cap, clamped to the hard cap.

    The colength-based floor N(N+1)/2 > 4*rhs is not always enough: high
    witness degrees stretch the staircase, and the smallest stabilization
    point can pass it (the 2x3 grid stabilizes one step beyond it).  A finite
    local length L always stabilizes by N = L + 1, so 2*rhs + 8 leaves room
    for moderately perturbed pairs whose length exceeds the bound.
    """
    n = 2
    while n * (n + 1) // 2 <= 4 * rhs:
        n += 1
    return min(max(n, 2 * rhs + 8), HARD_CAP)


def _eliminate_along(u: GenericLinearForm, polys):
    """Substitute away the largest-coefficient variable of u; returns 2-variable images."""
    coeffs = u.int_coefficients
    ring = polys[0].ring
    field = ring.field
    pivot = max(range(3), key=lambda i: (abs(coeffs[i]), i))
    pname = ring.variables[pivot]
    inv = field.inv(field.from_int(coeffs[pivot]))
    expr = ring.zero()
    for i, c in enumerate(coeffs):
        if i != pivot and c:
            expr = expr + ring.var(ring.variables[i]).scale(field.mul(field.from_int(-c), inv))
    out = []
    for p in polys:
        out.append(p.substitute(pname, expr).drop_variable(pname))
    return out


def check_homogeneous_condition(H: PointSet, witnesses, ideal: Ideal | None = None,
                                precomputed_memberships=None) -> VerificationReport:
    """Product-form criterion for a homogeneous witness pair."""
    if not witnesses.both_homogeneous():
        raise NotHomogeneousError("both witnesses must be homogeneous for this check")
    field = H.field
    ring = base_ring(field)
    report = VerificationReport(config=None, field=field.spec.to_json(), seed=None)
    report.method = METHOD_HOMOGENEOUS
    t0 = time.monotonic()
    if ideal is None:
        ideal = points_ideal(H, ring)
    report.timings_ms["points_ideal"] = _ms(t0)

    t0 = time.monotonic()
    memberships = precomputed_memberships or membership_results(H, witnesses, ring)
    report.memberships = memberships
    report.timings_ms["memberships"] = _ms(t0)
    if not all(m["member"] for m in memberships):
        report.verdict = VERDICT_NOT_ESTABLISHED
        report.notes.append("a witness is outside its symbolic power")
        return report

    t0 = time.monotonic()
    height = Ideal([witnesses.xi1, witnesses.xi2], ring=ring).height()
    report.height = height
    report.timings_ms["height"] = _ms(t0)

    t0 = time.monotonic()
    e = ideal.hilbert_multiplicity()
    d1 = witnesses.xi1.total_degree()
    d2 = witnesses.xi2.total_degree()
    holds = d1 * d2 == witnesses.r1 * witnesses.r2 * e
    report.product_check = {
        "d1": d1,
        "d2": d2,
        "r1": witnesses.r1,
        "r2": witnesses.r2,
        "e": e,
        "holds": holds,
    }
    report.timings_ms["product_check"] = _ms(t0)
    report.verdict = VERDICT_VERIFIED if (height == 2 and holds) else VERDICT_NOT_ESTABLISHED
    return report


def check_condition_by_length(H: PointSet, witnesses, u: GenericLinearForm | None = None,
                              seed: int = 0, cap: int | None = None,
                              ideal: Ideal | None = None,
                              precomputed_memberships=None) -> VerificationReport:
    """Length-equality criterion: local length of (u, xi1, xi2) vs r1*r2*dim S/(uS+I)."""
    field = H.field
    ring = base_ring(field)
    report = VerificationReport(config=None, field=field.spec.to_json(), seed=seed)
    report.method = METHOD_LENGTH

    t0 = time.monotonic()
    if ideal is None:
        ideal = points_ideal(H, ring)
    report.timings_ms["points_ideal"] = _ms(t0)

    t0 = time.monotonic()
    memberships = precomputed_memberships or membership_results(H, witnesses, ring)
    report.memberships = memberships
    report.timings_ms["memberships"] = _ms(t0)
    if not all(m["member"] for m in memberships):
        raise MembershipFailedError("witnesses are outside their symbolic powers")

    t0 = time.monotonic()
    if u is None:
        u = pick_generic_linear_form(H, seed, ideal=ideal)
    report.u = str(u.polynomial)
    report.seed = u.seed
    if u.colength != len(H):
        raise InputError("the linear form fails the colength validation")
    rhs = witnesses.r1 * witnesses.r2 * u.colength
    report.timings_ms["linear_form"] = _ms(t0)

    t0 = time.monotonic()
    xi1s, xi2s = _eliminate_along(u, [witnesses.xi1, witnesses.xi2])
    if xi1s.is_zero() and xi2s.is_zero():
        lhs, stable_at = INFINITE, None
    else:
        two_ring = xi1s.ring
        J = Ideal([g for g in (xi1s, xi2s) if not g.is_zero()], ring=two_ring)
        if cap is None:
            cap = default_cap(rhs)
        start = 2
        while start * (start + 1) // 2 < rhs:
            start += 1
        lhs, stable_at = local_length_at_origin(J, cap, start=min(start, cap - 1), target=rhs)
    report.timings_ms["local_length"] = _ms(t0)

    if lhs != INFINITE and lhs < rhs:
        raise InvariantError(
            f"computed local length {lhs} fell below the certified bound {rhs}"
        )
    report.lengths = {"lhs": lhs, "rhs": rhs}
    if stable_at is not None:
        report.lengths["stable_at"] = stable_at
    report.verdict = VERDICT_VERIFIED if lhs == rhs else VERDICT_NOT_ESTABLISHED
    return report


def verify(config, seed: int = 0, cap: int | None = None) -> VerificationReport:
    """Full verification of a configuration's witness pair.

    Routes homogeneous pairs through the product check, everything else
    through the length check, which is repeated with a second seed and must
    agree.  A verified report certifies finite generation of the symbolic
    Rees ring; a non-established one proves nothing either way.
    """
    t_total = time.monotonic()
    H = config.points
    witnesses = config.witnesses
    ring = config.ring
    ideal = config.points_ideal()

    cache = PointPowerCache(ring)
    memberships = membership_results(H, witnesses, ring, cache)

    if not all(m["member"] for m in memberships):
        report = VerificationReport(config.provenance, config.field.spec.to_json(), seed)
        report.memberships = memberships
        report.method = METHOD_HOMOGENEOUS if witnesses.both_homogeneous() else METHOD_LENGTH
        report.verdict = VERDICT_NOT_ESTABLISHED
        report.notes.append("a witness failed its symbolic-power membership")
        report.timings_ms["total"] = _ms(t_total)
        return report

    if witnesses.both_homogeneous():
        report = check_homogeneous_condition(H, witnesses, ideal=ideal,
                                             precomputed_memberships=memberships)
    else:
        report = check_condition_by_length(H, witnesses, seed=seed, cap=cap, ideal=ideal,
                                           precomputed_memberships=memberships)
        second = check_condition_by_length(H, witnesses, seed=seed + 1, cap=cap, ideal=ideal,
                                           precomputed_memberships=memberships)
        if second.verdict != report.verdict:
            raise InvariantError("verdicts disagree across seeds")
        if report.verdict == VERDICT_VERIFIED and second.lengths["lhs"] != report.lengths["lhs"]:
            raise InvariantError("local lengths disagree across verifying seeds")
        report.confirmation = {
            "seed": second.seed,
            "u": second.u,
            "lhs": "Infinite" if second.lengths["lhs"] == INFINITE else second.lengths["lhs"],
            "verdict": second.verdict,
        }
    report.config = config.provenance
    report.field = config.field.spec.to_json()
    report.seed = seed
    if config.field.characteristic:
        report.notes.append("characteristic-p check")
    if report.method == METHOD_LENGTH:
        report.notes.append("length route restricted to validated general linear forms")
    if report.verdict == VERDICT_VERIFIED:
        report.notes.append("criterion verified: the symbolic Rees ring is finitely generated")
    else:
        report.notes.append("criterion not established by this witness pair (not a disproof)")
    report.timings_ms["total"] = _ms(t_total)
    return report
