"""Lower and upper bounds for the norm of the lifted theta sample.

Lifts of theta values over an ansatz point are one-term Teichmuller elements
whose norm exponents are exact rationals; the pilot sum aggregates them, the
tau-perturbed supremum can only move the exponent down, and the two bound
checks compare exact rationals on both sides.
"""

import itertools
import random

from .ansatz import (act, canonical_point, make_sigma_point, scalar_valuation,
                     special_point_thm10)
from .bring import (BElt, Rho, belt_add, eta_valuation, log_teich, norm_exp,
                    teich)
from .errors import ConsistencyError, DomainError, UsageError
from .numkit import Fq, INF, Rat, embedding_degree, prime_to_p_part
from .tate_theta import xi_valuation
from .tilt import HahnElt, TiltAut, v_F

DEFAULT_R_GRID = (Rat(2), Rat(1), Rat(1, 2), Rat(1, 4))
PERTURB_M = 6  # carry window used when adding tau samples to lifts


class BoundReport:
    """Exact exponent comparison for one level."""

    __slots__ = ("ell", "vq", "r_grid", "pilot", "rhs", "verdict",
                 "moch_pilot", "moch_rhs")

    def __init__(self, ell, vq, r_grid, pilot, rhs, verdict, moch_pilot,
                 moch_rhs):
        self.ell = ell
        self.vq = vq
        self.r_grid = tuple(r_grid)
        self.pilot = pilot
        self.rhs = rhs
        self.verdict = verdict
        self.moch_pilot = moch_pilot
        self.moch_rhs = moch_rhs

    def as_dict(self):
        return {
            "ell": self.ell,
            "vq": str(self.vq),
            "r_grid": [str(r) for r in self.r_grid],
            "pilot_sum": str(self.pilot),
            "rhs": str(self.rhs),
            "verdict": self.verdict,
            "normalized_pilot": str(self.moch_pilot),
            "normalized_rhs": str(self.moch_rhs),
        }


def lift_theta_value(sp, j, vq):
    """[x_j] with v_F(x_j) = (1/2l)*vq*j^2*v_F(a), as a monomial times a
    root of unity from the coefficient field when one of full order exists."""
    vq = Rat(vq)
    if vq <= 0:
        raise DomainError("vq must be positive")
    j = int(j)
    if not 1 <= j <= sp.ell_star:
        raise DomainError("index out of range")
    field = sp.a.field
    target = xi_valuation(sp.ell, j, vq) * v_F(sp.a)
    mu_order = prime_to_p_part(field.p, 2 * sp.ell)
    if mu_order > 1 and (field.order() - 1) % mu_order == 0:
        zeta = field.root_of_unity(mu_order)
        coeff = zeta ** (j % mu_order)
    else:
        coeff = field.one()
    # the fractional power of the base coefficient has no canonical value in
    # a finite field, so the integer power j^2 keeps distinct bases distinct
    coeff = coeff * sp.a.terms[0][1] ** (j * j)
    return teich(HahnElt.monomial(field, target, coeff))


def pilot_sum(sp, vq, rho):
    """Sum over j of the exact norm exponents of the lifts."""
    total = Rat(0)
    for j in range(1, sp.ell_star + 1):
        ne = norm_exp(lift_theta_value(sp, j, vq), rho)
        if not ne.exact:
            raise ConsistencyError("lift norm must be exact")
        total += ne.value
    return total


def sup_with_tau(sp, vq, rho, tau_samples):
    """Exponent of the supremum over sampled tau tuples of |sum of perturbed
    lifts|: min over tuples of the summed exponents. The all-zero tuple is
    required, so the result never exceeds the pilot sum."""
    if tau_samples and isinstance(tau_samples[0], BElt):
        per_j = [list(tau_samples) for _ in range(sp.ell_star)]
    else:
        per_j = [list(ts) for ts in tau_samples]
    if len(per_j) != sp.ell_star:
        raise UsageError("need one sample list per index")
    for ts in per_j:
        if not any(t.is_exact_zero() for t in ts):
            raise UsageError("each sample list must contain 0")
    lifts = [lift_theta_value(sp, j, vq) for j in range(1, sp.ell_star + 1)]
    best = None
    for combo in itertools.product(*per_j):
        total = Rat(0)
        for lift, tau in zip(lifts, combo):
            z = lift if tau.is_exact_zero() else belt_add(lift, tau,
                                                          m_cap=PERTURB_M)
            ne = norm_exp(z, rho)
            if ne.value is INF:
                total = None
                break
            # lower-bound values are kept as-is: conservative direction
            total += ne.value
        if total is not None and (best is None or total < best):
            best = total
    if best is None:
        raise ConsistencyError("no finite sample tuple")
    return best


def lower_bound_check(ell, vq=1, r_grid=DEFAULT_R_GRID):
    """Compare the pilot sum at the distinguished low point against the
    target exponent ell_star*vq/(2*ell); verdict is the strict comparison."""
    vq = Rat(vq)
    if vq <= 0:
        raise DomainError("vq must be positive")
    sp = special_point_thm10(ell)
    sums = [pilot_sum(sp, vq, Rho(r)) for r in r_grid]
    if any(s != sums[0] for s in sums):
        raise ConsistencyError("pilot sum must not depend on the radius")
    lhs = sums[0]
    closed = Rat(1, 12) * (1 + Rat(1, sp.ell_star)) * vq
    if lhs != closed:
        raise ConsistencyError("pilot sum disagrees with closed form")
    rhs = Rat(sp.ell_star, 2 * ell) * vq
    verdict = lhs < rhs
    threshold = (2 * ell - 1) * (ell - 3) > 0
    if verdict != threshold:
        raise ConsistencyError("verdict disagrees with threshold form")
    return BoundReport(ell, vq, r_grid, lhs, rhs, verdict,
                       lhs / sp.ell_star, rhs / sp.ell_star)


def corollary_c_check(ell, vq=1):
    """Exponent e = pilot - rhs of the smallest constant c = p^(-e) with
    |sample| <= c * (target); e <= 0 certifies c >= 1."""
    report = lower_bound_check(ell, vq)
    return report.pilot - report.rhs


def sum_of_squares(n):
    """1^2 + ... + n^2 in closed form."""
    return n * (n + 1) * (2 * n + 1) // 6


# ---------------------------------------------------------------------------
# sample construction

class PointSample:
    __slots__ = ("point", "lifts", "taus", "perturbed")

    def __init__(self, point, lifts, taus, perturbed):
        self.point = point
        self.lifts = lifts
        self.taus = taus
        self.perturbed = perturbed


def _belt_key(z):
    # payload terms carry hashable field elements and exact exponents
    return (tuple((m, x.terms) for m, x in z.terms), z.tail is None)


class ThetaTildeSample:
    """Finite sample: ansatz points with per-index lifts and tau lists."""

    __slots__ = ("ell", "p", "vq", "field", "points", "tau_pool")

    def __init__(self, ell, p, vq, field, points, tau_pool):
        self.ell = ell
        self.p = p
        self.vq = vq
        self.field = field
        self.points = points
        self.tau_pool = tau_pool

    def elements(self):
        for tau in self.tau_pool:
            if not tau.is_exact_zero():
                yield tau
        for ps in self.points:
            for j0, lift in enumerate(ps.lifts):
                yield lift
                for z in ps.perturbed[j0]:
                    yield z

    def count(self):
        return len({_belt_key(z) for z in self.elements()})


def build_theta_tilde_sample(ell=5, p=2, vq=1, seed=0, n_generic=16,
                             taus_per_j=2, log_terms=6, carry_depth=3):
    """Seeded sample over the coefficient field F_{p^k} with k the least
    embedding degree for the prime-to-p torsion order."""
    vq = Rat(vq)
    k = embedding_degree(p, 2 * ell)
    field = Fq(p, k)
    rng = random.Random(seed)

    gen = field.multiplicative_generator()

    def random_nonzero():
        return gen ** rng.randrange(field.order() - 1)

    def random_base():
        e = Rat(rng.randrange(1, 5), rng.randrange(1, 7))
        return HahnElt.monomial(field, e, random_nonzero())

    points = [canonical_point(ell, field), special_point_thm10(ell, field)]
    for _ in range(n_generic):
        points.append(make_sigma_point(random_base(), ell))
    # closure sampling under the implemented automorphism generators
    points.append(act(TiltAut.frobenius(1), points[2]))
    points.append(act(TiltAut.coefficient_galois(1), points[3]))

    tau_pool = [BElt.zero(field)]
    for _ in range(4):
        eps = HahnElt.one(field) + HahnElt.monomial(
            field, Rat(rng.randrange(1, 4), rng.randrange(1, 5)),
            random_nonzero())
        tau_pool.append(log_teich(eps, terms=log_terms, n=carry_depth))

    out_points = []
    for sp in points:
        lifts = []
        taus = []
        perturbed = []
        for j in range(1, sp.ell_star + 1):
            lift = lift_theta_value(sp, j, vq)
            expected = scalar_valuation(
                sp, xi_valuation(ell, 1, vq) * v_F(sp.a), j)
            got = eta_valuation((v_F(sp.a), j), lift)
            if got != expected:
                raise ConsistencyError("lift valuation mismatch")
            lifts.append(lift)
            idxs = rng.sample(range(1, len(tau_pool)), taus_per_j)
            choices = [tau_pool[0]] + [tau_pool[i] for i in idxs]
            taus.append(choices)
            # perturbed sums are built once; iteration never re-adds
            perturbed.append([belt_add(lift, tau_pool[i], m_cap=PERTURB_M)
                              for i in idxs])
        out_points.append(PointSample(sp, lifts, taus, perturbed))
    return ThetaTildeSample(ell, p, vq, field, out_points, tau_pool)


def trivial_upper_bound_check(sample):
    """At radius 1 every sample element has norm at most 1: its exponent
    lower bound at r = 0 is >= 0."""
    checked = 0
    failures = []
    for z in sample.elements():
        checked += 1
        ne = norm_exp(z, Rho(0))
        if ne.value is INF:
            continue
        if ne.value < 0:
            failures.append({"element": z.as_dict(), "s": str(ne.value)})
    return {"ok": not failures, "checked": checked, "failures": failures}
