"""Exponent comparison for the size bound: pilot sums, tau-perturbed
suprema, and the sampled lift sets."""

import random
from fractions import Fraction

import pytest

from perfdesk.ansatz import canonical_point, make_sigma_point
from perfdesk.bring import BElt, Rho, norm_exp
from perfdesk.errors import DomainError, UsageError
from perfdesk.numkit import Fq, Rat
from perfdesk.pilot import (build_theta_tilde_sample, corollary_c_check,
                            lift_theta_value, lower_bound_check, pilot_sum,
                            sum_of_squares, sup_with_tau,
                            trivial_upper_bound_check)
from perfdesk.tate_theta import xi_valuation
from perfdesk.tilt import HahnElt, v_F

F4 = Fq(2, 2)


def test_lower_bound_closed_forms():
    r5 = lower_bound_check(5)
    assert (r5.pilot, r5.rhs, r5.verdict) == (Rat(1, 8), Rat(1, 5), True)
    r7 = lower_bound_check(7)
    assert (r7.pilot, r7.rhs, r7.verdict) == (Rat(1, 9), Rat(3, 14), True)
    r3 = lower_bound_check(3)
    assert r3.pilot == r3.rhs == Rat(1, 6)
    assert r3.verdict is False


def test_lower_bound_scales_linearly_in_vq():
    base = lower_bound_check(5, Rat(1))
    doubled = lower_bound_check(5, Rat(2))
    assert doubled.pilot == 2 * base.pilot
    assert doubled.rhs == 2 * base.rhs
    assert doubled.verdict is True
    keys = set(base.as_dict())
    assert {"ell", "pilot_sum", "rhs", "verdict"} <= keys


def test_corollary_exponent_nonpositive_with_equality_at_three():
    assert corollary_c_check(5) == Rat(1, 8) - Rat(1, 5)
    assert corollary_c_check(3) == 0
    for ell in (5, 7, 11, 13):
        assert corollary_c_check(ell) < 0


def test_sum_of_squares_closed_form():
    for n in range(1, 30):
        assert sum_of_squares(n) == sum(k * k for k in range(1, n + 1))


def test_lift_valuation_follows_value_ratio_scaling():
    sp = make_sigma_point(HahnElt.monomial(F4, Fraction(1, 2)), 5)
    for j in (1, 2):
        lift = lift_theta_value(sp, j, Rat(1))
        ne = norm_exp(lift, Rho(1))
        assert ne.exact
        assert ne.value == xi_valuation(5, j, Rat(1)) * v_F(sp.a)
    with pytest.raises(DomainError):
        lift_theta_value(sp, 3, Rat(1))
    with pytest.raises(DomainError):
        lift_theta_value(sp, 1, Rat(0))


def test_pilot_sum_is_sum_of_lift_exponents():
    sp = canonical_point(5, F4)
    want = sum(xi_valuation(5, j, Rat(1)) for j in (1, 2))
    for r in (Rat(2), Rat(1, 2)):
        assert pilot_sum(sp, Rat(1), Rho(r)) == want


def test_sup_with_tau_zero_tuple_gives_pilot():
    sp = canonical_point(5, F4)
    taus = [BElt.zero(F4)]
    assert sup_with_tau(sp, Rat(1), Rho(1), taus) \
        == pilot_sum(sp, Rat(1), Rho(1))
    with pytest.raises(UsageError):
        sup_with_tau(sp, Rat(1), Rho(1), [[BElt.zero(F4)]])


def test_sample_structure_small():
    sample = build_theta_tilde_sample(ell=5, p=2, vq=1, seed=4, n_generic=3,
                                      taus_per_j=1, log_terms=4,
                                      carry_depth=2)
    elems = list(sample.elements())
    assert len(elems) >= 20
    rep = trivial_upper_bound_check(sample)
    assert rep["ok"] and rep["checked"] == len(elems)
    # deterministic for a fixed seed
    again = build_theta_tilde_sample(ell=5, p=2, vq=1, seed=4, n_generic=3,
                                     taus_per_j=1, log_terms=4,
                                     carry_depth=2)
    assert sample.count() == again.count()
