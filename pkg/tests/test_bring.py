"""Period-ring elements: Teichmuller lifts, certified tail bounds, norm
exponents, carries, the 1-unit logarithm and the Frobenius eigencheck."""

import random
from fractions import Fraction

import pytest

from perfdesk.bring import (BElt, NormExp, Rho, belt_add, belt_mul,
                            eta_valuation, log_teich, norm_exp,
                            phi_eigen_check, phi_eigen_residual, teich,
                            teich_minus_one)
from perfdesk.errors import DomainError
from perfdesk.numkit import Fq, INF, Rat
from perfdesk.tilt import HahnElt, v_F

F2 = Fq(2, 1)
F4 = Fq(2, 2)
F25 = Fq(5, 2)

R_GRID = (Rat(2), Rat(1), Rat(1, 2), Rat(1, 4))


def _mono(field, e, coeff=None):
    return HahnElt.monomial(field, Fraction(e), coeff)


def test_rho_rejects_negative_exponent():
    with pytest.raises(DomainError):
        Rho(-1)
    assert Rho(0).r == 0


def test_teich_norm_is_valuation_at_every_radius():
    rng = random.Random(6)
    for field in (F4, F25):
        gen = field.multiplicative_generator()
        for _ in range(10):
            e = Rat(rng.randrange(1, 9), rng.randrange(1, 6))
            x = _mono(field, e, gen ** rng.randrange(field.order() - 1))
            if rng.randrange(2):
                x = x + _mono(field, e + 1)
            for r in R_GRID:
                assert norm_exp(teich(x), Rho(r)) == NormExp(v_F(x), True)


def test_zero_element_has_infinite_exponent():
    ne = norm_exp(BElt.zero(F4), Rho(1))
    assert ne.value is INF and ne.exact


def test_mul_of_lifts_is_lift_of_product():
    rng = random.Random(13)
    gen = F25.multiplicative_generator()
    for _ in range(10):
        x = _mono(F25, Rat(rng.randrange(1, 7), 3),
                  gen ** rng.randrange(24))
        y = _mono(F25, Rat(rng.randrange(1, 7), 2),
                  gen ** rng.randrange(24))
        prod = belt_mul(teich(x), teich(y))
        assert prod.tail is None
        assert prod.terms == teich(x * y).terms


def test_add_obeys_ultrametric_bound():
    rng = random.Random(19)
    gen = F4.multiplicative_generator()
    for _ in range(8):
        x = _mono(F4, Rat(rng.randrange(1, 9), 4),
                  gen ** rng.randrange(3))
        y = _mono(F4, Rat(rng.randrange(1, 9), 4),
                  gen ** rng.randrange(3))
        z = belt_add(teich(x), teich(y))
        for r in R_GRID:
            bound = min(v_F(x), v_F(y))
            ne = norm_exp(z, Rho(r))
            assert ne.value >= bound
            # strict valuations: no cancellation, the bound is attained
            if v_F(x) != v_F(y):
                assert ne.value == bound and ne.exact


def test_add_cancels_to_deeper_terms():
    # char 2: [x] + [x] carries into p*[x^(1/2)]^2-shape terms, so the
    # leading exponent moves up by at least min(r, v)
    x = _mono(F4, Rat(1, 2))
    z = belt_add(teich(x), teich(x))
    ne = norm_exp(z, Rho(1))
    assert ne.value > Rat(1, 2)


def test_log_of_one_is_zero():
    one = HahnElt.one(F4)
    assert teich_minus_one(one).is_exact_zero()
    assert log_teich(one).is_exact_zero()


def test_log_leading_term_matches_unit_offset():
    # log(1 + m) = m - m^2/2 + ... : the p^0 slot carries [m] itself and
    # dominates the norm at radius exponent 1
    eps = HahnElt.one(F4) + _mono(F4, Rat(3, 2))
    tau = log_teich(eps, terms=6, n=3)
    lead = [x for m, x in tau.terms if m == 0]
    assert lead and v_F(lead[0]) == Rat(3, 2)
    ne = norm_exp(tau, Rho(1))
    assert ne.exact and ne.value == Rat(3, 2)
    # at every radius the reported exponent is the slot minimum when exact
    for r in R_GRID:
        ne = norm_exp(tau, Rho(r))
        slot_min = min(m * r + v_F(x) for m, x in tau.terms)
        assert ne.value <= slot_min
        if ne.exact:
            assert ne.value == slot_min


def test_phi_eigen_residual_and_check():
    rng = random.Random(3)
    gen = F4.multiplicative_generator()
    for _ in range(3):
        e = Rat(rng.randrange(1, 4), rng.randrange(1, 4))
        eps = HahnElt.one(F4) + _mono(F4, e, gen ** rng.randrange(3))
        assert phi_eigen_check(eps, R_GRID, terms=6, n=3)
        res = phi_eigen_residual(eps, terms=6, n=3)
        # the residual element never has a determinate nonzero leading norm
        for r in R_GRID:
            ne = norm_exp(res, Rho(r))
            assert not ne.exact or ne.value is INF


def test_eta_valuation_square_law_on_lifts():
    x = _mono(F2, Rat(1, 2))
    for j in (1, 2, 3):
        got = eta_valuation((v_F(x), j), teich(x ** (j * j)))
        assert got == j * j * Rat(1, 2)


def test_capped_add_keeps_sound_lower_bound():
    # windowed assembly may coarsen the certificate but never raises the
    # reported exponent above the uncapped value
    x = _mono(F4, Rat(1, 2))
    y = _mono(F4, Rat(1, 3))
    eps = HahnElt.one(F4) + x
    tau = log_teich(eps, terms=5, n=2)
    full = belt_add(teich(y), tau)
    capped = belt_add(teich(y), tau, m_cap=3)
    for r in R_GRID:
        ne_full = norm_exp(full, Rho(r))
        ne_capped = norm_exp(capped, Rho(r))
        assert ne_capped.value <= ne_full.value
