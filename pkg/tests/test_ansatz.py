"""Simultaneous valuation-scaling points: construction, profiles, the
automorphism action and the square transport law."""

import random
from fractions import Fraction

import pytest

from perfdesk.ansatz import (act, canonical_point, make_sigma_point,
                             scalar_valuation, special_point_thm10,
                             valuation_profile)
from perfdesk.errors import DomainError
from perfdesk.numkit import Fq, Rat
from perfdesk.tilt import HahnElt, TiltAut, v_F

F4 = Fq(2, 2)


def test_profile_is_square_multiples_of_base_valuation():
    rng = random.Random(12)
    gen = F4.multiplicative_generator()
    for ell in (5, 7):
        for _ in range(10):
            e = Rat(rng.randrange(1, 10), rng.randrange(1, 7))
            a = HahnElt.monomial(F4, Fraction(e),
                                 gen ** rng.randrange(3))
            sp = make_sigma_point(a, ell)
            prof = valuation_profile(sp)
            assert len(prof) == (ell - 1) // 2
            assert prof == [j * j * e for j in range(1, len(prof) + 1)]


def test_primitive_payloads_are_square_powers():
    a = HahnElt.monomial(F4, Fraction(1, 3))
    sp = make_sigma_point(a, 7)
    for j, power in sp.primitives:
        assert power == a ** (j * j)
        assert v_F(power) == j * j * Rat(1, 3)


def test_special_point_reaches_unit_valuation():
    sp = special_point_thm10(5)
    assert valuation_profile(sp) == [Rat(1, 4), Rat(1)]
    sp7 = special_point_thm10(7)
    assert valuation_profile(sp7)[-1] == 1


def test_canonical_point_profile():
    sp = canonical_point(5, F4)
    assert valuation_profile(sp) == [Rat(1), Rat(4)]
    assert sp.anchor_index == 1


def test_act_scales_or_preserves_profile():
    sp = make_sigma_point(HahnElt.monomial(F4, Fraction(2, 3)), 5)
    up = act(TiltAut.frobenius(1), sp)
    assert valuation_profile(up) == [2 * v for v in valuation_profile(sp)]
    fixed = act(TiltAut.coefficient_galois(1), sp)
    assert valuation_profile(fixed) == valuation_profile(sp)


def test_scalar_valuation_transport_square_law():
    sp = make_sigma_point(HahnElt.monomial(F4, Fraction(1, 2)), 7)
    eta = Rat(5, 3)
    vals = [scalar_valuation(sp, eta, j) for j in (1, 2, 3)]
    assert vals == [eta, 4 * eta, 9 * eta]
    with pytest.raises(DomainError):
        scalar_valuation(sp, eta, 4)


def test_construction_guards():
    with pytest.raises(DomainError):
        make_sigma_point(HahnElt.monomial(F4, Fraction(1, 2)), 9)
    with pytest.raises(DomainError):
        make_sigma_point(HahnElt.monomial(F4, Fraction(1, 2)), 2)
    with pytest.raises(DomainError):
        make_sigma_point(HahnElt.zero(F4), 5)
    # base must sit inside the maximal ideal: positive valuation
    with pytest.raises(DomainError):
        make_sigma_point(HahnElt.one(F4), 5)
    with pytest.raises(DomainError):
        make_sigma_point(HahnElt.monomial(F4, Fraction(-1, 2)), 5)
