"""Hahn series with rational exponents over finite fields, and the tilt
automorphism group acting on them."""

import random
from fractions import Fraction

import pytest

from perfdesk.errors import DomainError, PrecisionError, UsageError
from perfdesk.numkit import Fq, INF
from perfdesk.tilt import (HahnElt, TiltAut, apply_aut, frobenius,
                           monomial_root, v_F)

F4 = Fq(2, 2)
F9 = Fq(3, 2)


def _rand_elt(rng, field, n_terms, cap=None):
    terms = [(Fraction(rng.randrange(-6, 12), rng.randrange(1, 5)),
              rng.choice(list(field.elements())))
             for _ in range(n_terms)]
    return HahnElt(field, terms, cap)


def test_construction_normalizes_terms():
    g = F4.multiplicative_generator()
    x = HahnElt(F4, ((Fraction(2), g), (Fraction(1), F4.one()),
                     (Fraction(2), g)))
    # duplicates at the same exponent merge; char-2 doubling cancels
    assert x.terms == ((Fraction(1), F4.one()),)
    y = HahnElt(F4, ((Fraction(3), F4.zero()),))
    assert y.is_zero()
    capped = HahnElt(F4, ((Fraction(1), g), (Fraction(5), g)), cap=4)
    assert capped.terms == ((Fraction(1), g),)
    assert capped.cap == 4


def test_add_mul_match_dict_oracle():
    rng = random.Random(21)
    for field in (F4, F9):
        for _ in range(20):
            x = _rand_elt(rng, field, 3)
            y = _rand_elt(rng, field, 3)
            want_add = {}
            for e, c in x.terms + y.terms:
                want_add[e] = want_add.get(e, field.zero()) + c
            want_add = {e: c for e, c in want_add.items() if not c.is_zero()}
            got = x + y
            assert {e: c for e, c in got.terms} == want_add
            want_mul = {}
            for ex, cx in x.terms:
                for ey, cy in y.terms:
                    e = ex + ey
                    want_mul[e] = want_mul.get(e, field.zero()) + cx * cy
            want_mul = {e: c for e, c in want_mul.items() if not c.is_zero()}
            got = x * y
            assert {e: c for e, c in got.terms} == want_mul


def test_cap_propagation():
    g = F4.multiplicative_generator()
    x = HahnElt(F4, ((Fraction(1), g),), cap=5)
    y = HahnElt(F4, ((Fraction(2), F4.one()),), cap=3)
    assert (x + y).cap == 3
    # product precision: each cap shifts by the other factor's valuation
    assert (x * y).cap == min(5 + 2, 3 + 1)
    exact = HahnElt.monomial(F4, 2)
    assert (exact * exact).cap is None
    assert (x * HahnElt.zero(F4)).is_zero()


def test_valuation_and_leading():
    x = HahnElt(F9, ((Fraction(5, 3), F9.one()), (Fraction(1, 2), F9.one())))
    assert v_F(x) == Fraction(1, 2)
    assert x.leading() == (Fraction(1, 2), F9.one())
    assert v_F(HahnElt.zero(F9)) is INF
    with pytest.raises(PrecisionError):
        v_F(HahnElt(F9, (), cap=2))
    assert HahnElt(F9, (), cap=2).v_lower() == 2


def test_pow_agrees_with_repeated_product_and_frobenius():
    rng = random.Random(4)
    for field in (F4, F9):
        p = field.p
        for _ in range(10):
            x = _rand_elt(rng, field, 2)
            acc = HahnElt.one(field)
            for _ in range(6):
                acc = acc * x
            assert x ** 6 == acc
            # freshman's dream: p-th power is the Frobenius
            y = _rand_elt(rng, field, 2)
            assert (x + y) ** p == frobenius(x + y, 1)
    with pytest.raises(DomainError):
        HahnElt.one(F4) ** (-1)


def test_frobenius_scales_exponents_and_coefficients():
    g = F9.multiplicative_generator()
    x = HahnElt(F9, ((Fraction(1, 2), g),), cap=4)
    up = frobenius(x, 1)
    assert up.terms == ((Fraction(3, 2), g ** 3),)
    assert up.cap == 12
    # negative powers invert exactly: the field is perfect
    assert frobenius(up, -1) == x


def test_monomial_root_validation():
    x = HahnElt.monomial(F4, Fraction(3, 2))
    assert v_F(monomial_root(x, Fraction(1, 3))) == Fraction(1, 2)
    with pytest.raises(DomainError):
        monomial_root(x, Fraction(-1))
    g = F4.multiplicative_generator()
    with pytest.raises(DomainError):
        monomial_root(HahnElt.monomial(F4, 1, g), Fraction(1, 2))
    with pytest.raises(DomainError):
        monomial_root(HahnElt.one(F4) + x, Fraction(1, 2))


def test_automorphisms_compose_and_act():
    rng = random.Random(8)
    x = _rand_elt(rng, F9, 3)
    frob = TiltAut.frobenius(1)
    gal = TiltAut.coefficient_galois(1)
    assert apply_aut(frob, x) == frobenius(x, 1)
    fixed = apply_aut(gal, x)
    assert [e for e, _ in fixed.terms] == [e for e, _ in x.terms]
    both = frob.compose(gal)
    assert apply_aut(both, x) == apply_aut(frob, apply_aut(gal, x))
    assert TiltAut.identity().is_identity_on(F9)
    assert TiltAut.coefficient_galois(2).is_identity_on(F9)
    assert not gal.is_identity_on(F9)


def test_field_mismatch_rejected():
    with pytest.raises(UsageError):
        HahnElt.one(F4) + HahnElt.one(F9)
