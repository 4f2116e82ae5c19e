"""Exact scalar kit: rationals, primes, finite fields, fixed-precision
p-adic integers."""

import random

import pytest

from perfdesk.errors import DomainError, UsageError
from perfdesk.numkit import (Fq, INF, PadicInt, Rat, embedding_degree,
                             is_prime, prime_to_p_part, primes_upto, rat_min)


def test_is_prime_matches_sieve():
    limit = 500
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for n in range(2, limit + 1):
        if sieve[n]:
            for m in range(n * n, limit + 1, n):
                sieve[m] = False
    for n in range(limit + 1):
        assert is_prime(n) == sieve[n]
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_inf_dominates_every_rational():
    assert INF > Rat(10 ** 9)
    assert not INF < Rat(0)
    assert rat_min([INF, Rat(3, 7)]) == Rat(3, 7)
    assert rat_min([Rat(-1), Rat(2)]) == Rat(-1)
    assert rat_min([INF, INF]) is INF
    assert rat_min([]) is INF


def test_embedding_degree_is_multiplicative_order():
    for p in (2, 3, 5, 7):
        for m in (3, 4, 5, 7, 9, 10, 11, 14, 22):
            if m % p == 0:
                continue
            k = embedding_degree(p, m)
            assert pow(p, k, m) == 1
            for d in range(1, k):
                assert pow(p, d, m) != 1


def test_prime_to_p_part_strips_p_only():
    assert prime_to_p_part(2, 40) == 5
    assert prime_to_p_part(3, 40) == 40
    assert prime_to_p_part(5, 50) == 2


def test_fq_field_axioms_random():
    rng = random.Random(11)
    for p, k in ((2, 3), (3, 2), (5, 2), (7, 1)):
        field = Fq(p, k)
        elems = list(field.elements())
        assert len(elems) == p ** k
        for _ in range(30):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            if not a.is_zero():
                assert a * a.inverse() == field.one()


def test_fq_generator_order_and_frobenius():
    field = Fq(3, 2)
    g = field.multiplicative_generator()
    n = field.order() - 1
    powers = {g ** i for i in range(n)}
    assert len(powers) == n
    # x -> x^p is additive in characteristic p
    rng = random.Random(5)
    elems = list(field.elements())
    for _ in range(20):
        a, b = rng.choice(elems), rng.choice(elems)
        assert (a + b) ** 3 == a ** 3 + b ** 3
        assert a.frobenius(1) == a ** 3


def test_fq_zero_inverse_raises():
    field = Fq(2, 2)
    with pytest.raises(DomainError):
        field.zero().inverse()


def test_padic_ring_laws_mod_precision():
    rng = random.Random(7)
    p, prec = 3, 5
    mod = p ** prec
    for _ in range(50):
        a, b = rng.randrange(mod), rng.randrange(mod)
        x, y = PadicInt(p, prec, a), PadicInt(p, prec, b)
        assert (x + y).residue == (a + b) % mod
        assert (x * y).residue == (a * b) % mod
        assert (x - y).residue == (a - b) % mod
        assert (-x).residue == (-a) % mod


def test_padic_valuation_and_inverse():
    x = PadicInt(5, 6, 75)
    assert x.valuation() == 2
    assert PadicInt(5, 6, 0).valuation() is INF
    u = PadicInt(5, 6, 7)
    assert (u * u.unit_inverse()).residue == 1
    with pytest.raises(DomainError):
        PadicInt(5, 6, 10).unit_inverse()
    assert x.divide_exact_p_power(2).residue == 3
    with pytest.raises(DomainError):
        PadicInt(5, 6, 7).divide_exact_p_power(1)


def test_padic_precision_tracking():
    x = PadicInt(2, 6, 11)
    y = PadicInt(2, 4, 3)
    assert (x + y).prec == 4
    assert (x * y).prec == 4
    with pytest.raises(UsageError):
        x + PadicInt(3, 6, 1)
