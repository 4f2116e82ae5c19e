"""Formal-group side: truncated rational series, the Artin-Hasse
exponential, fixed-precision p-adic logarithms and the transport diagram."""

import random
from fractions import Fraction
from math import comb, factorial

import pytest

from perfdesk.errors import ConsistencyError, DomainError, UsageError
from perfdesk.loglink import (PadicSeries, artin_hasse,
                              artin_hasse_integral_degree, diagram_check,
                              formal_group_law, log_series, lubin_tate_log,
                              padic_log_unit, series_compositional_inverse)
from perfdesk.numkit import PadicInt, Rat


def test_series_ring_laws_match_dict_oracle():
    rng = random.Random(14)
    trunc = 10
    for _ in range(15):
        a = {k: Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
             for k in range(rng.randrange(1, 6))}
        b = {k: Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
             for k in range(rng.randrange(1, 6))}
        x = PadicSeries(3, trunc, a)
        y = PadicSeries(3, trunc, b)
        want = {}
        for i, ci in a.items():
            for j, cj in b.items():
                if i + j <= trunc:
                    want[i + j] = want.get(i + j, Fraction(0)) + ci * cj
        want = {k: c for k, c in want.items() if c}
        assert (x * y).coeffs == want
        total = dict(a)
        for k, c in b.items():
            total[k] = total.get(k, Fraction(0)) + c
        assert (x + y).coeffs == {k: c for k, c in total.items() if c}


def test_series_compose_and_guards():
    f = PadicSeries(2, 8, {1: Rat(1), 2: Rat(1)})
    g = PadicSeries(2, 8, {1: Rat(2)})
    assert f.compose(g).coeffs == {1: Rat(2), 2: Rat(4)}
    with pytest.raises(DomainError):
        f.compose(PadicSeries(2, 8, {0: Rat(1), 1: Rat(1)}))
    with pytest.raises(DomainError):
        PadicSeries(4, 8, {})
    with pytest.raises(UsageError):
        f + PadicSeries(3, 8, {1: Rat(1)})


def test_lubin_tate_log_supported_on_p_powers():
    lg = lubin_tate_log(3, 100)
    assert lg.coeffs == {1: Rat(1), 3: Rat(1, 3), 9: Rat(1, 9),
                         27: Rat(1, 27), 81: Rat(1, 81)}
    ls = log_series(5, 6)
    assert ls.coeffs == {1: Rat(1), 2: Rat(-1, 2), 3: Rat(1, 3),
                         4: Rat(-1, 4), 5: Rat(1, 5), 6: Rat(-1, 6)}


def test_compositional_inverse_catalan():
    # the inverse of T - T^2 generates the Catalan numbers
    f = PadicSeries(2, 9, {1: Rat(1), 2: Rat(-1)})
    g = series_compositional_inverse(f)
    for k in range(1, 10):
        assert g.coeff(k) == comb(2 * (k - 1), k - 1) // k
    assert f.compose(g).coeffs == {1: Rat(1)}
    assert g.compose(f).coeffs == {1: Rat(1)}
    with pytest.raises(DomainError):
        series_compositional_inverse(PadicSeries(2, 9, {1: Rat(2)}))


def test_artin_hasse_matches_direct_exponential():
    trunc = 12
    for p in (2, 3):
        ah = artin_hasse(p, trunc)
        # direct route: exp(sum T^(p^i)/p^i) via plain series powers
        s = {}
        q = 1
        while q <= trunc:
            s[q] = Fraction(1, q)
            q *= p
        acc = {0: Fraction(1)}
        power = {0: Fraction(1)}
        for k in range(1, trunc + 1):
            nxt = {}
            for i, ci in power.items():
                for j, cj in s.items():
                    if i + j <= trunc:
                        nxt[i + j] = nxt.get(i + j, Fraction(0)) + ci * cj
            power = nxt
            inv_fact = Fraction(1, factorial(k))
            for e, c in power.items():
                acc[e] = acc.get(e, Fraction(0)) + c * inv_fact
        for k in range(trunc + 1):
            assert ah.coeff(k) == acc.get(k, Fraction(0))


def test_artin_hasse_integrality():
    for p in (2, 3, 5):
        degree = p ** 3
        assert artin_hasse_integral_degree(p, degree) == degree
        ah = artin_hasse(p, degree)
        for c in ah.coeffs.values():
            assert c.denominator % p != 0


def test_padic_log_values_and_homomorphism():
    u = PadicInt(5, 8, 6)
    assert padic_log_unit(u, 5).valuation() == 1
    rng = random.Random(27)
    for p in (3, 5):
        step = p
        prec = 6
        for _ in range(10):
            a = 1 + step * rng.randrange(1, p ** 4)
            b = 1 + step * rng.randrange(1, p ** 4)
            ua, ub = PadicInt(p, prec, a), PadicInt(p, prec, b)
            assert padic_log_unit(ua * ub, prec) \
                == padic_log_unit(ua, prec) + padic_log_unit(ub, prec)
    # power rule through the homomorphism
    u = PadicInt(3, 7, 4)
    upow = PadicInt(3, 7, pow(4, 3, 3 ** 7))
    lg = padic_log_unit(u, 5)
    assert padic_log_unit(upow, 5).residue \
        == (3 * lg.residue) % 3 ** 5


def test_padic_log_guards():
    with pytest.raises(DomainError):
        padic_log_unit(PadicInt(5, 6, 10), 4)
    # at p = 2 the series needs v(u - 1) >= 2
    with pytest.raises(DomainError):
        padic_log_unit(PadicInt(2, 6, 3), 4)
    assert padic_log_unit(PadicInt(2, 8, 5), 5).valuation() == 2
    with pytest.raises(UsageError):
        padic_log_unit(PadicInt(2, 3, 5), 5)


def test_group_law_axioms_truncated():
    fg = formal_group_law(2, 6)
    # neutral element: F(X, 0) = X and F(0, Y) = Y
    assert {k: c for k, c in fg.items() if k[1] == 0} == {(1, 0): Rat(1)}
    assert {k: c for k, c in fg.items() if k[0] == 0} == {(0, 1): Rat(1)}
    # commutativity
    assert all(fg.get((j, i)) == c for (i, j), c in fg.items())


def test_diagram_check_reports():
    rep = diagram_check(2)
    assert rep["trunc"] == 8
    assert rep["log_of_artin_hasse_zero"] and rep["additivity_zero"]
    assert rep["group_law_linear_part"]
    assert rep["valuation_scaling"]
    assert rep["profile_ratio"] == rep["valuation_ratio"] == "4"
    assert rep["witness"] is None
    with pytest.raises(DomainError):
        diagram_check(2, 1)
