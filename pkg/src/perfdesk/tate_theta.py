"""Tate curve data: discriminant product formula, the reduced theta series,
quasi-periodicity, and the torsion value ratios xi_j.

All series live at level 2l in t, where t^{2l} plays the Tate parameter q.
A ThetaSeries carries a half-period scale: the series with scale m is
sum_n (-1)^n t^{m n(n+1)} u^{2n+1}, whose quasi-periodicity shift is t^m.
scale = l is the curve with parameter q = (t^l)^2; scale = 1 is the cover
with parameter t^2 on which the 2l-torsion points t^j zeta_l sit as exact
half-period shifts, which is what the value ratios require.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .cyclo_series import CycloInt, CycloLaurent, cl_mul
from .errors import ConsistencyError, DomainError, PrecisionError
from .numkit import is_prime


@dataclass(frozen=True)
class TorsionPoint:
    """u = zeta_{2l}^alpha * t^beta; alpha is read mod 2l at evaluation."""

    alpha: int
    beta: int

    def inverse(self):
        return TorsionPoint(-self.alpha, -self.beta)


def zeta_ell_point():
    return TorsionPoint(2, 0)


def zeta_2ell_point():
    return TorsionPoint(1, 0)


class ThetaSeries:
    """Reduced theta at level 2l: coefficient of u^{2n+1} is
    (-1)^n t^{scale * n(n+1)}."""

    def __init__(self, ell, trunc=None, scale=None):
        if not is_prime(ell) or ell % 2 == 0:
            raise DomainError("ell must be an odd prime")
        self.ell = ell
        self.level = 2 * ell
        self.scale = ell if scale is None else scale
        if self.scale < 1:
            raise DomainError("scale must be >= 1")
        self.trunc = 24 * ell if trunc is None else trunc
        if self.trunc < 2 * self.scale:
            raise DomainError("truncation too small to hold any theta term")
        self.n_max = self._n_bound(0)
        self.u_terms = {}
        for n in range(-self.n_max, self.n_max + 1):
            e = self.scale * n * (n + 1)
            if e < self.trunc:
                sign = -1 if n % 2 else 1
                self.u_terms[2 * n + 1] = CycloLaurent.monomial(
                    self.level, e, sign, self.trunc)

    def _n_bound(self, beta):
        # all n beyond the bound have scale*n(n+1) + beta*(2n+1) >= trunc
        b = self.scale + 2 * abs(beta)
        return (b + isqrt(b * b + 4 * self.scale * self.trunc)) // (2 * self.scale) + 2


def theta_eval(theta, point):
    """Evaluate at u = zeta_{2l}^alpha t^beta as a truncated CycloLaurent."""
    level = theta.level
    trunc = theta.trunc
    bound = theta._n_bound(point.beta)
    terms = {}
    for n in range(-bound, bound + 1):
        e = theta.scale * n * (n + 1) + point.beta * (2 * n + 1)
        if e >= trunc:
            continue
        c = CycloInt.zeta_pow(level, point.alpha * (2 * n + 1))
        if n % 2:
            c = -c
        if e in terms:
            terms[e] = terms[e] + c
        else:
            terms[e] = c
    return CycloLaurent(level, terms, trunc)


def quasi_periodicity_residual(theta, j, point):
    """theta(S^j u) - (-1)^j S^{-j^2} u^{-2j} theta(u), S the half-period
    t^scale; contract: identically zero up to truncation."""
    if abs(j) > 4:
        raise DomainError("|j| <= 4 at desk scale")
    shifted = theta_eval(theta, TorsionPoint(point.alpha, point.beta + j * theta.scale))
    pref_exp = -j * j * theta.scale - 2 * j * point.beta
    pref_coeff = CycloInt.zeta_pow(theta.level, -2 * j * point.alpha)
    if j % 2:
        pref_coeff = -pref_coeff
    prefactor = CycloLaurent.monomial(theta.level, pref_exp, pref_coeff)
    residual = shifted - cl_mul(prefactor, theta_eval(theta, point))
    if residual.trunc is not None and residual.trunc <= 0:
        raise PrecisionError("residual window is empty at this truncation")
    return residual


def theta_value_ratio(ell, j, trunc=None):
    """The ratio theta(t^j zeta_l)/theta(zeta_l) on the half-period-1 cover,
    established by exact series division and returned as the monomial
    (-1)^j t^{-j^2} zeta_l^{-2j}."""
    if not is_prime(ell) or ell % 2 == 0:
        raise DomainError("ell must be an odd prime")
    ell_star = (ell - 1) // 2
    if j == 0:
        return CycloLaurent.one(2 * ell)
    if not 1 <= j <= ell_star:
        raise DomainError("need 1 <= j <= (ell-1)/2")
    theta = ThetaSeries(ell, trunc=trunc or 8 * ell, scale=1)
    num = theta_eval(theta, TorsionPoint(2, j))
    den = theta_eval(theta, TorsionPoint(2, 0))
    sign = -1 if j % 2 else 1
    mono_coeff = CycloInt.zeta_pow(2 * ell, -4 * j) * sign  # zeta_l^{-2j}
    monomial = CycloLaurent.monomial(2 * ell, -j * j, mono_coeff)
    # division check by cross-multiplication: num = monomial * den exactly,
    # which pins the quotient in the Laurent domain over Z[zeta_{2l}]
    residual = num - cl_mul(monomial, den)
    if not residual.is_zero():
        raise ConsistencyError("value ratio deviates from the closed form")
    e_den, c_den = den.leading()
    e_num, c_num = num.leading()
    if e_num != e_den - j * j or c_num != mono_coeff * c_den:
        raise ConsistencyError("leading terms inconsistent with the monomial")
    return monomial


def xi_valuation(ell, j, vq):
    """v(xi_j) = (j^2/2l) v(q); xi_j is the reciprocal of the stored ratio."""
    vq = Fraction(vq)
    if vq <= 0:
        raise DomainError("v(q) must be positive")
    return Fraction(j * j, 2 * ell) * vq


def discriminant_series(order, ell):
    """q prod_{n>=1} (1-q^n)^24 truncated at q-order `order`, as a
    CycloLaurent in t with exponents 2l*k."""
    if order < 1:
        raise DomainError("order must be >= 1")
    # binomial expansion of each factor, truncated at q^order
    acc = [0] * (order + 1)
    acc[0] = 1
    for n in range(1, order + 1):
        factor = {}
        for i in range(0, order // n + 1):
            factor[n * i] = (-1) ** i * comb(24, i)
        new = [0] * (order + 1)
        for e, c in enumerate(acc):
            if c == 0:
                continue
            for fe, fc in factor.items():
                if e + fe <= order:
                    new[e + fe] += c * fc
        acc = new
    level = 2 * ell
    terms = {}
    for k in range(order):
        c = acc[k]
        if c:
            terms[level * (k + 1)] = CycloInt.from_int(level, c)
    return CycloLaurent(level, terms, level * (order + 1))


def theta_value_table(ell, vq):
    """Rows (j, monomial render, residual-zero flag, v(xi_j)) for reports."""
    rows = []
    for j in range(1, (ell - 1) // 2 + 1):
        try:
            mono = theta_value_ratio(ell, j)
            ok = True
            rendered = mono.render()
        except ConsistencyError:
            ok = False
            rendered = "none"
        rows.append({
            "j": j,
            "ratio_monomial": rendered,
            "residual_zero": ok,
            "xi_valuation": str(xi_valuation(ell, j, vq)),
        })
    return rows
