"""Formal-group series toolkit: the p-typical logarithm, its compositional
inverse, the Artin-Hasse series, and the p-adic logarithm on 1-units.

Coefficients stay exact rationals until a final reduction mod p^N, so every
identity check below is a comparison of Fractions with no rounding anywhere.
The degree-level checks feed the valuation-level link: a 1-unit of the tilt
is pushed through log of its Teichmuller lift and its image valuation must
scale across the tower exactly like the valuation of p does.
"""

from .ansatz import make_sigma_point, scalar_valuation, valuation_profile
from .bring import eta_valuation, log_teich
from .errors import ConsistencyError, DomainError, UsageError
from .numkit import Fq, INF, PadicInt, Rat, is_prime
from .tilt import HahnElt, v_F

R_ZERO = Rat(0)
R_ONE = Rat(1)


class PadicSeries:
    """Truncated power series over Q with a fixed reference prime."""

    __slots__ = ("p", "trunc", "coeffs")

    def __init__(self, p, trunc, coeffs):
        if not is_prime(p):
            raise DomainError("reference prime must be prime")
        trunc = int(trunc)
        if trunc < 0:
            raise DomainError("truncation degree must be >= 0")
        clean = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for k, c in items:
            k = int(k)
            if k < 0:
                raise DomainError("negative degree")
            if k > trunc:
                continue
            c = Rat(c)
            if c:
                clean[k] = c
        self.p = p
        self.trunc = trunc
        self.coeffs = clean

    @classmethod
    def zero(cls, p, trunc):
        return cls(p, trunc, {})

    @classmethod
    def one(cls, p, trunc):
        return cls(p, trunc, {0: R_ONE})

    @classmethod
    def variable(cls, p, trunc):
        return cls(p, trunc, {1: R_ONE})

    def coeff(self, k):
        return self.coeffs.get(int(k), R_ZERO)

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, PadicSeries):
            raise UsageError("expected PadicSeries")
        if other.p != self.p:
            raise UsageError("prime mismatch")

    def __add__(self, other):
        self._check(other)
        trunc = min(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, R_ZERO) + c
        return PadicSeries(self.p, trunc, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PadicSeries(self.p, self.trunc,
                           {k: -c for k, c in self.coeffs.items()})

    def scale(self, c):
        c = Rat(c)
        return PadicSeries(self.p, self.trunc,
                           {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        self._check(other)
        trunc = min(self.trunc, other.trunc)
        out = {}
        for i, a in self.coeffs.items():
            if i > trunc:
                continue
            for j, b in other.coeffs.items():
                k = i + j
                if k > trunc:
                    continue
                out[k] = out.get(k, R_ZERO) + a * b
        return PadicSeries(self.p, trunc, out)

    def compose(self, inner):
        """Substitute inner for the variable; inner must vanish at 0 so the
        truncated result is determined."""
        self._check(inner)
        if inner.coeff(0):
            raise DomainError("inner series must have zero constant term")
        trunc = min(self.trunc, inner.trunc)
        acc = {0: self.coeff(0)} if self.coeff(0) else {}
        out = PadicSeries(self.p, trunc, acc)
        power = PadicSeries.one(self.p, trunc)
        for k in range(1, trunc + 1):
            power = power * inner
            if power.is_zero():
                break
            c = self.coeff(k)
            if c:
                out = out + power.scale(c)
        return out

    def truncate(self, trunc):
        return PadicSeries(self.p, min(self.trunc, int(trunc)), self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, PadicSeries) and other.p == self.p
                and other.trunc == self.trunc and other.coeffs == self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join("%s*T^%d" % (c, k)
                              for k, c in sorted(self.coeffs.items()))
        return "PadicSeries(p=%d, D=%d, %s)" % (self.p, self.trunc, body)

    def as_dict(self):
        return {
            "p": self.p,
            "trunc": self.trunc,
            "coeffs": {str(k): str(c)
                       for k, c in sorted(self.coeffs.items())},
        }


def lubin_tate_log(p, trunc):
    """Sum of T^(p^n)/p^n over p^n <= trunc."""
    if trunc < 1:
        raise DomainError("truncation degree must be >= 1")
    coeffs = {}
    q = 1
    scale = R_ONE
    while q <= trunc:
        coeffs[q] = scale
        q *= p
        scale /= p
    return PadicSeries(p, trunc, coeffs)


def log_series(p, trunc):
    """Alternating series for log(1 + T)."""
    if trunc < 1:
        raise DomainError("truncation degree must be >= 1")
    return PadicSeries(p, trunc,
                       {k: Rat(1 if k % 2 else -1, k)
                        for k in range(1, trunc + 1)})


def series_compositional_inverse(f):
    """g with f(g(T)) = T up to the shared truncation, by triangular
    elimination of the lowest surviving residual degree."""
    if not isinstance(f, PadicSeries):
        raise UsageError("expected PadicSeries")
    if f.coeff(0) or f.coeff(1) != 1:
        raise DomainError("series must start with T")
    trunc = f.trunc
    var = PadicSeries.variable(f.p, trunc)
    g = PadicSeries(f.p, trunc, {1: R_ONE})
    for k in range(2, trunc + 1):
        c = f.compose(g).coeff(k)
        if c:
            # residual at degree k is linear in the new coefficient
            g = g - PadicSeries(f.p, trunc, {k: c})
    res = f.compose(g) - var
    if not res.is_zero():
        raise ConsistencyError("inversion left a residual")  # pragma: no cover
    return g


def artin_hasse(p, trunc):
    """Exponential of the p-typical logarithm via the derivative recurrence
    k*e_k = sum over p-powers q <= k of e_(k-q); every coefficient must be
    p-integral."""
    if trunc < 1:
        raise DomainError("truncation degree must be >= 1")
    coeffs = [R_ONE]
    for k in range(1, trunc + 1):
        total = R_ZERO
        q = 1
        while q <= k:
            total += coeffs[k - q]
            q *= p
        c = total / k
        if c.denominator % p == 0:
            raise ConsistencyError(
                "Artin-Hasse coefficient at degree %d is not %d-integral"
                % (k, p))
        coeffs.append(c)
    return PadicSeries(p, trunc, dict(enumerate(coeffs)))


def artin_hasse_integral_degree(p, trunc):
    """Largest degree up to trunc with all coefficients p-integral; the
    construction asserts this equals trunc."""
    artin_hasse(p, trunc)
    return trunc


def padic_log_unit(u, prec):
    """Log of a 1-unit as a PadicInt, summed until the truncation tail is
    provably below the target precision."""
    if not isinstance(u, PadicInt):
        raise UsageError("expected PadicInt")
    prec = int(prec)
    if prec < 1:
        raise DomainError("precision must be positive")
    if u.prec < prec:
        raise UsageError("argument precision is below the requested output")
    p = u.p
    z = (u.residue - 1) % (p ** u.prec)
    if z == 0:
        return PadicInt(p, prec, 0)
    v = 0
    zz = z
    while zz % p == 0:
        zz //= p
        v += 1
    if v < (2 if p == 2 else 1):
        raise DomainError("argument is not close enough to 1")
    # guard digits absorb the p-part of the reciprocals of the indices
    a_max = 0
    k = 1
    while k * v - a_max < prec:
        k += 1
        if k % p == 0:
            kk, a = k, 0
            while kk % p == 0:
                kk //= p
                a += 1
            a_max = max(a_max, a)
    k_max = k
    mod = p ** (prec + a_max)
    total = 0
    zk = 1
    for k in range(1, k_max + 1):
        zk = (zk * z) % mod
        kk, a = k, 0
        while kk % p == 0:
            kk //= p
            a += 1
        # k*v >= a, so the residue mod p^(prec + a_max) stays divisible
        term = zk // (p ** a) if a else zk
        term = (term * pow(kk, -1, mod)) % mod
        if k % 2 == 0:
            total -= term
        else:
            total += term
    return PadicInt(p, prec, total)


# ---------------------------------------------------------------------------
# bivariate helpers for the formal group law


def _bi_add(a, b):
    out = dict(a)
    for key, c in b.items():
        s = out.get(key, R_ZERO) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _bi_scale(a, c):
    return {key: c * v for key, v in a.items()} if c else {}


def _bi_mul(a, b, trunc):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            i, j = i1 + i2, j1 + j2
            if i + j > trunc:
                continue
            key = (i, j)
            s = out.get(key, R_ZERO) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _bi_compose(f, s, trunc):
    # f univariate with f(0) = 0 substituted by a bivariate s without
    # constant term; total degree capped at trunc
    out = {}
    power = {(0, 0): R_ONE}
    for k in range(1, trunc + 1):
        power = _bi_mul(power, s, trunc)
        if not power:
            break
        c = f.coeff(k)
        if c:
            out = _bi_add(out, _bi_scale(power, c))
    return out


def formal_group_law(p, trunc):
    """F(X, Y) = exp_G(log_G X + log_G Y) as a bivariate total-degree
    truncation; the group law of the p-typical formal group."""
    lg = lubin_tate_log(p, trunc)
    eg = series_compositional_inverse(lg)
    s = {}
    for k, c in lg.coeffs.items():
        s[(k, 0)] = c
        s[(0, k)] = c
    return _bi_compose(eg, s, trunc)


# ---------------------------------------------------------------------------
# the three levels of the link check


def _log_of_artin_hasse_residual(p, trunc):
    ah = artin_hasse(p, trunc)
    shifted = ah - PadicSeries.one(p, trunc)
    return log_series(p, trunc).compose(shifted) - lubin_tate_log(p, trunc)


def _additivity_residual(p, trunc):
    lg = lubin_tate_log(p, trunc)
    fg = formal_group_law(p, trunc)
    s = {}
    for k, c in lg.coeffs.items():
        s[(k, 0)] = c
        s[(0, k)] = c
    lhs = _bi_compose(lg, fg, trunc)
    return _bi_add(lhs, _bi_scale(s, Rat(-1)))


def _valuation_link(p):
    """Determinate anchor-untilt valuation of log of a lifted 1-unit,
    transported along the tower by the same square law as the valuation
    of p; the transported values must reproduce the profile ratio."""
    field = Fq(p, 1)
    base = HahnElt.monomial(field, Rat(1, 2))
    sp = make_sigma_point(base, 5)
    eps = HahnElt.one(field) + HahnElt.monomial(field, Rat(1, 2))
    image = log_teich(eps, terms=6, n=3)
    eta = eta_valuation((v_F(sp.a), sp.anchor_index), image)
    if eta is INF or not isinstance(eta, Rat):
        raise ConsistencyError("log image valuation is indeterminate")
    values = [scalar_valuation(sp, eta, j) for j in (1, 2)]
    profile = valuation_profile(sp)
    return {
        "profile_ratio": profile[1] / profile[0],
        "valuation_ratio": values[1] / values[0],
        "values": values,
    }


def diagram_check(p, trunc=None):
    """Truncated identities behind the log link: the Artin-Hasse substitution
    turns the p-typical logarithm into the standard one, the reconstructed
    group law is additive under log, and image valuations scale across one
    tower exactly like the valuation of p."""
    if not is_prime(p):
        raise DomainError("p must be prime")
    if trunc is None:
        trunc = p ** 3 if p <= 3 else p ** 2
    trunc = int(trunc)
    if trunc < 2:
        raise DomainError("truncation degree must be >= 2")
    res_log = _log_of_artin_hasse_residual(p, trunc)
    res_add = _additivity_residual(p, trunc)
    fg = formal_group_law(p, trunc)
    linear_ok = (fg.get((1, 0)) == R_ONE and fg.get((0, 1)) == R_ONE
                 and not any(i + j == 0 for i, j in fg))
    link = _valuation_link(p)
    witness = None
    if not res_log.is_zero():
        k = min(res_log.coeffs)
        witness = {"identity": "log_of_artin_hasse", "degree": k,
                   "value": str(res_log.coeffs[k])}
    elif res_add:
        key = min(res_add)
        witness = {"identity": "additivity", "degree": list(key),
                   "value": str(res_add[key])}
    return {
        "p": p,
        "trunc": trunc,
        "log_of_artin_hasse_zero": res_log.is_zero(),
        "additivity_zero": not res_add,
        "group_law_linear_part": linear_ok,
        "ah_integral_degree": trunc,
        "profile_ratio": str(link["profile_ratio"]),
        "valuation_ratio": str(link["valuation_ratio"]),
        "valuation_scaling": link["valuation_ratio"] == link["profile_ratio"],
        "witness": witness,
    }
