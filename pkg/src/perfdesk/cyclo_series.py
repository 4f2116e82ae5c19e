"""Truncated Laurent series in t with coefficients in Z[zeta_{2l}],
the exact coefficient ring for theta identities at level 2l."""

from .errors import DomainError, InversionError, PrecisionError, UsageError
from .numkit import INF


def _int_poly_divmod(num, den):
    # den monic; exact integer division
    num = list(num)
    dd = len(den) - 1
    q = [0] * max(0, len(num) - dd)
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        lead = num[-1]
        shift = len(num) - 1 - dd
        q[shift] = lead
        for i in range(dd + 1):
            num[shift + i] -= lead * den[i]
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return q, num


def cyclotomic_poly(n):
    """Coefficient tuple of Phi_n, constant term first, via exact division
    of x^n - 1 by the lower cyclotomic factors."""
    if n < 1:
        raise DomainError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_poly(d)
            poly, rem = _int_poly_divmod(poly, list(phi_d))
            if rem:
                raise DomainError("cyclotomic division not exact")  # pragma: no cover
    return tuple(poly)


_phi_cache = {}


def _phi(level):
    if level not in _phi_cache:
        _phi_cache[level] = cyclotomic_poly(level)
    return _phi_cache[level]


class CycloInt:
    """Element of Z[zeta_{2l}] on the power basis of Z[x]/Phi_{2l}(x)."""

    __slots__ = ("level", "coords")

    def __init__(self, level, coords):
        phi = _phi(level)
        deg = len(phi) - 1
        coords = tuple(coords)
        if len(coords) > deg:
            _, rem = _int_poly_divmod(list(coords), list(phi))
            coords = tuple(rem)
        coords = coords + (0,) * (deg - len(coords))
        self.level = level
        self.coords = coords

    @classmethod
    def zero(cls, level):
        return cls(level, ())

    @classmethod
    def from_int(cls, level, n):
        return cls(level, (n,))

    @classmethod
    def zeta_pow(cls, level, e):
        """zeta_{level}^e reduced to the power basis."""
        e %= level
        return cls(level, (0,) * e + (1,))

    def _check(self, other):
        if not isinstance(other, CycloInt) or other.level != self.level:
            raise UsageError("level mismatch")

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __add__(self, other):
        self._check(other)
        return CycloInt(self.level, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return CycloInt(self.level, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CycloInt(self.level, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.level, tuple(a * other for a in self.coords))
        self._check(other)
        a, b = self.coords, other.coords
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
        return CycloInt(self.level, tuple(prod))

    __rmul__ = __mul__

    def unit_monomial_form(self):
        """(sign, e) with self = sign * zeta^e, or None if not of that shape."""
        for e in range(self.level):
            z = CycloInt.zeta_pow(self.level, e)
            if self.coords == z.coords:
                return (1, e)
            if self.coords == (-z).coords:
                return (-1, e)
        return None

    def __eq__(self, other):
        return (isinstance(other, CycloInt) and other.level == self.level
                and other.coords == self.coords)

    def __hash__(self):
        return hash((self.level, self.coords))

    def __repr__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"


class CycloLaurent:
    """Laurent series in t over Z[zeta_{2l}], truncated at O(t^T);
    T = None marks an exact (finitely supported) element."""

    __slots__ = ("level", "trunc", "terms")

    def __init__(self, level, terms, trunc=None):
        clean = {}
        for e, c in terms.items():
            if not isinstance(c, CycloInt):
                c = CycloInt.from_int(level, c)
            if c.level != level:
                raise UsageError("coefficient level mismatch")
            if c.is_zero():
                continue
            if trunc is not None and e >= trunc:
                continue
            if e in clean:
                c = clean[e] + c
                if c.is_zero():
                    del clean[e]
                    continue
            clean[e] = c
        self.level = level
        self.trunc = trunc
        self.terms = clean

    @classmethod
    def zero(cls, level, trunc=None):
        return cls(level, {}, trunc)

    @classmethod
    def one(cls, level, trunc=None):
        return cls(level, {0: CycloInt.from_int(level, 1)}, trunc)

    @classmethod
    def monomial(cls, level, e, coeff=1, trunc=None):
        if isinstance(coeff, int):
            coeff = CycloInt.from_int(level, coeff)
        return cls(level, {e: coeff}, trunc)

    def _check(self, other):
        if not isinstance(other, CycloLaurent) or other.level != self.level:
            raise UsageError("level mismatch")

    def is_zero(self):
        return not self.terms

    def valuation(self):
        """Least stored exponent; INF for exact zero; PrecisionError when
        only O(t^T) is known."""
        if self.terms:
            return min(self.terms)
        if self.trunc is None:
            return INF
        raise PrecisionError("valuation indeterminate below O(t^%d)" % self.trunc)

    def _v_lower(self):
        if self.terms:
            return min(self.terms)
        return INF if self.trunc is None else self.trunc

    def leading(self):
        """(exponent, coefficient) of the least-exponent term."""
        if not self.terms:
            raise PrecisionError("no leading term available")
        e = min(self.terms)
        return e, self.terms[e]

    def __add__(self, other):
        self._check(other)
        trunc = _min_trunc(self.trunc, other.trunc)
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged[e] + c if e in merged else c
        return CycloLaurent(self.level, merged, trunc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CycloLaurent(self.level, {e: -c for e, c in self.terms.items()}, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, CycloInt)):
            return CycloLaurent(self.level,
                                {e: c * other for e, c in self.terms.items()}, self.trunc)
        return cl_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, CycloLaurent) and other.level == self.level
                and other.trunc == self.trunc and other.terms == self.terms)

    def __hash__(self):
        return hash((self.level, self.trunc, tuple(sorted((e, c.coords) for e, c in self.terms.items()))))

    def render(self):
        """Canonical text form with coefficients as integer vectors."""
        parts = []
        for e in sorted(self.terms):
            parts.append("%s * t^%d" % (self.terms[e], e))
        if self.trunc is not None:
            parts.append("O(t^%d)" % self.trunc)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return self.render()


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _combine_mul_trunc(a, b):
    # product of (A + O(t^{T_a})) and (B + O(t^{T_b})):
    # error terms at orders >= min(T_a + v_b, T_b + v_a)
    cands = []
    if a.trunc is not None:
        vb = b._v_lower()
        if vb is INF:
            # b is exact zero: product exact zero
            return "zero"
        cands.append(a.trunc + vb)
    if b.trunc is not None:
        va = a._v_lower()
        if va is INF:
            return "zero"
        cands.append(b.trunc + va)
    if not cands:
        return None
    return min(cands)


def cl_mul(a, b):
    """Product truncated at the combined precision."""
    a._check(b)
    trunc = _combine_mul_trunc(a, b)
    if trunc == "zero":
        return CycloLaurent.zero(a.level)
    out = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = ea + eb
            if trunc is not None and e >= trunc:
                continue
            c = ca * cb
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
    return CycloLaurent(a.level, out, trunc)


def cl_invert(a):
    """Inverse of a series whose leading coefficient is +-zeta^m.
    Exact inputs are inverted at a default relative precision."""
    if not a.terms:
        raise InversionError("cannot invert zero or O-only series")
    v, lead = a.leading()
    form = lead.unit_monomial_form()
    if form is None:
        raise InversionError("leading coefficient is not a root-of-unity unit")
    sign, e = form
    level = a.level
    inv_lead = CycloInt.zeta_pow(level, -e) * sign
    if a.trunc is not None:
        rel = a.trunc - v  # relative precision of a
        if rel <= 0:
            raise PrecisionError("no relative precision left for inversion")
    else:
        rel = max(e for e in a.terms) - v + 1 if len(a.terms) > 1 else 1
        rel = max(rel, 1) * 4  # default working window for exact inputs
    # a = lead * t^v * (1 + n), v(n) > 0; invert the 1-unit by geometric series
    unit_terms = {}
    for ea, ca in a.terms.items():
        unit_terms[ea - v] = ca * inv_lead
    n_ser = CycloLaurent(level, {e: c for e, c in unit_terms.items() if e != 0}, rel)
    acc = CycloLaurent.one(level, rel)
    power = CycloLaurent.one(level, rel)
    k = 0
    while True:
        k += 1
        power = cl_mul(power, n_ser)
        if power.is_zero():
            break
        acc = acc + power * (-1 if k % 2 else 1)
        if k > rel:
            break
    # shift back: a^{-1} = acc * inv_lead * t^{-v}
    out = {e - v: c * inv_lead for e, c in acc.terms.items()}
    out_trunc = None if a.trunc is None and n_ser.is_zero() else rel - v
    return CycloLaurent(level, out, out_trunc)


def cl_substitute_q_power(a, m):
    """Exponent rescaling e -> m*e (t -> t^m)."""
    if m < 1:
        raise DomainError("m must be >= 1")
    trunc = None if a.trunc is None else a.trunc * m
    return CycloLaurent(a.level, {e * m: c for e, c in a.terms.items()}, trunc)
