"""Characteristic-p model of the tilted field: truncated Hahn series over
F_{p^k} with rational exponents, Frobenius, monomial roots, automorphisms.

The canonical element t has v_F(t) = 1; all valuations live in the common
rational value group normalized by v(p) = 1 at the canonical point.
"""

from fractions import Fraction

from .errors import DomainError, PrecisionError, UsageError
from .numkit import Fq, INF


class HahnElt:
    """Finite sum of c * t^e with strictly increasing rational exponents e,
    coefficients in F_{p^k}, known below the cap O(t^E)."""

    __slots__ = ("field", "terms", "cap")

    def __init__(self, field, terms, cap=None):
        if cap is not None:
            cap = Fraction(cap)
        # collect keyed by (num, den): int-tuple hashing is much cheaper
        # than Fraction hashing and the pairs are already in lowest terms
        clean = {}
        for e, c in terms:
            e = Fraction(e)
            if cap is not None and e >= cap:
                continue
            if c.is_zero():
                continue
            key = (e.numerator, e.denominator)
            prev = clean.get(key)
            if prev is not None:
                c = prev[1] + c
                if c.is_zero():
                    del clean[key]
                    continue
                e = prev[0]
            clean[key] = (e, c)
        self.field = field
        self.terms = tuple(sorted(clean.values()))
        self.cap = cap

    @classmethod
    def zero(cls, field, cap=None):
        return cls(field, (), cap)

    @classmethod
    def one(cls, field, cap=None):
        return cls(field, ((Fraction(0), field.one()),), cap)

    @classmethod
    def monomial(cls, field, e, coeff=None, cap=None):
        if coeff is None:
            coeff = field.one()
        return cls(field, ((Fraction(e), coeff),), cap)

    @classmethod
    def t(cls, field):
        """The canonical element, v_F = 1."""
        return cls.monomial(field, 1)

    def _check(self, other):
        if not isinstance(other, HahnElt) or other.field is not self.field:
            raise UsageError("coefficient field mismatch")

    def is_zero(self):
        return not self.terms and self.cap is None

    def is_indeterminate(self):
        return not self.terms and self.cap is not None

    def v_lower(self):
        """Sound lower bound for the valuation: least exponent, cap for an
        O-only element, INF for exact zero."""
        if self.terms:
            return self.terms[0][0]
        return INF if self.cap is None else self.cap

    def leading(self):
        if not self.terms:
            raise PrecisionError("no leading term below the cap")
        return self.terms[0]

    def __add__(self, other):
        self._check(other)
        cap = _min_cap(self.cap, other.cap)
        return HahnElt(self.field, self.terms + other.terms, cap)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HahnElt(self.field, tuple((e, -c) for e, c in self.terms), self.cap)

    def __mul__(self, other):
        self._check(other)
        cap = _mul_cap(self, other)
        if cap == "zero":
            return HahnElt.zero(self.field)
        out = []
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                out.append((ea + eb, ca * cb))
        return HahnElt(self.field, out, cap)

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative powers not supported")
        if n == 0:
            return HahnElt.one(self.field, None)
        # char p: x^p is the coefficient-and-exponent Frobenius, linear time
        p = self.field.p
        a = 0
        while n % p == 0:
            n //= p
            a += 1
        base = frobenius(self, a) if a else self
        result = base
        n -= 1
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale_coeff(self, c):
        """Multiply every coefficient by a fixed field element."""
        if c.is_zero():
            return HahnElt.zero(self.field) if self.cap is None else HahnElt(self.field, (), self.cap)
        return HahnElt(self.field, tuple((e, k * c) for e, k in self.terms), self.cap)

    def __eq__(self, other):
        return (isinstance(other, HahnElt) and other.field is self.field
                and other.terms == self.terms and other.cap == self.cap)

    def __hash__(self):
        return hash((id(self.field), self.terms, self.cap))

    def render(self):
        parts = ["%s t^%s" % (c, e) for e, c in self.terms]
        if self.cap is not None:
            parts.append("O(t^%s)" % self.cap)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return self.render()


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _mul_cap(x, y):
    cands = []
    if x.cap is not None:
        vy = y.v_lower()
        if vy is INF:
            return "zero"
        cands.append(x.cap + vy)
    if y.cap is not None:
        vx = x.v_lower()
        if vx is INF:
            return "zero"
        cands.append(y.cap + vx)
    return min(cands) if cands else None


def v_F(x):
    """Valuation: least exponent; INF for zero. An O-only element has no
    determinate valuation."""
    if x.terms:
        return x.terms[0][0]
    if x.cap is None:
        return INF
    raise PrecisionError("valuation indeterminate below O(t^%s)" % x.cap)


def hahn_add(x, y):
    return x + y


def hahn_mul(x, y):
    return x * y


def frobenius(x, m):
    """x -> x^{p^m}: exponents scale by p^m, coefficients by the field
    Frobenius; exact for every integer m since F_{p^k} is perfect."""
    p = x.field.p
    factor = Fraction(p) ** m
    terms = tuple((e * factor, c.frobenius(m)) for e, c in x.terms)
    cap = None if x.cap is None else x.cap * factor
    return HahnElt(x.field, terms, cap)


def monomial_root(x, r):
    """t^{e*r} for a coefficient-1 monomial x = t^e."""
    r = Fraction(r)
    if r <= 0:
        raise DomainError("root exponent must be positive")
    if len(x.terms) != 1 or x.cap is not None:
        raise DomainError("roots only of exact monomials")
    e, c = x.terms[0]
    if c != x.field.one():
        raise DomainError("roots only of coefficient-1 monomials")
    return HahnElt.monomial(x.field, e * r)


class TiltAut:
    """Automorphism: coefficient-Galois power c (Frobenius on coefficients
    only) followed by the Frobenius power m (x -> x^{p^m})."""

    __slots__ = ("frob_power", "coeff_power")

    def __init__(self, frob_power=0, coeff_power=0):
        self.frob_power = frob_power
        self.coeff_power = coeff_power

    @classmethod
    def identity(cls):
        return cls(0, 0)

    @classmethod
    def frobenius(cls, m=1):
        return cls(m, 0)

    @classmethod
    def coefficient_galois(cls, c=1):
        return cls(0, c)

    def compose(self, other):
        return TiltAut(self.frob_power + other.frob_power,
                       self.coeff_power + other.coeff_power)

    def is_identity_on(self, field):
        return self.frob_power == 0 and self.coeff_power % field.k == 0

    def __eq__(self, other):
        return (isinstance(other, TiltAut) and other.frob_power == self.frob_power
                and other.coeff_power == self.coeff_power)

    def __hash__(self):
        return hash((self.frob_power, self.coeff_power))

    def __repr__(self):
        return "TiltAut(frob=%d, coeff=%d)" % (self.frob_power, self.coeff_power)


def apply_aut(sigma, x):
    if sigma.coeff_power:
        x = HahnElt(x.field,
                    tuple((e, c.frobenius(sigma.coeff_power)) for e, c in x.terms),
                    x.cap)
    if sigma.frob_power:
        x = frobenius(x, sigma.frob_power)
    return x
