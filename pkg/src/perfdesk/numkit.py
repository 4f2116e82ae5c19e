"""Arithmetic substrate: exact rationals, p-adic integers at fixed precision,
and finite fields F_{p^k} with deterministic modulus choice."""

from fractions import Fraction

from .errors import ConsistencyError, DomainError, UsageError

Rat = Fraction


class _Infinity:
    """Distinguished +infinity for valuations; compares above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("perfdesk-infinity")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "+inf"


INF = _Infinity()


def rat_cmp(a, b):
    """Three-way compare of rationals: -1, 0 or 1."""
    a = Fraction(a)
    b = Fraction(b)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def rat_min(values):
    """Minimum of rationals and INF; INF for an empty iterable."""
    best = INF
    for v in values:
        if v is INF:
            continue
        if best is INF or v < best:
            best = v
    return best


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(bound):
    return [n for n in range(2, bound + 1) if is_prime(n)]


# ---------------------------------------------------------------------------
# p-adic integers at fixed absolute precision


class PadicInt:
    """Residue mod p^N; arithmetic carries precision = min of operands."""

    __slots__ = ("p", "prec", "residue")

    def __init__(self, p, prec, value):
        if prec < 1:
            raise DomainError("precision must be positive")
        self.p = p
        self.prec = prec
        self.residue = value % (p ** prec)

    def _check(self, other):
        if not isinstance(other, PadicInt):
            raise UsageError("expected PadicInt")
        if other.p != self.p:
            raise UsageError("prime mismatch")

    def __add__(self, other):
        self._check(other)
        n = min(self.prec, other.prec)
        return PadicInt(self.p, n, self.residue + other.residue)

    def __sub__(self, other):
        self._check(other)
        n = min(self.prec, other.prec)
        return PadicInt(self.p, n, self.residue - other.residue)

    def __neg__(self):
        return PadicInt(self.p, self.prec, -self.residue)

    def __mul__(self, other):
        self._check(other)
        n = min(self.prec, other.prec)
        return PadicInt(self.p, n, self.residue * other.residue)

    def __eq__(self, other):
        return (isinstance(other, PadicInt) and other.p == self.p
                and other.prec == self.prec and other.residue == self.residue)

    def __hash__(self):
        return hash((self.p, self.prec, self.residue))

    def valuation(self):
        """Exact v_p of the residue; INF when the residue is 0 (v >= prec)."""
        if self.residue == 0:
            return INF
        v = 0
        r = self.residue
        while r % self.p == 0:
            r //= self.p
            v += 1
        return v

    def unit_inverse(self):
        if self.residue % self.p == 0:
            raise DomainError("not a unit")
        inv = pow(self.residue, -1, self.p ** self.prec)
        return PadicInt(self.p, self.prec, inv)

    def divide_exact_p_power(self, a):
        """Divide by p^a; residue must be divisible. Precision drops by a."""
        if a == 0:
            return self
        q, r = divmod(self.residue, self.p ** a)
        if r != 0:
            raise DomainError("residue not divisible by p^%d" % a)
        if self.prec - a < 1:
            raise DomainError("precision exhausted")
        return PadicInt(self.p, self.prec - a, q)

    def __repr__(self):
        return "%d mod %d^%d" % (self.residue, self.p, self.prec)


def padic_mul(a, b):
    return a * b


# ---------------------------------------------------------------------------
# finite fields

def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mulmod(a, b, mod, p):
    # a, b, mod: coefficient tuples over F_p, mod monic
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_divmod_mod(res, mod, p)


def _poly_divmod_mod(a, mod, p):
    # remainder of a by monic mod over F_p
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * mod[i]) % p
        a.pop()
    return tuple(_poly_trim(tuple(c % p for c in a)))


def _poly_powmod(base, e, mod, p):
    result = (1,)
    base = _poly_divmod_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a = tuple(_poly_trim(a))
    b = tuple(_poly_trim(b))
    while b:
        a, b = b, _poly_mod_general(a, b, p)
    return a


def _poly_mod_general(a, b, p):
    # remainder of a by b (b not necessarily monic) over F_p
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        lead = (a[-1] * inv) % p
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - lead * b[i]) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return tuple(_poly_trim(tuple(c % p for c in a)))


def _is_irreducible(mod, p):
    # Rabin test: x^{p^k} = x mod f, and gcd(x^{p^{k/d}} - x, f) = 1 for prime d | k
    k = len(mod) - 1
    if k == 1:
        return True
    x = (0, 1)
    xpk = _poly_powmod(x, p ** k, mod, p)
    if xpk != x:
        return False
    for d in set(_prime_factors(k)):
        h = _poly_powmod(x, p ** (k // d), mod, p)
        diff = _poly_sub(h, x, p)
        if len(_poly_gcd(mod, diff, p)) != 1:
            return False
    return True


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append((ai - bi) % p)
    return tuple(_poly_trim(tuple(out)))


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def least_irreducible(p, k):
    """Monic irreducible of degree k over F_p, least in the lexicographic
    order of constant-first coefficient tuples (c_0, ..., c_{k-1})."""
    if k == 1:
        return (0, 1)  # x
    # count through (c_0, ..., c_{k-1}) in base p, least first
    for idx in range(p ** k):
        coeffs = []
        n = idx
        for _ in range(k):
            coeffs.append(n % p)
            n //= p
        mod = tuple(coeffs) + (1,)
        if _is_irreducible(mod, p):
            return mod
    raise ConsistencyError("no irreducible polynomial found")  # pragma: no cover


class Fq:
    """The field F_{p^k} with a stored irreducible modulus."""

    _cache = {}

    def __new__(cls, p, k, modulus=None):
        key = (p, k, modulus)
        if key in cls._cache:
            return cls._cache[key]
        self = super().__new__(cls)
        cls._cache[key] = self
        return self

    def __init__(self, p, k, modulus=None):
        if getattr(self, "_ready", False):
            return
        if not is_prime(p):
            raise DomainError("p must be prime")
        if k < 1:
            raise DomainError("k must be positive")
        if modulus is None:
            modulus = least_irreducible(p, k)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise DomainError("modulus must be monic of degree k")
        if not _is_irreducible(modulus, p):
            raise DomainError("modulus is reducible")
        self.p = p
        self.k = k
        self.modulus = tuple(c % p for c in modulus)
        self._gen_cache = None
        # desk-scale fields are tiny; memoizing products beats re-reducing
        self._mul_memo = {} if p ** k <= 4096 else None
        self._ready = True

    def elt(self, coords):
        if isinstance(coords, int):
            coords = (coords % self.p,) + (0,) * (self.k - 1)
        coords = tuple(c % self.p for c in coords)
        if len(coords) != self.k:
            raise UsageError("coordinate length must be k")
        return FqElt(self, coords)

    def zero(self):
        return self.elt(0)

    def one(self):
        return self.elt(1)

    def from_int(self, n):
        return self.elt(n)

    def x(self):
        """The class of the variable, a root of the modulus."""
        if self.k == 1:
            return self.zero()
        return self.elt((0, 1) + (0,) * (self.k - 2))

    def order(self):
        return self.p ** self.k

    def elements(self):
        for idx in range(self.order()):
            coords = []
            n = idx
            for _ in range(self.k):
                coords.append(n % self.p)
                n //= self.p
            yield self.elt(tuple(coords))

    def multiplicative_generator(self):
        """Least element (in enumeration order) generating F_{p^k}^x."""
        if self._gen_cache is not None:
            return self._gen_cache
        n = self.order() - 1
        factors = set(_prime_factors(n)) if n > 1 else set()
        for g in self.elements():
            if g.is_zero():
                continue
            if all(fq_pow(g, n // d) != self.one() for d in factors):
                self._gen_cache = g
                return g
        raise ConsistencyError("cyclic group has a generator")  # pragma: no cover

    def root_of_unity(self, m):
        """An element of exact multiplicative order m; requires gcd(m,p)=1
        and m | p^k - 1."""
        if m % self.p == 0:
            raise DomainError("no p-power roots of unity in characteristic p")
        if (self.order() - 1) % m != 0:
            raise DomainError("order %d does not divide p^k - 1" % m)
        g = self.multiplicative_generator()
        return fq_pow(g, (self.order() - 1) // m)

    def __repr__(self):
        return "F_%d^%d" % (self.p, self.k)


class FqElt:
    """Element of F_{p^k} as a coordinate vector over the power basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, FqElt) or other.field is not self.field:
            raise UsageError("field mismatch")

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FqElt(self.field, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FqElt(self.field, tuple((a - b) % p for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        p = self.field.p
        return FqElt(self.field, tuple((-a) % p for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.field.p
            return FqElt(self.field, tuple((a * other) % p for a in self.coords))
        self._check(other)
        f = self.field
        memo = f._mul_memo
        if memo is not None:
            key = (self.coords, other.coords)
            got = memo.get(key)
            if got is None:
                got = memo[key] = self._mul_slow(other)
            return got
        return self._mul_slow(other)

    def _mul_slow(self, other):
        f = self.field
        prod = _poly_mulmod(_poly_trim(self.coords), _poly_trim(other.coords), f.modulus, f.p)
        coords = tuple(prod) + (0,) * (f.k - len(prod))
        return FqElt(f, coords)

    __rmul__ = __mul__

    def __pow__(self, e):
        return fq_pow(self, e)

    def inverse(self):
        if self.is_zero():
            raise DomainError("zero is not invertible")
        # x^{p^k - 2} = x^{-1}
        return fq_pow(self, self.field.order() - 2)

    def frobenius(self, m=1):
        """x -> x^{p^m} for any integer m; negative m takes p-th roots."""
        e = m % self.field.k
        return fq_pow(self, self.field.p ** e)

    def __eq__(self, other):
        return (isinstance(other, FqElt) and other.field is self.field
                and other.coords == self.coords)

    def __hash__(self):
        return hash((id(self.field), self.coords))

    def __repr__(self):
        return "Fq(%s)" % (",".join(str(c) for c in self.coords))


def fq_pow(x, e):
    """Repeated-square exponentiation; negative e inverts first."""
    if not isinstance(x, FqElt):
        raise UsageError("expected FqElt")
    if e < 0:
        if x.is_zero():
            raise DomainError("negative power of zero")
        x = x.inverse()
        e = -e
    result = x.field.one()
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def embedding_degree(p, m):
    """Least k with m' | p^k - 1, where m' is the prime-to-p part of m.
    Roots of unity of order m' then live in F_{p^k}."""
    mp = m
    while mp % p == 0:
        mp //= p
    if mp == 1:
        return 1
    k = 1
    acc = p % mp
    while acc != 1:
        acc = (acc * p) % mp
        k += 1
        if k > mp:
            raise ConsistencyError("order computation overflow")  # pragma: no cover
    return k


def prime_to_p_part(p, m):
    while m % p == 0:
        m //= p
    return m
