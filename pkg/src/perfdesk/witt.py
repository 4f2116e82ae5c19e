"""p-typical Witt vectors of length n over arbitrary coefficient rings.

Universal sum/product polynomials are derived once per (p, n) by solving the
ghost identities over the integers; every division by a power of p must be
exact and is asserted. Specialization works over any ring whose elements
support +, *, unary - and integer powers.
"""

from .errors import ConsistencyError, DomainError, UsageError

_MAX_LENGTH = 4


# ---------------------------------------------------------------------------
# sparse integer polynomials in 2n variables (X_0..X_{n-1}, Y_0..Y_{n-1})

def _p_add(a, b):
    out = dict(a)
    for k, c in b.items():
        c2 = out.get(k, 0) + c
        if c2:
            out[k] = c2
        elif k in out:
            del out[k]
    return out


def _p_scale(a, s):
    if s == 0:
        return {}
    return {k: c * s for k, c in a.items()}


def _p_mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            c2 = out.get(k, 0) + ca * cb
            if c2:
                out[k] = c2
            elif k in out:
                del out[k]
    return out


def _p_pow(a, e):
    if e == 0:
        raise ConsistencyError("unused")  # pragma: no cover
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else _p_mul(result, base)
        e >>= 1
        if e:
            base = _p_mul(base, base)
    return result


def _p_div_exact(a, d):
    out = {}
    for k, c in a.items():
        q, r = divmod(c, d)
        if r != 0:
            raise ConsistencyError("ghost recursion division not exact")
        out[k] = q
    return out


def _var(nvars, i):
    key = tuple(1 if j == i else 0 for j in range(nvars))
    return {key: 1}


class WittPolySet:
    """Sum polynomials S_0..S_{n-1} and product polynomials P_0..P_{n-1}."""

    def __init__(self, p, n, sums, prods):
        self.p = p
        self.n = n
        self.sums = sums
        self.prods = prods


_polyset_cache = {}


def derive_witt_polys(p, n):
    """Solve w_m(S) = w_m(X) + w_m(Y), w_m(P) = w_m(X) w_m(Y) recursively."""
    if n > _MAX_LENGTH:
        raise DomainError("length capped at %d" % _MAX_LENGTH)
    key = (p, n)
    if key in _polyset_cache:
        return _polyset_cache[key]
    nv = 2 * n
    X = [_var(nv, i) for i in range(n)]
    Y = [_var(nv, n + i) for i in range(n)]

    def ghost_poly(comps, m):
        acc = {}
        for i in range(m + 1):
            acc = _p_add(acc, _p_scale(_p_pow(comps[i], p ** (m - i)), p ** i))
        return acc

    sums = []
    prods = []
    for m in range(n):
        target_s = _p_add(ghost_poly(X, m), ghost_poly(Y, m))
        target_p = _p_mul(ghost_poly(X, m), ghost_poly(Y, m))
        for i in range(m):
            target_s = _p_add(target_s, _p_scale(_p_pow(sums[i], p ** (m - i)), -(p ** i)))
            target_p = _p_add(target_p, _p_scale(_p_pow(prods[i], p ** (m - i)), -(p ** i)))
        sums.append(_p_div_exact(target_s, p ** m))
        prods.append(_p_div_exact(target_p, p ** m))
    ps = WittPolySet(p, n, sums, prods)
    _polyset_cache[key] = ps
    return ps


def render_poly(poly, n):
    """Human-readable form of a derived polynomial, X before Y, sorted."""
    names = ["X%d" % i for i in range(n)] + ["Y%d" % i for i in range(n)]
    parts = []
    for key in sorted(poly, reverse=True):
        c = poly[key]
        factors = []
        for name, e in zip(names, key):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        body = "*".join(factors) if factors else "1"
        if c == 1 and factors:
            parts.append(body)
        elif c == -1 and factors:
            parts.append("-" + body)
        else:
            parts.append("%d*%s" % (c, body) if factors else str(c))
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# ---------------------------------------------------------------------------
# coefficient ring adapters

class IntRing:
    zero = 0
    one = 1

    @staticmethod
    def embed(c):
        return c

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def sum_all(parts):
        return sum(parts)


class FqRing:
    def __init__(self, field):
        self.field = field
        self.zero = field.zero()
        self.one = field.one()

    def embed(self, c):
        return self.field.from_int(c)

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    def sum_all(self, parts):
        acc = self.zero
        for part in parts:
            acc = acc + part
        return acc


class HahnRing:
    def __init__(self, field):
        from .tilt import HahnElt
        self.field = field
        self.zero = HahnElt.zero(field)
        self.one = HahnElt.one(field)
        self._elt = HahnElt

    def embed(self, c):
        coeff = self.field.from_int(c)
        if coeff.is_zero():
            return self.zero
        return self._elt.monomial(self.field, 0, coeff)

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    def sum_all(self, parts):
        # one collection pass instead of a chain of pairwise re-sorts
        parts = list(parts)
        if any(part.cap is not None for part in parts):
            acc = self.zero
            for part in parts:
                acc = acc + part
            return acc
        terms = []
        for part in parts:
            terms.extend(part.terms)
        return self._elt(self.field, terms)


def specialize(poly, values, ring):
    """Evaluate an integer polynomial at ring elements."""
    pow_cache = [{} for _ in values]

    def vpow(i, e):
        cache = pow_cache[i]
        if e not in cache:
            cache[e] = values[i] ** e
        return cache[e]

    parts = []
    for key, c in poly.items():
        term = ring.embed(c)
        if ring.is_zero(term):
            continue
        for i, e in enumerate(key):
            if e:
                term = term * vpow(i, e)
        parts.append(term)
    if not parts:
        return ring.zero
    return ring.sum_all(parts)


# ---------------------------------------------------------------------------
# vectors

class WittVec:
    """Length-n Witt vector over a coefficient ring adapter."""

    __slots__ = ("p", "n", "ring", "components")

    def __init__(self, p, n, ring, components):
        components = tuple(components)
        if len(components) != n:
            raise UsageError("component length must be n")
        self.p = p
        self.n = n
        self.ring = ring
        self.components = components

    def _check(self, other):
        if (not isinstance(other, WittVec) or other.p != self.p
                or other.n != self.n or other.ring is not self.ring):
            raise UsageError("shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, WittVec) and other.p == self.p
                and other.n == self.n and other.components == self.components)

    def __hash__(self):
        return hash((self.p, self.n, self.components))

    def __repr__(self):
        return "W(%s)" % ", ".join(repr(c) for c in self.components)


def witt_zero(p, n, ring):
    return WittVec(p, n, ring, (ring.zero,) * n)


def teichmuller(x, p, n, ring):
    """[x] = (x, 0, ..., 0)."""
    return WittVec(p, n, ring, (x,) + (ring.zero,) * (n - 1))


def witt_add(a, b):
    a._check(b)
    ps = derive_witt_polys(a.p, a.n)
    values = a.components + b.components
    return WittVec(a.p, a.n, a.ring,
                   tuple(specialize(ps.sums[m], values, a.ring) for m in range(a.n)))


def witt_mul(a, b):
    a._check(b)
    ps = derive_witt_polys(a.p, a.n)
    values = a.components + b.components
    return WittVec(a.p, a.n, a.ring,
                   tuple(specialize(ps.prods[m], values, a.ring) for m in range(a.n)))


def witt_neg(a):
    """Additive inverse, solved component by component from the triangular
    structure S_m = X_m + Y_m + (terms in lower components)."""
    ps = derive_witt_polys(a.p, a.n)
    ring = a.ring
    z = [ring.zero] * a.n
    for m in range(a.n):
        values = a.components + tuple(z)
        s = specialize(ps.sums[m], values, ring)  # = a_m + 0 + G_m(a, z_<m)
        z[m] = -s
    return WittVec(a.p, a.n, ring, tuple(z))


def witt_sub(a, b):
    return witt_add(a, witt_neg(b))


def ghost(a):
    """Ghost vector over a torsion-free ring: w_m = sum p^i a_i^{p^(m-i)}."""
    out = []
    for m in range(a.n):
        acc = a.ring.zero
        for i in range(m + 1):
            acc = acc + (a.p ** i) * (a.components[i] ** (a.p ** (m - i)))
        out.append(acc)
    return tuple(out)


def witt_digits_of_int(p, c, n):
    """Components in W(F_p) of the integer c (as residues mod p), via the
    exact ghost recursion over Z: w_m(g) = c for all m < n."""
    g = []
    for m in range(n):
        acc = c
        for i in range(m):
            acc -= (p ** i) * (g[i] ** (p ** (m - i)))
        q, r = divmod(acc, p ** m)
        if r != 0:
            raise ConsistencyError("integer digit recursion not exact")
        g.append(q)
    return tuple(x % p for x in g)
