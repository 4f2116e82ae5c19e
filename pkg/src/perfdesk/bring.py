"""Finite Teichmuller-sum model of the period ring B.

Elements are finite sums of terms p^m*[x] with x in a perfectoid Hahn field,
plus a sound tail bound: a certificate that every unrepresented term has norm
exponent at least floor(r) for each queried radius exponent r >= 0. Norms
|z| = p^(-s) are computed exactly whenever the explicit terms decide them;
otherwise a guaranteed lower bound on s is returned, never a wrong exact
value.
"""

from .errors import DomainError, RangeError, UsageError
from .numkit import INF, Rat
from .tilt import HahnElt, frobenius as hahn_frobenius, v_F
from .witt import (HahnRing, teichmuller as witt_teich, witt_add as _wadd,
                   witt_digits_of_int, witt_sub as _wsub)

R_ZERO = Rat(0)

CARRY_DEPTH = 3        # Witt length used to resolve colliding p-exponents
SCALAR_DIGITS = 6      # digit depth for integer scalar expansions
PRUNE_M = 12           # p-exponent cutoff when series products are iterated
LOG_M_CAP = 5          # working p-exponent window inside the log series
PAYLOAD_TERMS = 8      # Teichmuller payload size cap in windowed arithmetic
PAYLOAD_TERMS_FREE = 8  # payload size cap outside the series window
ASSEMBLE_BUDGET = 1200   # carry resolutions per assembly before draining


# ---------------------------------------------------------------------------
# tail bound certificates
#
# Each node evaluates to a rational floor(r) valid for every r >= 0: all terms
# the certificate covers have norm exponent m*r + v_F(x) >= floor(r).

class TailFloor:
    """Certificate nodes form a DAG (series arithmetic shares subtrees), so
    both evaluation and the phi transform memoize by node identity."""

    def floor_at(self, r, memo=None):
        if memo is None:
            memo = {}
        key = id(self)
        got = memo.get(key)
        if got is None:
            got = memo[key] = self._floor(r, memo)
        return got

    def phi(self, p, memo=None):
        if memo is None:
            memo = {}
        key = id(self)
        got = memo.get(key)
        if got is None:
            got = memo[key] = self._phi(p, memo)
        return got

    def _floor(self, r, memo):
        raise NotImplementedError

    def _phi(self, p, memo):
        raise NotImplementedError


class LineFloor(TailFloor):
    """Single covered term shape: m*r + v."""

    __slots__ = ("m", "v")

    def __init__(self, m, v):
        self.m = m
        self.v = Rat(v)

    def _floor(self, r, memo):
        return self.m * r + self.v

    def _phi(self, p, memo):
        return LineFloor(self.m, self.v * p)


class FamilyFloor(TailFloor):
    """Covers terms (i + m_off, x_i) for all i >= n0 with v_F(x_i) >= v0/p^i.

    This is the shape left by truncating a Witt coordinate expansion whose
    coordinates all vanish to order v0 before p^i-th roots are taken."""

    __slots__ = ("p", "n0", "v0", "m_off")

    def __init__(self, p, n0, v0, m_off=0):
        if Rat(v0) < 0:
            raise UsageError("family floor needs v0 >= 0")
        self.p = p
        self.n0 = n0
        self.v0 = Rat(v0)
        self.m_off = m_off

    def _floor(self, r, memo):
        if r == 0:
            return R_ZERO
        p, v0 = self.p, self.v0
        i = self.n0
        best = (i + self.m_off) * r + v0 / p ** i
        # term(i+1) - term(i) = r - v0(p-1)/p^(i+1), increasing in i
        while True:
            nxt = (i + 1 + self.m_off) * r + v0 / p ** (i + 1)
            if nxt >= best:
                return best
            best = nxt
            i += 1

    def _phi(self, p, memo):
        return FamilyFloor(self.p, self.n0, self.v0 * p, self.m_off)


class ShiftFloor(TailFloor):
    """inner floor translated by dm*r + dv (multiplication by p^dm * [y])."""

    __slots__ = ("inner", "dm", "dv")

    def __init__(self, inner, dm, dv=R_ZERO):
        self.inner = inner
        self.dm = dm
        self.dv = Rat(dv)

    def _floor(self, r, memo):
        return self.inner.floor_at(r, memo) + self.dm * r + self.dv

    def _phi(self, p, memo):
        return ShiftFloor(self.inner.phi(p, memo), self.dm, self.dv * p)


class SumFloor(TailFloor):
    """Product of covered pieces: floors add (norms multiply)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(parts)

    def _floor(self, r, memo):
        total = R_ZERO
        for part in self.parts:
            total = total + part.floor_at(r, memo)
        return total

    def _phi(self, p, memo):
        return SumFloor(tuple(part.phi(p, memo) for part in self.parts))


class MinFloor(TailFloor):
    """Union of covered pieces: the weakest floor wins."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        flat = []
        seen = set()
        for part in parts:
            for q in (part.parts if isinstance(part, MinFloor) else (part,)):
                if id(q) not in seen:
                    seen.add(id(q))
                    flat.append(q)
        if not flat:
            raise UsageError("empty min floor")
        self.parts = tuple(flat)

    def _floor(self, r, memo):
        best = None
        for part in self.parts:
            f = part.floor_at(r, memo)
            if best is None or f < best:
                best = f
        return best

    def _phi(self, p, memo):
        return MinFloor(tuple(part.phi(p, memo) for part in self.parts))


class LogTailFloor(TailFloor):
    """Omitted terms z^k/k for k > K of a logarithm series.

    Each omitted term has norm exponent >= k*f - v_p(k)*r where f = floor of
    the full element z at r. The infimum over k > K is computed exactly by a
    terminating scan plus a monotone block bound."""

    __slots__ = ("p", "z_floor", "K")

    def __init__(self, p, z_floor, K):
        self.p = p
        self.z_floor = z_floor
        self.K = K

    def _floor(self, r, memo):
        f = self.z_floor.floor_at(r, memo)
        p = self.p
        if r == 0:
            if f < 0:
                raise RangeError("log tail unbounded below at radius 1")
            return (self.K + 1) * f
        if f <= 0:
            raise RangeError("log tail not decreasing at this radius")
        # smallest V with p^V >= r/((p-1)f); past that, block minima increase
        bound = r / ((p - 1) * f)
        V = 0
        pv = 1
        while pv < bound:
            V += 1
            pv *= p
        k_hi = max(p ** (V + 1), self.K + 1)
        best = None
        for k in range(self.K + 1, k_hi + 1):
            a = 0
            kk = k
            while kk % p == 0:
                kk //= p
                a += 1
            val = k * f - a * r
            if best is None or val < best:
                best = val
        # every unscanned k > k_hi lies in a block [p^W, p^(W+1)) with
        # p^(W+1) >= k_hi + 1, so W >= W_lo > V; block terms are bounded by
        # p^W*f - W*r, which increases in W past V
        w_lo = 0
        pw = p
        while pw < k_hi + 1:
            w_lo += 1
            pw *= p
        block = (p ** w_lo) * f - w_lo * r
        return block if best is None else min(best, block)

    def _phi(self, p, memo):
        return LogTailFloor(self.p, self.z_floor.phi(p, memo), self.K)


# ---------------------------------------------------------------------------
# elements and norms

class Rho:
    """Radius p^(-r); r = 0 is the boundary radius 1."""

    __slots__ = ("r",)

    def __init__(self, r):
        r = Rat(r)
        if r < 0:
            raise DomainError("radius exponent must be >= 0")
        self.r = r

    def __repr__(self):
        return "Rho(r=%s)" % (self.r,)


class NormExp:
    """Norm exponent s with |z| = p^(-s); exact or a guaranteed lower bound."""

    __slots__ = ("value", "exact")

    def __init__(self, value, exact):
        self.value = value if value is INF else Rat(value)
        self.exact = exact

    def __eq__(self, other):
        return (isinstance(other, NormExp) and self.value == other.value
                and self.exact == other.exact)

    def __repr__(self):
        kind = "exact" if self.exact else "lower bound"
        return "NormExp(%s, %s)" % (self.value, kind)

    def as_dict(self):
        return {"s": "inf" if self.value is INF else str(self.value),
                "exact": self.exact}


class BElt:
    """Sum of p^m*[x_m] over strictly increasing integer m, plus a tail."""

    __slots__ = ("p", "field", "terms", "tail")

    def __init__(self, field, terms, tail=None):
        terms = tuple(terms)
        prev = None
        for m, x in terms:
            if not isinstance(m, int):
                raise UsageError("p-exponents must be integers")
            if not isinstance(x, HahnElt) or x.field is not field:
                raise UsageError("term coefficients must share one field")
            if x.cap is not None:
                raise UsageError("term coefficients must be exact")
            if x.is_zero():
                raise UsageError("zero terms are not stored")
            if prev is not None and m <= prev:
                raise UsageError("p-exponents must strictly increase")
            prev = m
        self.p = field.p
        self.field = field
        self.terms = terms
        self.tail = tail

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    def is_exact_zero(self):
        return not self.terms and self.tail is None

    def __eq__(self, other):
        return (isinstance(other, BElt) and self.field is other.field
                and self.terms == other.terms and self.tail is other.tail)

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join("p^%d*[%s]" % (m, x.render()) for m, x in self.terms)
        if self.tail is not None:
            body += " + tail"
        return "BElt(%s)" % body

    def as_dict(self):
        return {
            "p": self.p,
            "terms": [{"m": m, "v_F": str(v_F(x)), "x": x.render()}
                      for m, x in self.terms],
            "has_tail": self.tail is not None,
        }


def teich(x):
    """[x] as an exact one-term element."""
    if x.is_zero():
        return BElt.zero(x.field)
    return BElt(x.field, ((0, x),))


def _coerce_r(rho):
    if isinstance(rho, Rho):
        return rho.r
    return Rho(rho).r


def norm_exp(z, rho):
    """s = min over terms of m*r + v_F(x_m), exact unless the tail reaches it."""
    r = _coerce_r(rho)
    s_exp = None
    for m, x in z.terms:
        v = m * r + v_F(x)
        if s_exp is None or v < s_exp:
            s_exp = v
    if z.tail is None:
        return NormExp(INF, True) if s_exp is None else NormExp(s_exp, True)
    f = z.tail.floor_at(r)
    if s_exp is not None and s_exp < f:
        return NormExp(s_exp, True)
    return NormExp(f if s_exp is None else min(f, s_exp), False)


def _full_floor(z):
    """Floor certificate for the whole element (terms and tail together)."""
    parts = [LineFloor(m, v_F(x)) for m, x in z.terms]
    if z.tail is not None:
        parts.append(z.tail)
    if not parts:
        return None
    return parts[0] if len(parts) == 1 else MinFloor(parts)


def phi(z):
    """Frobenius: p^m*[x] -> p^m*[x^p]; tail exponents scale by p."""
    terms = tuple((m, hahn_frobenius(x, 1)) for m, x in z.terms)
    tail = None if z.tail is None else z.tail.phi(z.p)
    return BElt(z.field, terms, tail)


# ---------------------------------------------------------------------------
# arithmetic: collisions between equal p-exponents are resolved by length-n
# Witt addition; coordinates past the carry depth go into the tail bound

_ring_cache = {}


def _hahn_ring(field):
    if field not in _ring_cache:
        _ring_cache[field] = HahnRing(field)
    return _ring_cache[field]


NEG_DEPTH = 10


def _assemble(field, pieces, tails, depth=CARRY_DEPTH, m_cap=None):
    """Resolve signed pieces (sign, x) per p-exponent into canonical terms.

    Same-sign collisions go through Witt addition, opposite signs through
    Witt subtraction; coordinates past the carry depth become tail lines.
    A leftover negative at p = 2 expands as -[x] = [x] + p[x] + p^2[x] + ...
    truncated with its own tail line; for odd p it is the exact term [-x].
    With m_cap set, pieces at p-exponent >= m_cap go straight to tail lines,
    which keeps carry cascades finite on iterated products."""
    p = field.p
    ring = _hahn_ring(field)
    work = {}
    tail_parts = list(tails)
    # structure polynomials grow steeply with p; shallower carries for p >= 5
    # only coarsen the tail lines, they never affect soundness
    base_depth = depth if p <= 3 else min(depth, 2)

    size_cap = PAYLOAD_TERMS if m_cap is not None else PAYLOAD_TERMS_FREE

    def trim(m, x):
        # swapping [x] for [x'] perturbs every Witt coordinate by something
        # vanishing to order V at the dropped part, hence the family of lines
        if len(x.terms) <= size_cap:
            return x
        cut = x.terms[size_cap][0]
        if cut <= 0:
            return x
        tail_parts.append(FamilyFloor(p, 0, Rat(cut), m))
        return HahnElt(field, x.terms[:size_cap])

    def push(m, sign, x):
        if x.is_zero():
            return
        if m_cap is not None and m >= m_cap:
            tail_parts.append(LineFloor(m, v_F(x)))
        else:
            work.setdefault(m, []).append((sign, trim(m, x)))

    for m, sxs in pieces.items():
        for s, x in sxs:
            push(m, s, x)
    out = []
    budget = ASSEMBLE_BUDGET
    while work:
        if budget <= 0:
            # dense carry cascade: every unresolved piece is soundly covered
            # by its own line, and draining keeps assembly terminating
            for m, sxs in work.items():
                for s, x in sxs:
                    tail_parts.append(LineFloor(m, v_F(x)))
            break
        m = min(work)
        xs = work.pop(m)
        d = base_depth if m_cap is None else max(1, min(base_depth, m_cap - m))
        while len(xs) > 1 and budget > 0:
            budget -= 1
            s1, x1 = xs.pop()
            s2, x2 = xs.pop()
            if s1 == s2:
                if (x1 + x2).is_zero():
                    # [a] + [-a] = 0 for odd p; [a] + [a] = p*[a] for p = 2,
                    # both exact at every length
                    if p == 2:
                        push(m + 1, s1, x1)
                    continue
                wres = _wadd(witt_teich(x1, p, d, ring),
                             witt_teich(x2, p, d, ring))
                out_sign = s1
            else:
                if x1 == x2:
                    continue  # [x] - [x] = 0 at every length
                if s1 < 0:
                    x1, x2 = x2, x1
                wres = _wsub(witt_teich(x1, p, d, ring),
                             witt_teich(x2, p, d, ring))
                out_sign = 1
            for i, c in enumerate(wres.components):
                if c.is_zero():
                    continue
                if i == 0:
                    xs.append((out_sign, trim(m, c)))
                else:
                    push(m + i, out_sign, hahn_frobenius(c, -i))
            tail_parts.append(LineFloor(m + d, min(v_F(x1), v_F(x2))))
        if len(xs) > 1:
            # budget ran out mid-slot; cover what is left
            for s, x in xs:
                tail_parts.append(LineFloor(m, v_F(x)))
        elif xs:
            s, x = xs[0]
            if s > 0:
                out.append((m, x))
            elif p != 2:
                out.append((m, -x))
            else:
                out.append((m, x))
                for i in range(1, NEG_DEPTH):
                    push(m + i, 1, x)
                tail_parts.append(LineFloor(m + NEG_DEPTH, v_F(x)))
    out.sort(key=lambda mx: mx[0])
    if not tail_parts:
        tail = None
    elif len(tail_parts) == 1:
        tail = tail_parts[0]
    else:
        tail = MinFloor(tail_parts)
    return tuple(out), tail


def _merge(z, w, w_sign, m_cap=None):
    if z.field is not w.field:
        raise UsageError("mixed fields")
    pieces = {}
    for m, x in z.terms:
        pieces.setdefault(m, []).append((1, x))
    for m, x in w.terms:
        pieces.setdefault(m, []).append((w_sign, x))
    tails = [t for t in (z.tail, w.tail) if t is not None]
    terms, tail = _assemble(z.field, pieces, tails, m_cap=m_cap)
    return BElt(z.field, terms, tail)


def belt_add(z, w, m_cap=None):
    return _merge(z, w, 1, m_cap)


def belt_sub(z, w, m_cap=None):
    return _merge(z, w, -1, m_cap)


def belt_neg(z):
    pieces = {}
    for m, x in z.terms:
        pieces.setdefault(m, []).append((-1, x))
    tails = [z.tail] if z.tail is not None else []
    terms, tail = _assemble(z.field, pieces, tails)
    return BElt(z.field, terms, tail)


def belt_mul(z, w, m_cap=None):
    if z.field is not w.field:
        raise UsageError("mixed fields")
    pieces = {}
    for m, x in z.terms:
        for l, y in w.terms:
            pieces.setdefault(m + l, []).append((1, x * y))
    tails = []
    if z.tail is not None:
        for l, y in w.terms:
            tails.append(ShiftFloor(z.tail, l, v_F(y)))
    if w.tail is not None:
        for m, x in z.terms:
            tails.append(ShiftFloor(w.tail, m, v_F(x)))
    if z.tail is not None and w.tail is not None:
        tails.append(SumFloor((z.tail, w.tail)))
    terms, tail = _assemble(z.field, pieces, tails, m_cap=m_cap)
    return BElt(z.field, terms, tail)


def shift_p(z, a):
    """Multiply by p^a exactly (a may be negative)."""
    terms = tuple((m + a, x) for m, x in z.terms)
    tail = None if z.tail is None else ShiftFloor(z.tail, a)
    return BElt(z.field, terms, tail)


def _int_digit_expansion(p, c, depth):
    """Teichmuller digits of the integer c to the given depth, plus whether
    the truncation is exact (all digit lifts are 0 or +-1 and they add to c)."""
    digits = witt_digits_of_int(p, c, depth)
    lifts = []
    exact = True
    for g in digits:
        if g == 0:
            lifts.append(0)
        elif g == 1:
            lifts.append(1)
        elif p > 2 and g == p - 1:
            lifts.append(-1)
        else:
            lifts.append(None)
            exact = False
    if exact:
        total = sum(s * p ** i for i, s in enumerate(lifts))
        exact = total == c
    return digits, exact


def scalar_int(c, z, depth=SCALAR_DIGITS, m_cap=None):
    """Multiply by an integer via its Teichmuller digit expansion."""
    if c == 0:
        return BElt.zero(z.field)
    field = z.field
    p = z.p
    digits, exact = _int_digit_expansion(p, c, depth)
    pieces = {}
    tails = []
    for i, g in enumerate(digits):
        if g == 0:
            continue
        gamma = field.from_int(g)
        for m, x in z.terms:
            pieces.setdefault(i + m, []).append((1, x.scale_coeff(gamma)))
        if z.tail is not None:
            tails.append(ShiftFloor(z.tail, i))
    if not exact:
        zf = _full_floor(z)
        if zf is not None:
            tails.append(ShiftFloor(zf, depth))
    terms, tail = _assemble(field, pieces, tails, m_cap=m_cap)
    return BElt(field, terms, tail)


def prune(z, m_cap=PRUNE_M):
    """Move terms with p-exponent >= m_cap into the tail bound."""
    keep = []
    dropped = []
    for m, x in z.terms:
        if m < m_cap:
            keep.append((m, x))
        else:
            dropped.append(LineFloor(m, v_F(x)))
    if not dropped:
        return z
    parts = dropped + ([z.tail] if z.tail is not None else [])
    tail = parts[0] if len(parts) == 1 else MinFloor(parts)
    return BElt(z.field, tuple(keep), tail)


# ---------------------------------------------------------------------------
# 1-units: [eps] - 1 and log[eps]

def teich_minus_one(eps, n=CARRY_DEPTH):
    """Witt expansion of [eps] - 1 to length n, with a tail bound using the
    fact that every coordinate vanishes at eps = 1 to order v_F(eps - 1)."""
    if not isinstance(eps, HahnElt) or eps.cap is not None:
        raise UsageError("exact element required")
    field = eps.field
    one = HahnElt.one(field)
    d = eps - one
    if d.is_zero():
        return BElt.zero(field)
    v0 = v_F(d)
    if not v0 > 0:
        raise DomainError("not a 1-unit")
    p = field.p
    ring = _hahn_ring(field)
    diff = _wsub(witt_teich(eps, p, n, ring), witt_teich(one, p, n, ring))
    terms = []
    for i, c in enumerate(diff.components):
        if c.is_zero():
            continue
        root = c if i == 0 else hahn_frobenius(c, -i)
        terms.append((i, root))
    return BElt(field, tuple(terms), FamilyFloor(p, n, v0))


def log_teich(eps, terms=8, n=CARRY_DEPTH):
    """Truncated alternating series sum_k ([eps]-1)^k / k, k = 1..terms.

    Division by k shifts the p-exponent by -v_p(k) and multiplies by an
    integer approximation of the unit part's inverse; both the approximation
    error and all omitted k > terms go into the tail bound."""
    K = int(terms)
    if K < 1 or K > 64:
        raise UsageError("series length out of range")
    if n < 1:
        raise UsageError("carry depth out of range")
    z = teich_minus_one(eps, n)
    if z.is_exact_zero():
        return z
    field = z.field
    p = z.p
    cap = LOG_M_CAP
    zfloor = _full_floor(z)
    acc = BElt.zero(field)
    zk = None
    for k in range(1, K + 1):
        zk = z if zk is None else belt_mul(zk, z, m_cap=cap)
        a = 0
        kk = k
        while kk % p == 0:
            kk //= p
            a += 1
        # divide by k: unit part via an inverse mod p^SCALAR_DIGITS, p-part
        # as an exact shift; the sign rides along with the unit scalar
        sign = 1 if k % 2 == 1 else -1
        if kk == 1:
            term = zk if sign == 1 else scalar_int(-1, zk, m_cap=cap)
        else:
            ubar = pow(kk, -1, p ** SCALAR_DIGITS)
            term = scalar_int(sign * ubar, zk, m_cap=cap)
            zkf = _full_floor(zk)
            extra = ShiftFloor(zkf, SCALAR_DIGITS)
            tail = extra if term.tail is None else MinFloor((term.tail, extra))
            term = BElt(field, term.terms, tail)
        if a:
            term = shift_p(term, -a)
        acc = belt_add(acc, term, m_cap=cap)
    log_tail = LogTailFloor(p, zfloor, K)
    tail = log_tail if acc.tail is None else MinFloor((acc.tail, log_tail))
    return BElt(field, acc.terms, tail)


def phi_eigen_residual(eps, terms=8, n=CARRY_DEPTH):
    """phi(log[eps]) - p*log[eps]; should vanish up to the tail bound."""
    L = log_teich(eps, terms, n)
    return belt_sub(phi(L), shift_p(L, 1), m_cap=LOG_M_CAP + 1)


def phi_eigen_check(eps, r_grid, terms=8, n=CARRY_DEPTH):
    """True when every explicit residual term sits at or above the residual's
    own tail floor on the whole grid: the residual is tail-sized noise."""
    res = phi_eigen_residual(eps, terms, n)
    for r in r_grid:
        ne = norm_exp(res, Rho(r))
        if ne.value is INF:
            continue
        if ne.exact:
            return False
    return True


def eta_valuation(j_data, z):
    """Valuation of the image of z in the untilt indexed by j, in the common
    value group: min over terms of m*(j^2*v_F(a)) + v_F(x). Returns a Rat
    (or the infinity marker for 0) when determinate, else a lower-bound
    NormExp."""
    vfa, j = j_data
    vfa = Rat(vfa)
    if vfa <= 0:
        raise DomainError("base valuation must be positive")
    j = int(j)
    if j < 1:
        raise DomainError("index must be >= 1")
    ne = norm_exp(z, Rho(j * j * vfa))
    if ne.exact:
        return ne.value
    return ne
