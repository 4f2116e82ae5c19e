"""Command-line driver: verification suites, configuration and reports.

Every suite builds a deterministic list of check records; a record carries
an id, a self-contained claim, a pass/fail status and a witness dictionary
of exact rendered values. Reports are byte-stable in canonical mode.
"""

import argparse
import csv
import io
import json
import random
import sys
import time

from .ansatz import (act, canonical_point, make_sigma_point,
                     special_point_thm10, valuation_profile)
from .bring import BElt, Rho, norm_exp, phi_eigen_check, teich
from .errors import (ConsistencyError, DomainError, InversionError,
                     PrecisionError, RangeError, UsageError)
from .loglink import (artin_hasse, diagram_check, lubin_tate_log,
                      padic_log_unit, series_compositional_inverse)
from .numkit import Fq, PadicInt, Rat, is_prime
from .pilot import (build_theta_tilde_sample, corollary_c_check,
                    lower_bound_check, pilot_sum, sup_with_tau,
                    trivial_upper_bound_check)
from .tate_theta import (ThetaSeries, TorsionPoint, discriminant_series,
                         quasi_periodicity_residual, theta_eval,
                         theta_value_ratio, xi_valuation, zeta_2ell_point,
                         zeta_ell_point)
from .tilt import HahnElt, TiltAut, v_F
from .witt import (WittVec, IntRing, derive_witt_polys, ghost, teichmuller,
                   witt_add, witt_mul)

SUITES = ("theta-check", "ansatz", "pilot-bound", "witt-selftest",
          "loglink-check", "all")
FORMATS = ("json", "text", "csv")
DEFAULT_RHO_GRID = (Rat(2), Rat(1), Rat(1, 2), Rat(1, 4))
ORDER_CAP = 4000
DEGREE_CAP = 200
WITT_N_CAP = 4

_CHECK_ERRORS = (ConsistencyError, DomainError, PrecisionError,
                 InversionError, RangeError, UsageError)


class RunConfig:
    """Validated run parameters; every suite is a pure function of these."""

    __slots__ = ("p", "ell", "vq", "order", "degree", "witt_n", "rho_grid",
                 "seed", "fmt", "canonical")

    def __init__(self, p=2, ell=5, vq=Rat(1), order=None, degree=None,
                 witt_n=3, rho_grid=DEFAULT_RHO_GRID, seed=0, fmt="json",
                 canonical=False):
        self.p = int(p)
        self.ell = int(ell)
        self.vq = Rat(vq)
        self.order = None if order is None else int(order)
        self.degree = None if degree is None else int(degree)
        self.witt_n = int(witt_n)
        self.rho_grid = tuple(Rat(r) for r in rho_grid)
        self.seed = int(seed)
        self.fmt = fmt
        self.canonical = bool(canonical)
        self._validate()

    def _validate(self):
        if not is_prime(self.p):
            raise UsageError("p must be prime")
        if not is_prime(self.ell) or self.ell % 2 == 0:
            raise UsageError("ell must be an odd prime")
        if self.ell == self.p:
            raise UsageError("ell must differ from p")
        if self.vq <= 0:
            raise UsageError("vq must be positive")
        if self.order is not None and not 2 <= self.order <= ORDER_CAP:
            raise UsageError("order out of range")
        if self.degree is not None and not 2 <= self.degree <= DEGREE_CAP:
            raise UsageError("degree out of range")
        if not 1 <= self.witt_n <= WITT_N_CAP:
            raise UsageError("witt length out of range")
        if not self.rho_grid:
            raise UsageError("rho grid must be nonempty")
        if any(r < 0 for r in self.rho_grid):
            raise UsageError("rho grid exponents must be >= 0")
        if self.seed < 0:
            raise UsageError("seed must be >= 0")
        if self.fmt not in FORMATS:
            raise UsageError("unknown format")

    def as_dict(self):
        return {
            "p": self.p,
            "ell": self.ell,
            "vq": str(self.vq),
            "order": self.order,
            "degree": self.degree,
            "witt_n": self.witt_n,
            "rho_grid": [str(r) for r in self.rho_grid],
            "seed": self.seed,
            "format": self.fmt,
            "canonical": self.canonical,
        }


def _record(checks, cid, claim, fn):
    """Run one check body; any raised precondition or consistency error is a
    failing record, never a crash."""
    try:
        ok, witness = fn()
    except _CHECK_ERRORS as exc:
        ok, witness = False, {"error": str(exc)}
    checks.append({
        "id": cid,
        "claim": claim,
        "status": "pass" if ok else "fail",
        "witness": witness or {},
    })


# ---------------------------------------------------------------------------
# theta suite

def _delta_oracle(order):
    # pentagonal-number series for prod (1-q^n), then the 24th power by
    # binary squaring; an independent route to the discriminant coefficients
    eta = [0] * (order + 1)
    eta[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        eta[e1] += sign
        if e2 <= order:
            eta[e2] += sign
        k += 1

    def mul(a, b):
        out = [0] * (order + 1)
        for i, c in enumerate(a):
            if c:
                for j in range(order + 1 - i):
                    if b[j]:
                        out[i + j] += c * b[j]
        return out

    out = [0] * (order + 1)
    out[0] = 1
    base = eta
    e = 24
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def _suite_theta(cfg):
    checks = []
    ell = cfg.ell
    trunc = cfg.order if cfg.order is not None else 24 * ell
    theta = ThetaSeries(ell, trunc=trunc)
    points = (("zeta-l", zeta_ell_point()), ("zeta-2l", zeta_2ell_point()))
    for j in (0, 1, 2):
        for label, pt in points:
            def body(j=j, pt=pt):
                res = quasi_periodicity_residual(theta, j, pt)
                return res.is_zero(), {"ell": str(ell), "trunc": str(trunc)}
            _record(checks, "quasi-periodicity-j%d-%s" % (j, label),
                    "theta(S^j u) = (-1)^j S^(-j^2) u^(-2j) theta(u) "
                    "up to the truncation", body)

    def zero_at_one():
        return theta_eval(theta, TorsionPoint(0, 0)).is_zero(), {
            "ell": str(ell)}
    _record(checks, "theta-zero-at-1",
            "the reduced theta series vanishes at u = 1", zero_at_one)
    for j in (1, 2):
        def zero_half(j=j):
            val = theta_eval(theta, TorsionPoint(0, j * ell))
            return val.is_zero(), {"ell": str(ell), "j": str(j)}
        _record(checks, "theta-zero-halfperiod-%d" % j,
                "the reduced theta series vanishes at the half-period "
                "power u = q^(j/2)", zero_half)

    for j in range(1, (ell - 1) // 2 + 1):
        def ratio(j=j):
            mono = theta_value_ratio(ell, j)
            return True, {"ell": str(ell), "j": str(j),
                          "monomial": mono.render(),
                          "xi_valuation": str(xi_valuation(ell, j, cfg.vq))}
        _record(checks, "theta-value-ratio-j%d" % j,
                "theta(t^j zeta_l)/theta(zeta_l) equals "
                "(-1)^j t^(-j^2) zeta_l^(-2j) exactly", ratio)

    def disc():
        series = discriminant_series(8, ell)
        oracle = _delta_oracle(7)
        got = []
        for k in range(8):
            c = series.terms.get(2 * ell * (k + 1))
            got.append(0 if c is None else c.coords[0])
        return got == oracle[:8], {"coefficients":
                                   ",".join(str(c) for c in got)}
    _record(checks, "discriminant-first-8",
            "the first 8 product-formula discriminant coefficients match "
            "the pentagonal-number expansion", disc)
    return checks, None


# ---------------------------------------------------------------------------
# ansatz suite

def _random_base(rng, field):
    e = Rat(rng.randrange(1, 8), rng.randrange(1, 7))
    gen = field.multiplicative_generator()
    coeff = gen ** rng.randrange(field.order() - 1)
    base = HahnElt.monomial(field, e, coeff)
    if rng.randrange(2):
        e2 = e + Rat(rng.randrange(1, 6), rng.randrange(1, 5))
        coeff2 = gen ** rng.randrange(field.order() - 1)
        base = base + HahnElt.monomial(field, e2, coeff2)
    return base


def _suite_ansatz(cfg):
    checks = []
    rng = random.Random(cfg.seed)
    field = Fq(cfg.p, 2)

    for ell in (5, 7, 11):
        def profiles(ell=ell):
            for _ in range(20):
                sp = make_sigma_point(_random_base(rng, field), ell)
                prof = valuation_profile(sp)
                for j in range(1, sp.ell_star + 1):
                    if prof[j - 1] != j * j * prof[0]:
                        return False, {"ell": str(ell),
                                       "base": sp.a.render()}
            return True, {"ell": str(ell), "bases": "20"}
        _record(checks, "profile-scaling-l%d" % ell,
                "the stored primitives give v_Kj(p) = j^2 * v_K1(p) for "
                "random bases", profiles)

    def special(ell=cfg.ell):
        sp = special_point_thm10(ell)
        prof = valuation_profile(sp)
        return prof[-1] == 1, {"ell": str(ell),
                               "profile": ",".join(str(v) for v in prof)}
    _record(checks, "special-point-profile",
            "the distinguished low point has final tower valuation exactly 1",
            special)

    def closure():
        sp = make_sigma_point(_random_base(rng, field), cfg.ell)
        up = act(TiltAut.frobenius(1), sp)
        fixed = act(TiltAut.coefficient_galois(1), sp)
        ok = (valuation_profile(up)
              == [cfg.p * v for v in valuation_profile(sp)]
              and valuation_profile(fixed) == valuation_profile(sp))
        return ok, {"ell": str(cfg.ell)}
    _record(checks, "automorphism-closure",
            "tilt Frobenius scales every profile entry by p and coefficient "
            "Galois preserves it", closure)

    def norm_square_law():
        ell_star = (cfg.ell - 1) // 2
        for _ in range(10):
            r = Rat(rng.randrange(1, 9), rng.randrange(1, 5))
            x = _random_base(rng, field)
            base_ne = norm_exp(teich(x), Rho(r))
            for j in range(1, ell_star + 1):
                ne = norm_exp(teich(x ** (j * j)), Rho(r))
                if not ne.exact or ne.value != j * j * base_ne.value:
                    return False, {"r": str(r), "j": str(j)}
        return True, {"radii": "10"}
    _record(checks, "teich-norm-square-law",
            "|[x^(j^2)]| has norm exponent j^2 times that of [x] at every "
            "radius", norm_square_law)

    def norm_rho_free():
        for _ in range(10):
            x = _random_base(rng, field)
            vals = {str(norm_exp(teich(x), Rho(r)).value)
                    for r in cfg.rho_grid}
            if len(vals) != 1:
                return False, {"base": x.render()}
        return True, {"grid": ",".join(str(r) for r in cfg.rho_grid)}
    _record(checks, "teich-norm-rho-independent",
            "the norm exponent of a Teichmuller lift does not depend on the "
            "radius", norm_rho_free)
    return checks, None


# ---------------------------------------------------------------------------
# pilot suite

def _suite_pilot(cfg):
    checks = []
    for ell in (3, 5, 7, 11, 13, 101):
        def verdict(ell=ell):
            rep = lower_bound_check(ell, cfg.vq)
            expected = (2 * ell - 1) * (ell - 3) > 0
            return rep.verdict == expected, {
                "ell": str(ell),
                "pilot": str(rep.pilot),
                "rhs": str(rep.rhs),
                "verdict": str(rep.verdict).lower(),
                "expected": str(expected).lower(),
            }
        _record(checks, "pilot-verdict-l%d" % ell,
                "the pilot exponent (1/12)(1+1/l*)vq is below (l*/2l)vq "
                "exactly when (2l-1)(l-3) > 0", verdict)

    def closed_values():
        r5 = lower_bound_check(5)
        r7 = lower_bound_check(7)
        ok = (r5.pilot == Rat(1, 8) and r5.rhs == Rat(1, 5)
              and r7.pilot == Rat(1, 9) and r7.rhs == Rat(3, 14))
        return ok, {"l5": "%s vs %s" % (r5.pilot, r5.rhs),
                    "l7": "%s vs %s" % (r7.pilot, r7.rhs)}
    _record(checks, "pilot-closed-form",
            "the closed-form exponents at unit vq are 1/8 vs 1/5 and "
            "1/9 vs 3/14", closed_values)

    def corollary():
        e5 = corollary_c_check(cfg.ell, cfg.vq)
        e3 = corollary_c_check(3, cfg.vq)
        return e5 <= 0 and e3 == 0, {"exponent": str(e5),
                                     "equality_exponent": str(e3)}
    _record(checks, "corollary-constant",
            "the extremal comparison constant has exponent pilot - rhs <= 0 "
            "with equality at level 3", corollary)

    sample = build_theta_tilde_sample(ell=cfg.ell, p=cfg.p, vq=cfg.vq,
                                      seed=cfg.seed)

    def size():
        cnt = sample.count()
        return cnt >= 100, {"distinct": str(cnt)}
    _record(checks, "sample-size",
            "the constructed lift sample holds at least 100 distinct "
            "elements", size)

    def trivial():
        rep = trivial_upper_bound_check(sample)
        return rep["ok"], {"checked": str(rep["checked"]),
                           "failures": str(len(rep["failures"]))}
    _record(checks, "trivial-upper-bound",
            "every sample element has norm exponent >= 0 at the boundary "
            "radius", trivial)

    def sup_check():
        sp = canonical_point(cfg.ell, sample.field)
        taus = [BElt.zero(sample.field), sample.tau_pool[1]]
        for r in cfg.rho_grid:
            pv = pilot_sum(sp, cfg.vq, Rho(r))
            sv = sup_with_tau(sp, cfg.vq, Rho(r), taus)
            if sv > pv:
                return False, {"r": str(r), "sup": str(sv),
                               "pilot": str(pv)}
        return True, {"grid": ",".join(str(r) for r in cfg.rho_grid)}
    _record(checks, "sup-vs-pilot",
            "the tau-perturbed supremum exponent never exceeds the pilot "
            "sum", sup_check)
    return checks, None


# ---------------------------------------------------------------------------
# witt suite

def _suite_witt(cfg):
    checks = []
    rng = random.Random(cfg.seed)
    n = min(cfg.witt_n, 3)
    for p in (2, 3, 5):
        def ghost_hom(p=p):
            for _ in range(200):
                a = WittVec(p, n, IntRing,
                            [rng.randrange(-9, 10) for _ in range(n)])
                b = WittVec(p, n, IntRing,
                            [rng.randrange(-9, 10) for _ in range(n)])
                ga, gb = ghost(a), ghost(b)
                if ghost(witt_add(a, b)) != tuple(x + y
                                                  for x, y in zip(ga, gb)):
                    return False, {"p": str(p), "op": "add"}
                if ghost(witt_mul(a, b)) != tuple(x * y
                                                  for x, y in zip(ga, gb)):
                    return False, {"p": str(p), "op": "mul"}
            return True, {"p": str(p), "pairs": "200", "n": str(n)}
        _record(checks, "ghost-homomorphism-p%d" % p,
                "ghost components of Witt sums and products are pointwise "
                "sums and products", ghost_hom)

    def s1_shape():
        ps = derive_witt_polys(2, 2)
        want = {(0, 1, 0, 0): 1, (0, 0, 0, 1): 1, (1, 0, 1, 0): -1}
        return ps.sums[1] == want, {"monomials": str(len(ps.sums[1]))}
    _record(checks, "sum-poly-s1-p2",
            "the second addition polynomial at p = 2 is X1 + Y1 - X0*Y0",
            s1_shape)

    def teich_mult():
        for _ in range(50):
            x = rng.randrange(-9, 10)
            y = rng.randrange(-9, 10)
            prod = witt_mul(teichmuller(x, 2, 3, IntRing),
                            teichmuller(y, 2, 3, IntRing))
            if prod != teichmuller(x * y, 2, 3, IntRing):
                return False, {"x": str(x), "y": str(y)}
        return True, {"pairs": "50"}
    _record(checks, "teichmuller-multiplicative",
            "[x][y] = [xy] componentwise for integer Teichmuller vectors",
            teich_mult)
    return checks, None


# ---------------------------------------------------------------------------
# loglink suite

def _suite_loglink(cfg):
    checks = []
    rep = diagram_check(cfg.p, cfg.degree)
    flags = {
        "log_of_artin_hasse": rep["log_of_artin_hasse_zero"],
        "additivity": rep["additivity_zero"],
        "linear_part": rep["group_law_linear_part"],
        "valuation_scaling": rep["valuation_scaling"],
    }
    _record(checks, "log-of-artin-hasse",
            "substituting the Artin-Hasse series into log recovers the sum "
            "of T^(p^n)/p^n",
            lambda: (flags["log_of_artin_hasse"],
                     {"trunc": str(rep["trunc"])}))
    _record(checks, "group-law-additivity",
            "log of the reconstructed group law equals the sum of the logs",
            lambda: (flags["additivity"], {"trunc": str(rep["trunc"])}))
    _record(checks, "group-law-linear-part",
            "the reconstructed group law starts X + Y with no constant term",
            lambda: (flags["linear_part"], {}))
    _record(checks, "valuation-scaling",
            "the transported log-image valuations reproduce the tower "
            "profile ratio",
            lambda: (flags["valuation_scaling"],
                     {"profile_ratio": rep["profile_ratio"],
                      "valuation_ratio": rep["valuation_ratio"]}))

    ah_degree = cfg.p ** 3 if cfg.degree is None else cfg.degree

    def integral():
        artin_hasse(cfg.p, ah_degree)
        return True, {"max_degree": str(ah_degree)}
    _record(checks, "artin-hasse-integral",
            "every Artin-Hasse coefficient up to the cap is p-integral",
            integral)

    def exp_log():
        trunc = rep["trunc"]
        lg = lubin_tate_log(cfg.p, trunc)
        eg = series_compositional_inverse(lg)
        var = lg.compose(eg)
        ok = (var.coeffs == {1: Rat(1)}
              and eg.compose(lg).coeffs == {1: Rat(1)})
        return ok, {"trunc": str(trunc)}
    _record(checks, "exp-log-inverse-pair",
            "the group exponential and logarithm invert each other up to "
            "the truncation", exp_log)

    def plog():
        rng = random.Random(cfg.seed)
        prec = 6
        step = 4 if cfg.p == 2 else cfg.p
        for _ in range(10):
            a = 1 + step * rng.randrange(1, cfg.p ** (prec - 2))
            b = 1 + step * rng.randrange(1, cfg.p ** (prec - 2))
            ua = PadicInt(cfg.p, prec, a)
            ub = PadicInt(cfg.p, prec, b)
            if (padic_log_unit(ua * ub, prec)
                    != padic_log_unit(ua, prec) + padic_log_unit(ub, prec)):
                return False, {"a": str(a), "b": str(b)}
        return True, {"pairs": "10", "prec": str(prec)}
    _record(checks, "padic-log-homomorphism",
            "log(uv) = log(u) + log(v) for random 1-units at fixed "
            "precision", plog)

    def eigen():
        rng = random.Random(cfg.seed)
        field = Fq(cfg.p, 2)
        gen = field.multiplicative_generator()
        for _ in range(3):
            e = Rat(rng.randrange(1, 4), rng.randrange(1, 4))
            coeff = gen ** rng.randrange(field.order() - 1)
            eps = HahnElt.one(field) + HahnElt.monomial(field, e, coeff)
            if not phi_eigen_check(eps, cfg.rho_grid, terms=6, n=3):
                return False, {"unit": eps.render()}
        return True, {"units": "3"}
    _record(checks, "phi-eigenvalue-log",
            "Frobenius acts as multiplication by p on log of a lifted "
            "1-unit, up to the tail bound", eigen)

    summary = {
        "identity": {k: bool(v) for k, v in flags.items()},
        "ah_integral_max_degree": ah_degree,
    }
    return checks, summary


_SUITE_FNS = {
    "theta-check": _suite_theta,
    "ansatz": _suite_ansatz,
    "pilot-bound": _suite_pilot,
    "witt-selftest": _suite_witt,
    "loglink-check": _suite_loglink,
}


def run_suite(name, cfg):
    """Execute one named suite (or all of them) and assemble the report."""
    if name not in SUITES:
        raise UsageError("unknown suite: %s" % name)
    t0 = time.monotonic()
    if name == "all":
        checks = []
        summary = {}
        for sub in SUITES[:-1]:
            sub_checks, sub_summary = _SUITE_FNS[sub](cfg)
            for rec in sub_checks:
                rec = dict(rec)
                rec["id"] = "%s/%s" % (sub, rec["id"])
                checks.append(rec)
            if sub_summary:
                summary[sub] = sub_summary
    else:
        checks, summary = _SUITE_FNS[name](cfg)
    failed = sum(1 for rec in checks if rec["status"] != "pass")
    report = {
        "suite": name,
        "config": cfg.as_dict(),
        "checks": checks,
        "failed": failed,
        "status": "pass" if failed == 0 else "fail",
    }
    if summary:
        report["summary"] = summary
    if not cfg.canonical:
        report["elapsed_ms"] = int((time.monotonic() - t0) * 1000)
    return report


def report_exit_status(report):
    return 0 if report["failed"] == 0 else 1


def emit(report, fmt):
    """Render a report as bytes; canonical JSON is byte-stable."""
    if fmt == "json":
        return (json.dumps(report, indent=2, sort_keys=True) + "\n").encode()
    if fmt == "text":
        lines = ["suite: %s" % report["suite"],
                 "status: %s (%d checks, %d failed)" % (
                     report["status"], len(report["checks"]),
                     report["failed"])]
        for rec in report["checks"]:
            lines.append("[%s] %s: %s" % (
                "PASS" if rec["status"] == "pass" else "FAIL",
                rec["id"], rec["claim"]))
            for key in sorted(rec["witness"]):
                lines.append("    %s = %s" % (key, rec["witness"][key]))
        return ("\n".join(lines) + "\n").encode()
    if fmt == "csv":
        keys = sorted({k for rec in report["checks"]
                       for k in rec["witness"]})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "check", "status"] + keys)
        for rec in report["checks"]:
            writer.writerow([report["suite"], rec["id"], rec["status"]]
                            + [str(rec["witness"].get(k, "")) for k in keys])
        return buf.getvalue().encode()
    raise UsageError("unknown format")


def _parse_rho_grid(text):
    parts = [part.strip() for part in text.split(",") if part.strip()]
    if not parts:
        raise UsageError("empty rho grid")
    return tuple(Rat(part) for part in parts)


def load_config_file(path):
    """key=value lines; blank lines and # comments ignored."""
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError("%s:%d: expected key=value" % (path, lineno))
            key, _, value = line.partition("=")
            out[key.strip().replace("-", "_")] = value.strip()
    return out


_CONFIG_KEYS = ("p", "ell", "vq", "order", "degree", "witt_n", "rho_grid",
                "seed", "format", "canonical")


def build_config(args):
    """Merge defaults, config file and flags; flags win."""
    values = {}
    if args.config:
        file_values = load_config_file(args.config)
        unknown = set(file_values) - set(_CONFIG_KEYS)
        if unknown:
            raise UsageError("unknown config keys: %s"
                             % ", ".join(sorted(unknown)))
        values.update(file_values)
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    kwargs = {}
    if "p" in values:
        kwargs["p"] = int(values["p"])
    if "ell" in values:
        kwargs["ell"] = int(values["ell"])
    if "vq" in values:
        kwargs["vq"] = Rat(values["vq"])
    if "order" in values:
        kwargs["order"] = int(values["order"])
    if "degree" in values:
        kwargs["degree"] = int(values["degree"])
    if "witt_n" in values:
        kwargs["witt_n"] = int(values["witt_n"])
    if "rho_grid" in values:
        grid = values["rho_grid"]
        kwargs["rho_grid"] = (_parse_rho_grid(grid)
                              if isinstance(grid, str) else grid)
    if "seed" in values:
        kwargs["seed"] = int(values["seed"])
    if "format" in values:
        kwargs["fmt"] = values["format"]
    if "canonical" in values:
        flag = values["canonical"]
        kwargs["canonical"] = (flag if isinstance(flag, bool)
                               else flag.lower() in ("1", "true", "yes"))
    return RunConfig(**kwargs)


def make_parser():
    parser = argparse.ArgumentParser(
        prog="perfdesk",
        description="exact verification suites for desk-scale period "
                    "arithmetic")
    parser.add_argument("suite", choices=SUITES)
    parser.add_argument("--p", type=int, default=None,
                        help="residue characteristic")
    parser.add_argument("--ell", type=int, default=None,
                        help="odd prime level")
    parser.add_argument("--vq", default=None,
                        help="valuation of the period, as a fraction")
    parser.add_argument("--order", type=int, default=None,
                        help="series truncation order override")
    parser.add_argument("--degree", type=int, default=None,
                        help="formal-group truncation degree override")
    parser.add_argument("--witt-n", dest="witt_n", type=int, default=None,
                        help="Witt vector length (1..%d)" % WITT_N_CAP)
    parser.add_argument("--rho-grid", dest="rho_grid", default=None,
                        help="comma-separated radius exponents")
    parser.add_argument("--seed", type=int, default=None,
                        help="sampling seed")
    parser.add_argument("--format", dest="format", choices=FORMATS,
                        default=None, help="output format")
    parser.add_argument("--canonical", action="store_true", default=None,
                        help="strip environment-dependent report fields")
    parser.add_argument("--config", default=None,
                        help="key=value config file; flags win")
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        report = run_suite(args.suite, cfg)
        payload = emit(report, cfg.fmt)
    except (UsageError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    sys.stdout.buffer.write(payload)
    sys.stdout.buffer.flush()
    return report_exit_status(report)


if __name__ == "__main__":
    sys.exit(main())
