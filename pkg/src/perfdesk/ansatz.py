"""Valuation-scaling ansatz points.

A point is determined by a base element a with 0 < v_F(a) in a perfectoid
Hahn field; its primitives are the powers a^(j^2) for j = 1..(l-1)/2, and
the induced residue towers are tracked purely at the valuation level in the
common value group normalized by v(p) = 1.
"""

from .errors import DomainError, UsageError
from .numkit import Fq, Rat, is_prime
from .tilt import HahnElt, apply_aut, v_F

LABELS = ("canonical", "special", "generic")


class SigmaPoint:
    """Base a plus the derived primitive list [(j, a^(j^2))]."""

    __slots__ = ("ell", "ell_star", "a", "primitives", "label", "anchor_index")

    def __init__(self, ell, a, primitives, label, anchor_index):
        self.ell = ell
        self.ell_star = (ell - 1) // 2
        self.a = a
        self.primitives = tuple(primitives)
        self.label = label
        self.anchor_index = anchor_index

    def __repr__(self):
        return "SigmaPoint(ell=%d, a=%s, label=%s)" % (
            self.ell, self.a.render(), self.label)

    def as_dict(self):
        return {
            "ell": self.ell,
            "ell_star": self.ell_star,
            "base": self.a.render(),
            "base_v": str(v_F(self.a)),
            "label": self.label,
            "anchor_index": self.anchor_index,
            "profile": [str(v) for v in valuation_profile(self)],
        }


def make_sigma_point(a, ell, label="generic", anchor_index=1):
    if not is_prime(ell) or ell % 2 == 0:
        raise DomainError("level must be an odd prime")
    if not isinstance(a, HahnElt) or a.cap is not None:
        raise UsageError("base must be an exact element")
    if a.is_zero():
        raise DomainError("base must be nonzero")
    if not v_F(a) > 0:
        raise DomainError("base must have positive valuation")
    if label not in LABELS:
        raise UsageError("unknown label")
    ell_star = (ell - 1) // 2
    if not 1 <= anchor_index <= ell_star:
        raise UsageError("anchor index out of range")
    primitives = []
    power = None
    for j in range(1, ell_star + 1):
        power = a ** (j * j)
        primitives.append((j, power))
    return SigmaPoint(ell, a, primitives, label, anchor_index)


def valuation_profile(sp):
    """[v_{K_j}(p)]_j computed from the stored primitives: v_F(a^(j^2))."""
    return [v_F(power) for _j, power in sp.primitives]


def special_point_thm10(ell, field=None):
    """Base a = t^(1/ell_star^2); its profile ends at exactly 1, so the last
    tower member is the canonical untilt."""
    if not is_prime(ell) or ell % 2 == 0 or ell < 3:
        raise DomainError("level must be an odd prime >= 3")
    if field is None:
        field = Fq(2, 1)
    ell_star = (ell - 1) // 2
    a = HahnElt.monomial(field, Rat(1, ell_star * ell_star))
    return make_sigma_point(a, ell, label="special", anchor_index=ell_star)


def canonical_point(ell, field=None):
    """Base a = t with v_F(t) = 1; the first tower member is canonical."""
    if field is None:
        field = Fq(2, 1)
    return make_sigma_point(HahnElt.t(field), ell, label="canonical",
                            anchor_index=1)


def act(aut, sp):
    """Apply a tilt automorphism to the base; the primitive shape persists:
    the image of a^(j^2) is (image of a)^(j^2), checked exactly."""
    new_a = apply_aut(aut, sp.a)
    out = make_sigma_point(new_a, sp.ell, label=sp.label,
                           anchor_index=sp.anchor_index)
    for (j, old_pow), (j2, new_pow) in zip(sp.primitives, out.primitives):
        if j != j2 or apply_aut(aut, old_pow) != new_pow:
            raise DomainError("automorphism broke the primitive shape")
    return out


def scalar_valuation(sp, z_val, j):
    """Valuation scaling along the tower: v_{K_j}(z) = j^2 * v_{K_1}(z)."""
    j = int(j)
    if not 1 <= j <= sp.ell_star:
        raise DomainError("index out of range")
    return j * j * Rat(z_val)
