"""Walk through the theta-series identities at level 5: the shift law,
the zero set, the torsion value ratios and the discriminant head.

Run:  python3 demos/theta_identities.py
"""

from perfdesk.numkit import Rat
from perfdesk.tate_theta import (ThetaSeries, TorsionPoint,
                                 discriminant_series,
                                 quasi_periodicity_residual, theta_eval,
                                 theta_value_table, zeta_2ell_point,
                                 zeta_ell_point)

ELL = 5


def main():
    theta = ThetaSeries(ELL, trunc=24 * ELL)
    print("reduced theta at level %d, truncation t^%d" % (2 * ELL,
                                                          theta.trunc))
    print()
    print("shift law theta(S^j u) = (-1)^j S^(-j^2) u^(-2j) theta(u):")
    for j in (0, 1, 2):
        for name, pt in (("zeta_l", zeta_ell_point()),
                         ("zeta_2l", zeta_2ell_point())):
            res = quasi_periodicity_residual(theta, j, pt)
            print("  j=%d at %-8s residual %s" % (
                j, name, "= 0" if res.is_zero() else res.render()))
    print()
    print("zero set on the fundamental annulus:")
    print("  theta(1)       %s" % (
        "= 0" if theta_eval(theta, TorsionPoint(0, 0)).is_zero()
        else "nonzero"))
    for j in (1, 2):
        val = theta_eval(theta, TorsionPoint(0, j * ELL))
        print("  theta(q^(%d/2)) %s" % (j, "= 0" if val.is_zero()
                                        else "nonzero"))
    print()
    print("torsion value ratios theta(t^j zeta_l)/theta(zeta_l):")
    for row in theta_value_table(ELL, Rat(1)):
        print("  j=%d  ratio %-18s v(xi_j) = %s" % (
            row["j"], row["ratio_monomial"], row["xi_valuation"]))
    print()
    series = discriminant_series(8, ELL)
    coeffs = []
    for k in range(8):
        c = series.terms.get(2 * ELL * (k + 1))
        coeffs.append(0 if c is None else c.coords[0])
    print("discriminant q prod (1-q^n)^24: first coefficients")
    print("  " + ", ".join(str(c) for c in coeffs))


if __name__ == "__main__":
    main()
