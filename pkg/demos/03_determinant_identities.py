"""Determinant representations of the tau series.

Three independent determinant forms are expanded symbolically in the
eigenvalue (or time) variables and compared with the direct series,
coefficient by coefficient: the Milne-type one-sided form, the Wick-type
two-sided kernel form (whose exponential-kernel case is the classical
unitary angle integral), and the derivative determinant available when
r(0) = 0.  The bilinear Hirota identity closes the loop.
"""

from fractions import Fraction as F

from taukit import (
    LinearContent,
    RationalContent,
    TInf,
    det_rep_derivatives,
    det_rep_one_side,
    det_rep_two_side,
    hirota_residual,
    symmetry_checks,
)

r = RationalContent(a=[3])
res = det_rep_one_side(r, 2, 2, TInf(), 6)
print("one-sided determinant (N=2, r(k)=k+3, deg 6):",
      "exact match" if res.matches() else "MISMATCH")

res = det_rep_two_side(RationalContent(a=[F(1, 2)]), 2, 2, 6)
print("two-sided kernel determinant (N=2, generic r):",
      "exact match" if res.matches() else "MISMATCH")
print("  prefactor:", res.prefactor)

# the exponential-kernel case: r(k) = 1/k at charge n, kernel e^{x y}
res = det_rep_two_side(RationalContent(b=[0]), 3, 3, 8)
print("exp-kernel determinant (n=3, deg 8):",
      "exact match" if res.matches() else "MISMATCH")
print("  prefactor (0!1!2! normalization):", res.prefactor)

res = det_rep_derivatives(LinearContent(), 2, 6)
print("derivative determinant (r(k)=k, n=2, bidegree 6):",
      "exact match" if res.matches() else "MISMATCH")
print()

for r, n in [(RationalContent(a=[2]), 0), (LinearContent(), 1)]:
    z = hirota_residual(r, n, 6).is_zero()
    print(f"Hirota residual for {r!r} at n={n}:", "identically zero" if z else "NONZERO")

rep = symmetry_checks(RationalContent(a=[2]), 1, 5)
print("swap / reflection / scaling symmetries:", rep)
