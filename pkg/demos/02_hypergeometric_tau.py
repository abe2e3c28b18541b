"""Tau series of hypergeometric type and their one-variable shadows.

The central object is sum_lambda r_lambda(n) s_lambda(t) s_lambda(t*),
driven by a content function r.  Specializing one side to the exponential
point turns it into the hypergeometric function of matrix argument; one
eigenvalue reduces it to the classical series, whose ODE (or q-difference
equation) we verify termwise.
"""

from fractions import Fraction as F

from taukit import (
    Eigs,
    Formal,
    Partition,
    RationalContent,
    TauSpec,
    hyper_pfs,
    hyper_q,
    ode_residual,
    pfs_one_var_coeffs,
    q_difference_residual,
    tau_series,
)

# a generic tau series: r(k) = (k + 1/2), charge 1, both sides formal
r = RationalContent(a=[F(1, 2)])
ts = tau_series(TauSpec(r, 1, Formal(), Formal()), 4)
print("tau series coefficients (r(k) = k + 1/2, n = 1):")
for lam, c in ts.items():
    print(f"  {str(lam):10s} {c}")
print()

# Gauss 2F1 as a one-eigenvalue tau series
a, b, c = F(1, 2), F(1, 3), F(5, 4)
series = hyper_pfs([a, b], [c], 0, Eigs([F(1)]), 8)
print("2F1(1/2, 1/3; 5/4; x) coefficients:")
print(" ", [str(v) for v in series.one_variable_coeffs()[:6]])
assert series.one_variable_coeffs() == pfs_one_var_coeffs([a, b], [c], 8)

res = ode_residual([a, b], [c], 30)
print("hypergeometric ODE residual through degree 29:",
      "all zero" if all(v == 0 for v in res) else "NONZERO")
print()

# the basic (q-deformed) series and its q-difference equation
q = F(1, 3)
qs = hyper_q([1, 2], [3], q, 0, [F(1)], None, 8)
print("2Phi1(q^1, q^2; q^3; q=1/3; x) coefficients:")
print(" ", [str(v) for v in qs.one_variable_coeffs()[:5]])
qres = q_difference_residual([1, 2], [3], q, 30)
print("q-difference residual through degree 29:",
      "all zero" if all(v == 0 for v in qres) else "NONZERO")
