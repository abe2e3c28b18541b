"""The free-fermion picture on the Maya/partition basis.

Basis states are pairs (partition, charge); every operator moves one Maya
particle with the wedge-ordering sign.  The demo builds states with the
raising families, reproduces the skew matrix elements of the exponential,
and recovers the tau series as a vacuum expectation value -- the same
coefficients the series module computes combinatorially.
"""

from fractions import Fraction as F

from taukit import (
    FockOperator,
    FockVector,
    Formal,
    Partition,
    PolyRing,
    RationalContent,
    TauSpec,
    Times,
    exp_action,
    pair,
    schur_of_operators,
    tau_series,
    trace_h0,
)

r = RationalContent(a=[F(1, 2)])
D = 5

# state constructors: s_lambda(H*)|0> = |lambda, 0>
v = FockVector.vacuum(0, D)
w = schur_of_operators(Partition([2, 1]), "H*", v)
print("s_(2,1)(H*)|0> =", w)

# the deformed family picks up the content-product weight
w = schur_of_operators(Partition([2, 1]), "-A", v, r=r)
print("s_(2,1)(-A)|0> =", w, "  (weight r_(2,1)(0) =", r(0) * r(1) * r(-1), ")")
print()

# skew matrix elements of e^{-A(t*)}
ring = PolyRing.times_ring(D, cap=D)
usym = Times.symbolic(ring, D)
terms = [(usym.get(m), FockOperator.minus_A(m, r)) for m in range(1, D + 1)]
w = exp_action(terms, FockVector.basis(Partition([1]), 0, D))
print("<(2),0| e^{-A(t*)} |(1),0> =", w.coeff(Partition([2]), 0), " = h_1(t*) r(1)")
print()

# vacuum expectation value = tau series
big = PolyRing.bi_times_ring(D, cap=2 * D)
tsym = Times.symbolic(big, D, offset=0)
usym2 = Times.symbolic(big, D, offset=D)
vac = FockVector.vacuum(1, D)
X = exp_action([(usym2.get(m), FockOperator.minus_A(m, r)) for m in range(1, D + 1)], vac)
Z = exp_action([(tsym.get(m), FockOperator.H(-m)) for m in range(1, D + 1)], vac)
lhs = pair(Z, X)
rhs = tau_series(TauSpec(r, 1, Formal(), Formal()), D).as_polyseries(big)
print("<1| e^{H(t)} e^{-A(t*)} |1> equals the weighted Schur series:", lhs == rhs)
print()

# graded trace over a charge sector
print("graded trace of the diagonal charge operator (n = 0, by weight):",
      [str(x) for x in trace_h0(r, 0, 5)])
