"""Partitions, Schur polynomials and the Cauchy identity.

Walks through the combinatorial layer: diagrams, Frobenius coordinates,
hooks and contents, then Schur functions in the higher-times coordinates
t_m = p_m / m and the exact Cauchy identity check.
"""

from fractions import Fraction as F

from taukit import (
    Partition,
    PolyRing,
    Times,
    cauchy_truncated,
    enumerate_partitions,
    miwa,
    schur,
    schur_from_eigenvalues,
)

lam = Partition([3, 3, 1])
print("partition       ", lam)
print("weight / length ", lam.weight, "/", lam.length)
print("conjugate       ", lam.conjugate())
print("Frobenius       ", lam.frobenius())
print("contents        ", sorted(lam.contents()))
print("hooks           ", sorted(lam.hooks()))
print()

print("partitions of weight <= 4, canonical order:")
print(" ", [str(p) for p in enumerate_partitions(4)])
print()

# Schur functions as polynomials in t_1, t_2, ...
ring = PolyRing.times_ring(4)
t = Times.symbolic(ring, 4)
print("s_(2,1)(t) =", schur(Partition([2, 1]), t))
print()

# two routes to the same number: Jacobi-Trudi after the Miwa map vs the
# bialternant ratio at explicit eigenvalues
xs = [F(1, 2), F(2), F(-1, 3)]
for shape in [(2,), (2, 1), (3, 1)]:
    lam = Partition(shape)
    a = schur(lam, miwa(xs, lam.weight))
    b = schur_from_eigenvalues(lam, xs)
    print(f"s_{lam}({xs}) = {a}   (bialternant: {b})")
    assert a == b
print()

# the Cauchy identity, coefficient-exactly to bidegree 6
lhs, rhs = cauchy_truncated(6)
print("Cauchy identity to bidegree 6:", "exact match" if lhs == rhs else "MISMATCH")
