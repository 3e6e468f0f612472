"""
Orthogonal polynomials from the three-term recurrence
=====================================================

Generate monic orthogonal polynomials for a generalized Hilbert functional
and check them against shifted Legendre polynomials.
"""

from fractions import Fraction

from hankel_exact import MomentKind, apply_functional
from hankel_exact import closed_forms as cf
from hankel_exact.stieltjes import jacobi, orthogonal_polys

kind = MomentKind.generalized(1, Fraction(3, 2))
jc = jacobi(kind)
print("s(n):", [str(jc.sseq(i)) for i in range(4)])
print("t(n):", [str(jc.tseq(i)) for i in range(1, 4)])

polys = orthogonal_polys(kind, 4)
for n, p in enumerate(polys):
    print(n, p)

# Each p_n annihilates x^j for j < n.
print(all(apply_functional(kind, p.shift_up(j)) == 0
          for n, p in enumerate(polys) for j in range(n)))

# For plain Hilbert moments the shifted Legendre polynomials do the same job.
for n in range(5):
    print(n, cf.shifted_legendre(n, 1))
