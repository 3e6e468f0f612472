"""
Hankel determinants of harmonic numbers
=======================================

Harmonic-number moments have no functional, but their Hankel determinants
still reduce to a generalized Hilbert determinant times r(n).
"""

from hankel_exact import MomentKind, det_oracle, hankel_matrix
from hankel_exact import harmonic_hankel as hh

for n in range(9):
    by_elim = det_oracle(hankel_matrix(MomentKind.harmonic(1, 1), n))
    print(n, hh.harmonic_hankel_det(n, 1, 1), by_elim == hh.harmonic_det_closed_t1(n))

# r(n) from its sum and from its recurrence.
print(hh.r_recurrence(6, 1, 1))
print([hh.r_direct(n, 1, 1) for n in range(7)])

# With t = 2 every even order vanishes.
print([str(hh.harmonic_det_closed_t2(n)) for n in range(7)])

# Scaling the inverse by U_n appears to clear all denominators.
for rep in hh.conjecture_scan(8):
    print(rep.n, rep.U_n, rep.holds)
