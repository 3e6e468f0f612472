"""
Hilbert matrices in exact arithmetic
====================================

Build a Hilbert-type Hankel matrix, factor it as A D A^T, compare the
determinant from three routes and print the integer inverse.
"""

from fractions import Fraction

from hankel_exact import MomentKind, det_oracle, factorize, hankel_matrix, invert_oracle
from hankel_exact import closed_forms as cf

kind = MomentKind.hilbert(1)
n = 3

# The moment matrix itself: entries 1/(i+j+1).
H = hankel_matrix(kind, n)
print(H)

# The factorization has a unit lower triangular A and diagonal D.
fz = factorize(kind, n)
print("A =", fz.A)
print("D =", fz.D.diag())
assert fz.reconstruct() == H

# Determinant by elimination, by product of D and by the closed form.
print("det:", det_oracle(H), cf.hilbert_det_closed(n, 1))

# The inverse has integer entries.
inv = cf.inverse_hilbert_matrix(n)
print(inv)
assert inv == invert_oracle(H)

# A scaled weight t changes nothing structurally.
for t in (Fraction(2), Fraction(1, 3)):
    k = MomentKind.hilbert(t)
    print(f"t={t}:", det_oracle(hankel_matrix(k, 4)) == cf.hilbert_det_closed(4, t))
