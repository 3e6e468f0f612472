from fractions import Fraction as F
from math import comb

import pytest

from hankel_exact import Mat, MomentKind, apply_functional, det_oracle, hankel_matrix, invert_oracle
from hankel_exact import closed_forms as cf
from hankel_exact.stieltjes import kernel_inverse, norm_squared, orthogonal_poly

S_VALUES = [F(1), F(2), F(1, 2), F(7, 3)]


def gen_matrix(n, s):
    return hankel_matrix(MomentKind.generalized(1, s), n)


class TestHilbertDet:
    def test_small(self):
        assert cf.hilbert_det_closed(0, F(5)) == 1
        assert cf.hilbert_det_closed(1, 1) == F(1, 12)
        assert cf.hilbert_det_closed(2, 1) == F(1, 2160)

    @pytest.mark.parametrize("t", [F(1), F(2), F(1, 3)])
    def test_oracle(self, t):
        for n in range(11):
            assert cf.hilbert_det_closed(n, t) == det_oracle(hankel_matrix(MomentKind.hilbert(t), n))


class TestGeneralizedDet:
    def test_small(self):
        assert cf.generalized_det_closed(0, 1, 2) == 1
        assert cf.generalized_det_closed(1, 1, 2) == F(1, 18)
        assert cf.generalized_det_closed(1, 1, 1) == F(1, 12)
        assert det_oracle(Mat.from_rows([[1, F(2, 3)], [F(2, 3), F(1, 2)]])) == F(1, 18)

    @pytest.mark.parametrize("s", S_VALUES)
    def test_oracle(self, s):
        for n in range(9):
            assert cf.generalized_det_closed(n, 1, s) == det_oracle(gen_matrix(n, s))

    def test_general_t(self):
        kind = MomentKind.generalized(F(-3, 2), F(5, 4))
        for n in range(7):
            assert cf.generalized_det_closed(n, kind.t, kind.s) == det_oracle(hankel_matrix(kind, n))

    def test_s1_is_hilbert(self):
        for n in range(10):
            assert cf.generalized_det_closed(n, 3, 1) == cf.hilbert_det_closed(n, 3)

    def test_unsquared_variant_fails(self):
        assert cf.generalized_det_printed(1, 1, 1) == F(1, 6) != det_oracle(gen_matrix(1, 1))


class TestNormClosed:
    @pytest.mark.parametrize("s", S_VALUES)
    def test_squared_matches_product(self, s):
        kind = MomentKind.generalized(1, s)
        for n in range(9):
            assert cf.generalized_norm_closed(n, 1, s) == norm_squared(kind, n)

    def test_hilbert_form(self):
        for n in range(9):
            assert norm_squared(MomentKind.hilbert(2), n) == F(2) ** (2 * n) / ((2 * n + 1) * comb(2 * n, n) ** 2)

    def test_unsquared_variant_fails(self):
        assert cf.generalized_norm_printed(1, 1, 1) != norm_squared(MomentKind.hilbert(1), 1)


class TestShiftedLegendre:
    def test_listed(self):
        assert cf.shifted_legendre(0, 1).coeffs == (1,)
        assert cf.shifted_legendre(2, 1).coeffs == (1, -6, 6)
        assert cf.shifted_legendre(3, 1).coeffs == (-1, 12, -30, 20)
        assert cf.shifted_legendre(4, 1).coeffs == (1, -20, 90, -140, 70)

    def test_t_dependence(self):
        t = F(3, 7)
        assert cf.shifted_legendre(2, t).coeffs == (t * t, -6 * t, 6)

    @pytest.mark.parametrize("t", [F(1), F(2), F(-1, 3)])
    def test_recurrence(self, t):
        rec = cf.shifted_legendre_recurrence(17, t)
        for n in range(18):
            assert rec[n] == cf.shifted_legendre(n, t)

    @pytest.mark.parametrize("t", [F(1), F(2), F(2, 5)])
    def test_scaled_monic(self, t):
        for n in range(13):
            P = cf.shifted_legendre(n, t)
            assert P(0) == (-t) ** n
            assert P == orthogonal_poly(MomentKind.hilbert(t), n) * comb(2 * n, n)
            assert orthogonal_poly(MomentKind.hilbert(t), n)(0) == (-t) ** n / comb(2 * n, n)

    def test_value_at_one(self):
        for n in range(21):
            assert cf.shifted_legendre(n, 1)(1) == 1

    @pytest.mark.parametrize("t", [F(1), F(2)])
    def test_functional_vanishes(self, t):
        for n in range(1, 13):
            assert apply_functional(MomentKind.hilbert(t), cf.shifted_legendre(n, t)) == 0

    @pytest.mark.parametrize("s", [F(2), F(1, 2), F(7, 3)])
    def test_generalized_orthopoly_closed(self, s):
        for n in range(9):
            assert cf.generalized_orthopoly_closed(n, 1, s) == orthogonal_poly(MomentKind.generalized(1, s), n)


class TestInverseHilbert:
    def test_entries(self):
        assert cf.inverse_hilbert_entry(1, 0, 0) == 4
        assert cf.inverse_hilbert_entry(1, 0, 1) == -6
        assert cf.inverse_hilbert_entry(2, 1, 1) == 192

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            cf.inverse_hilbert_entry(2, 3, 0)

    def test_inverse(self):
        for n in range(11):
            inv = cf.inverse_hilbert_matrix(n)
            assert inv.is_integral()
            assert hankel_matrix(MomentKind.hilbert(1), n) @ inv == Mat.identity(n + 1)

    def test_kernel_agrees(self):
        for n in range(9):
            assert kernel_inverse(MomentKind.hilbert(1), n) == cf.inverse_hilbert_matrix(n)


class TestInverseGeneralized:
    def test_s1(self):
        assert cf.inverse_generalized_entry(1, 0, 0, 1) == 4

    def test_s2_hand_value(self):
        # [[1, 2/3], [2/3, 1/2]] has determinant 1/18 and inverse [[9, -12], [-12, 18]]
        assert cf.inverse_generalized_entry(1, 0, 0, 2) == 9
        assert cf.inverse_generalized_matrix(1, 2) == Mat.from_rows([[9, -12], [-12, 18]])

    def test_order_zero(self):
        assert cf.inverse_generalized_entry(0, 0, 0, 2) == 1

    @pytest.mark.parametrize("s", S_VALUES)
    def test_oracle(self, s):
        for n in range(7):
            assert cf.inverse_generalized_matrix(n, s) == invert_oracle(gen_matrix(n, s))

    def test_s1_matches_integer_form(self):
        for n in range(8):
            assert cf.inverse_generalized_matrix(n, 1) == cf.inverse_hilbert_matrix(n)

    def test_single_factorial_variant(self):
        assert cf.inverse_generalized_rising_printed(1, 0, 1, 1) == -6
        assert cf.inverse_generalized_rising_printed(2, 0, 0, 1) == 18
        assert cf.inverse_hilbert_entry(2, 0, 0) == 9


class TestSumIdentity:
    def test_small(self):
        assert cf.s_identity_sides(1, 0, 0) == (4, 4)
        lhs, rhs = cf.s_identity_sides(2, 1, 0)
        # k = 1: 1*1*2*1*3 = 6; k = 2: 2*1*3*1*5 = 30
        assert lhs == 36 == rhs

    def test_diagonal(self):
        for n in range(10):
            lhs, rhs = cf.s_identity_sides(n, n, n)
            assert lhs == rhs == comb(2 * n, n) ** 2 * (2 * n + 1)

    def test_exhaustive(self):
        for n in range(13):
            for i in range(n + 1):
                for j in range(n + 1):
                    lhs, rhs = cf.s_identity_sides(n, i, j)
                    assert lhs == rhs
                    assert abs(rhs) == abs(cf.inverse_hilbert_entry(n, i, j))

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            cf.s_identity_sides(1, 2, 0)
