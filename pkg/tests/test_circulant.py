"""Determinant backends against each other, hand values and float checks."""

import random

import pytest

from tricirc.bipoly import ZERO, BiPoly
from tricirc.circulant import (
    CirculantSpec,
    cycle_cover_counts,
    det_bareiss,
    det_bruteforce,
    det_cycle_cover,
    det_float_check,
    integer_det,
    reduce_theta,
    substituted_matrix,
    window_width,
)
from tricirc.errors import IrreducibleSpec, StateSpaceTooLarge, TooLarge

# expanded by hand via cofactors along the first row
DET_3_2 = BiPoly.parse("1 - x^3 - 3*x*y - y^3")

# derived by pairing conjugate roots of unity: the 4x4 case factors as
# ((1-y)^2 - x^2) * ((1+y)^2 + x^2)
DET_4_2 = BiPoly.parse("1 - 4*x^2*y - 2*y^2 - x^4 + y^4")

PHI_8_3 = BiPoly.parse("1 - x^8 - 8*x^5*y - 12*x^2*y^2 + 2*x^4*y^4 - 8*x*y^5 - y^8")
PHI_5_3 = BiPoly.parse("1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5")


class TestSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            CirculantSpec(2, 1)
        with pytest.raises(ValueError):
            CirculantSpec(5, 0)
        with pytest.raises(ValueError):
            CirculantSpec(5, 5)
        with pytest.raises(ValueError):
            CirculantSpec(5, 3, 3)  # t == q

    def test_canonical_flag(self):
        assert CirculantSpec(8, 3).is_canonical
        assert not CirculantSpec(8, 3, 2).is_canonical
        assert not CirculantSpec(8, 1, 2).is_canonical  # q=1 needs reduction


class TestReduceTheta:
    def test_already_canonical(self):
        spec = CirculantSpec(8, 3)
        assert reduce_theta(spec) == (spec, False)

    def test_invertible_t(self):
        # 2^-1 = 3 (mod 5) and 3*3 = 9 = 4 (mod 5)
        red = reduce_theta(CirculantSpec(5, 3, 2))
        assert red.spec == CirculantSpec(5, 4, 1)
        assert not red.swapped

    def test_invertible_t_float_agreement(self):
        # the reduced polynomial must reproduce the original band product
        red = reduce_theta(CirculantSpec(5, 3, 2))
        poly = det_bareiss(red.spec)
        import cmath

        for x0, y0 in ((1, 1), (-1, 0.5), (0.5, -1), (2, 3)):
            prod = 1 + 0j
            for j in range(5):
                w = cmath.exp(2j * cmath.pi * j / 5)
                prod *= 1 - x0 * w**2 - y0 * w**3
            assert abs(prod - poly.evaluate(x0, y0)) < 1e-8 * (1 + abs(prod))

    def test_swap_branch(self):
        # gcd(t=2, 6) > 1 but gcd(q=5, 6) = 1: exchange the variable roles
        red = reduce_theta(CirculantSpec(6, 5, 2))
        assert red.swapped
        assert red.spec == CirculantSpec(6, 4, 1)  # t * q^-1 = 2*5 = 4 (mod 6)
        poly = det_bareiss(red.spec).swap_xy()
        import cmath

        for x0, y0 in ((1, 1), (-1, 0.5), (2, -1)):
            prod = 1 + 0j
            for j in range(6):
                w = cmath.exp(2j * cmath.pi * j / 6)
                prod *= 1 - x0 * w**2 - y0 * w**5
            assert abs(prod - poly.evaluate(x0, y0)) < 1e-8 * (1 + abs(prod))

    def test_irreducible(self):
        with pytest.raises(IrreducibleSpec):
            reduce_theta(CirculantSpec(6, 3, 2))


class TestBareiss:
    def test_published_8_3(self):
        assert det_bareiss(CirculantSpec(8, 3)) == PHI_8_3

    def test_published_5_3(self):
        assert det_bareiss(CirculantSpec(5, 3)) == PHI_5_3

    def test_hand_expanded_3_2(self):
        assert det_bareiss(CirculantSpec(3, 2)) == DET_3_2

    def test_hand_expanded_4_2(self):
        assert det_bareiss(CirculantSpec(4, 2)) == DET_4_2

    def test_rejects_noncanonical(self):
        with pytest.raises(ValueError):
            det_bareiss(CirculantSpec(5, 3, 2))


class TestBruteforce:
    def test_published_5_3(self):
        assert det_bruteforce(CirculantSpec(5, 3)) == PHI_5_3

    def test_oracle_equivalence_4_2(self):
        assert det_bruteforce(CirculantSpec(4, 2)) == det_bareiss(CirculantSpec(4, 2))

    def test_hand_expanded_3_2(self):
        assert det_bruteforce(CirculantSpec(3, 2)) == DET_3_2

    def test_size_guard(self):
        with pytest.raises(TooLarge):
            det_bruteforce(CirculantSpec(11, 3))


class TestCycleCover:
    def test_published_polynomials(self):
        assert det_cycle_cover(CirculantSpec(5, 3)) == PHI_5_3
        assert det_cycle_cover(CirculantSpec(8, 3)) == PHI_8_3

    def test_matches_bruteforce_7_2(self):
        assert det_cycle_cover(CirculantSpec(7, 2)) == det_bruteforce(
            CirculantSpec(7, 2)
        )

    def test_large_q_uses_narrow_window(self):
        # q = p-1 walks as displacement -1; must stay cheap and correct
        assert window_width(9, 8) == 3
        assert det_cycle_cover(CirculantSpec(9, 8)) == det_bruteforce(
            CirculantSpec(9, 8)
        )

    def test_window_guard(self):
        assert window_width(40, 20) == 21
        with pytest.raises(StateSpaceTooLarge):
            cycle_cover_counts(40, 20)

    def test_counts_are_cached_tuples(self):
        a = cycle_cover_counts(5, 3)
        assert a is cycle_cover_counts(5, 3)
        assert a == ((0, 0, 1), (0, 5, 1), (1, 3, 5), (2, 1, 5), (5, 0, 1))


class TestStructuralInvariants:
    @pytest.mark.parametrize("p", range(3, 10))
    def test_sweep_properties(self, p):
        for q in range(2, p):
            det = det_bareiss(CirculantSpec(p, q))
            assert det.constant_term() == 1
            assert det.coefficient(p, 0) == -1
            assert det.total_degree() <= p

    def test_random_point_agreement(self):
        rng = random.Random(1812)
        for _ in range(25):
            p = rng.randint(3, 8)
            q = rng.randint(2, p - 1)
            spec = CirculantSpec(p, q)
            det = det_bareiss(spec)
            x0, y0 = rng.randint(-3, 3), rng.randint(-3, 3)
            assert det.evaluate(x0, y0) == integer_det(
                substituted_matrix(spec, x0, y0)
            )


class TestFloatCheck:
    def test_published_8_3_passes(self):
        rep = det_float_check(CirculantSpec(8, 3), PHI_8_3)
        assert rep.passed
        assert rep.points == 16

    def test_zero_candidate_fails_by_value_at_ones(self):
        rep = det_float_check(CirculantSpec(5, 3), ZERO)
        assert not rep.passed
        # the worst grid point sees |det(1,1)| = 11
        assert rep.max_abs_deviation == pytest.approx(11.0, abs=1e-6)

    def test_self_consistency_3_2(self):
        rep = det_float_check(CirculantSpec(3, 2), det_bareiss(CirculantSpec(3, 2)))
        assert rep.passed


class TestIntegerDet:
    def test_known_values(self):
        assert integer_det([[1, 2], [3, 4]]) == -2
        assert integer_det([[0, 1], [1, 0]]) == -1  # needs a row swap
        assert integer_det([[2, 0], [0, 0]]) == 0
        assert integer_det([[3]]) == 3
