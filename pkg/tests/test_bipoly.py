"""Polynomial arithmetic: worked examples, ring axioms, serialization."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricirc.bipoly import ONE, X, Y, ZERO, BiPoly, Monomial, exact_div
from tricirc.errors import NonExactDivision


def P(text):
    return BiPoly.parse(text)


class TestBasics:
    def test_canonical_form_drops_zeros(self):
        assert BiPoly({(1, 0): 0, (0, 0): 3}).terms == {Monomial(0, 0): 3}

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            BiPoly({(-1, 0): 2})

    def test_equality_is_term_equality(self):
        assert BiPoly({(1, 1): 2}) == BiPoly({(1, 1): 2})
        assert BiPoly({(1, 1): 2}) != BiPoly({(1, 1): 3})
        assert ZERO == BiPoly() and ONE == 1

    def test_monomial_ordering_is_degree_then_x(self):
        ms = [Monomial(8, 0), Monomial(0, 0), Monomial(1, 5), Monomial(5, 1),
              Monomial(2, 2), Monomial(0, 8), Monomial(4, 4)]
        assert sorted(ms) == [
            Monomial(0, 0), Monomial(2, 2), Monomial(1, 5), Monomial(5, 1),
            Monomial(0, 8), Monomial(4, 4), Monomial(8, 0),
        ]


class TestAdd:
    def test_cancellation(self):
        assert P("x - y") + P("y") == X

    def test_identity(self):
        p = P("1 - x^5 - 5*x^2*y")
        assert p + ZERO == p

    def test_disjoint_supports(self):
        assert P("1 - x^5") + P("-5*x^2*y") == P("1 - x^5 - 5*x^2*y")


class TestMul:
    def test_difference_of_squares(self):
        assert P("1 - x") * P("1 + x") == P("1 - x^2")

    def test_binomial_square(self):
        assert P("x + y") ** 2 == P("x^2 + 2*x*y + y^2")

    def test_identity(self):
        p = P("1 - x - y")
        assert p * ONE == p

    def test_int_scaling(self):
        assert 3 * P("x + y") == P("3*x + 3*y")
        assert P("x") * 0 == ZERO


class TestExactDiv:
    def test_difference_of_squares(self):
        assert exact_div(P("x^2 - y^2"), P("x - y")) == P("x + y")

    def test_unit_divisor(self):
        p = P("1 - x^8 - 8*x^5*y")
        assert exact_div(p, ONE) == p

    def test_constant_divisor(self):
        assert exact_div(P("2*x^2 + 2*x*y"), BiPoly.constant(2)) == P("x^2 + x*y")

    def test_nonexact_raises(self):
        with pytest.raises(NonExactDivision):
            exact_div(P("x^2 + 1"), P("x + 1"))
        with pytest.raises(NonExactDivision):
            exact_div(P("3*x"), BiPoly.constant(2))

    def test_zero_divisor_raises(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(X, ZERO)


class TestEval:
    def test_five_term_polynomial_at_ones(self):
        p = P("1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5")
        assert p.evaluate(1, 1) == -11

    def test_constant_term_at_origin(self):
        p = P("7 - 3*x + 2*x*y^4")
        assert p.evaluate(0, 0) == 7 == p.constant_term()

    def test_monomial(self):
        assert P("x^2*y").evaluate(2, 3) == 12


class TestReduceMod:
    def test_five_term_polynomial_mod_5(self):
        p = P("1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5")
        assert p.reduce_mod(5) == P("1 + 4*x^5 + 4*y^5")

    def test_even_coefficients_mod_2(self):
        assert P("2*x + 4*y^3 - 6").reduce_mod(2) == ZERO

    def test_multiple_vanishes(self):
        assert P("3*x").reduce_mod(3) == ZERO

    def test_small_modulus_rejected(self):
        with pytest.raises(ValueError):
            X.reduce_mod(1)


monomials = st.tuples(st.integers(0, 6), st.integers(0, 6))
polys = st.dictionaries(monomials, st.integers(-9, 9), max_size=8).map(BiPoly)
points = st.integers(-5, 5)


class TestRingAxioms:
    @given(polys, polys)
    def test_add_commutes(self, a, b):
        assert a + b == b + a

    @given(polys, polys, polys)
    def test_add_associates(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(polys, polys)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(polys, polys, polys)
    def test_mul_associates(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(polys, polys, polys)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys, polys)
    def test_exact_div_inverts_mul(self, a, b):
        if b.is_zero():
            b = ONE
        assert exact_div(a * b, b) == a

    @given(polys, polys, points, points)
    def test_evaluate_is_a_homomorphism(self, a, b, x0, y0):
        assert (a * b).evaluate(x0, y0) == a.evaluate(x0, y0) * b.evaluate(x0, y0)
        assert (a + b).evaluate(x0, y0) == a.evaluate(x0, y0) + b.evaluate(x0, y0)


class TestSerialization:
    def test_render_display_order(self):
        p = BiPoly({(0, 0): 1, (8, 0): -1, (5, 1): -8, (2, 2): -12,
                    (4, 4): 2, (1, 5): -8, (0, 8): -1})
        assert p.render() == "1 - x^8 - 8*x^5*y - 12*x^2*y^2 + 2*x^4*y^4 - 8*x*y^5 - y^8"

    def test_render_edge_cases(self):
        assert ZERO.render() == "0"
        assert (-X).render() == "-x"
        assert P("-1 + x").render() == "-1 + x"
        assert BiPoly({(1, 1): 1}).render() == "x*y"

    def test_json_canonical_order(self):
        p = BiPoly({(0, 2): 4, (1, 0): -3, (0, 0): 1})
        assert p.to_json_dict() == {
            "terms": [
                {"r": 0, "s": 0, "c": "1"},
                {"r": 1, "s": 0, "c": "-3"},
                {"r": 0, "s": 2, "c": "4"},
            ]
        }
        assert BiPoly.from_json_dict(p.to_json_dict()) == p

    @given(polys)
    def test_text_round_trip(self, p):
        assert BiPoly.parse(p.render()) == p

    @given(polys)
    def test_json_round_trip(self, p):
        assert BiPoly.from_json_dict(p.to_json_dict()) == p

    def test_parse_rejects_garbage(self):
        for bad in ("x**2", "2x", "x^-1", "x +", "z"):
            with pytest.raises(ValueError):
                BiPoly.parse(bad)


class TestHelpers:
    def test_swap_xy(self):
        assert P("x^2 - 3*y").swap_xy() == P("y^2 - 3*x")

    def test_abs_helpers(self):
        p = P("1 - x^5 - 5*x^2*y - 5*x*y^3 - y^5")
        assert p.termwise_abs() == P("1 + x^5 + 5*x^2*y + 5*x*y^3 + y^5")
        assert p.abs_coefficient_sum() == 13
        assert p.max_abs_coefficient() == 5
        assert len(p) == 5

    def test_total_degree(self):
        assert P("1 + x*y^3").total_degree() == 4
        assert ZERO.total_degree() == -1
