"""
Unit tests for the BivarPoly model
"""

import itertools

import pytest
import sympy

from src.core.exceptions import NotDivisible, ParseError, ValidationError
from src.core.models.bivar_poly import ONE, SPLIT_DIVISOR, X, Y, ZERO, BivarPoly, parse
from tests.fixtures.graph_samples import GraphSampleProvider


class TestBivarPolyArithmetic:
    """Test cases for ring operations"""

    def test_add_cancels_terms(self):
        """Test (x + y) + (x - y) = 2x"""
        assert (X + Y) + (X - Y) == 2 * X

    def test_add_zero_is_identity(self):
        """Test p + 0 = p"""
        p = parse("x^2 + x + y")
        assert p + ZERO == p
        assert p + 0 == p

    def test_add_doubles(self):
        """Test doubling a polynomial"""
        p = parse("x^2 + x + y")
        assert p + p == parse("2*x^2 + 2*x + 2*y")

    def test_mul_examples(self):
        """Test basic products"""
        assert (X + 1) * (Y + 1) == parse("x*y + x + y + 1")
        assert (X + Y) * (X - Y) == parse("x^2 - y^2")
        assert parse("x^2 + x + y") * ONE == parse("x^2 + x + y")

    def test_zero_coefficients_are_dropped(self):
        """Test that cancelled terms leave no zero entries"""
        p = (X + Y) - X
        assert dict(p.terms) == {(0, 1): 1}
        assert (X - X).is_zero
        assert len(X - X) == 0

    def test_power(self):
        """Test integer powers"""
        assert (X + 1) ** 0 == ONE
        assert (X + 1) ** 3 == parse("x^3 + 3*x^2 + 3*x + 1")

    def test_negative_power_rejected(self):
        """Test that negative exponents are rejected"""
        with pytest.raises(ValidationError):
            X ** -1

    def test_ring_laws(self):
        """Test associativity, commutativity and distributivity"""
        samples = GraphSampleProvider.small_polynomials()
        for p, q, r in itertools.product(samples[:4], repeat=3):
            assert (p + q) + r == p + (q + r)
            assert (p * q) * r == p * (q * r)
            assert p * q == q * p
            assert p * (q + r) == p * q + p * r

    def test_large_coefficients_stay_exact(self):
        """Test that coefficients beyond 64 bits are exact"""
        big = BivarPoly.constant(2 ** 80)
        assert (big * big).coefficient(0, 0) == 2 ** 160

    def test_values_are_immutable(self):
        """Test that the term map cannot be modified"""
        p = X + Y
        with pytest.raises(TypeError):
            p.terms[(0, 0)] = 1

    def test_hash_consistent_with_equality(self):
        """Test that equal polynomials hash equally"""
        assert hash(parse("x + y")) == hash(Y + X)
        assert len({parse("x + y"), Y + X, X}) == 2


class TestBivarPolyDivision:
    """Test cases for exact division"""

    def test_divides_constructed_product(self):
        """Test ((xy - x - y)(x + y)) / (xy - x - y) = x + y"""
        assert (SPLIT_DIVISOR * (X + Y)).div_exact(SPLIT_DIVISOR) == X + Y

    def test_zero_dividend(self):
        """Test 0 / (xy - x - y) = 0"""
        assert ZERO.div_exact(SPLIT_DIVISOR) == ZERO

    def test_two_cycle_split_numerator(self):
        """Test the gluing numerator of two single edges yields T(C2)"""
        numerator = (Y - 1) * X * X + (X - 1) * Y * Y - X * Y - Y * X
        assert numerator.div_exact(SPLIT_DIVISOR) == X + Y

    def test_division_by_zero(self):
        """Test dividing by the zero polynomial"""
        with pytest.raises(ZeroDivisionError):
            X.div_exact(ZERO)

    def test_remainder_raises(self):
        """Test that a non-multiple raises NotDivisible"""
        with pytest.raises(NotDivisible) as exc_info:
            (X + 1).div_exact(SPLIT_DIVISOR)
        assert exc_info.value.remainder is not None

    def test_coefficient_remainder_raises(self):
        """Test that a leading coefficient that does not divide raises"""
        with pytest.raises(NotDivisible):
            (3 * X).div_exact(2 * X)

    def test_quotients_recovered(self):
        """Test div_exact(p * d, d) = p for sample polynomials"""
        for p in GraphSampleProvider.small_polynomials():
            for d in (SPLIT_DIVISOR, X + 1, Y - X, parse("x^2*y - 1")):
                assert (p * d).div_exact(d) == p

    def test_agrees_with_sympy_division(self):
        """Test quotients against sympy's rational simplification"""
        for p in GraphSampleProvider.small_polynomials():
            product = p * (X + Y) * SPLIT_DIVISOR
            quotient = sympy.cancel(GraphSampleProvider.to_sympy(product)
                                    / GraphSampleProvider.to_sympy(SPLIT_DIVISOR))
            assert GraphSampleProvider.from_sympy(quotient) == product.div_exact(SPLIT_DIVISOR)


class TestBivarPolyEvaluation:
    """Test cases for integer evaluation and variable swap"""

    def test_triangle_spanning_trees(self):
        """Test (x^2 + x + y) at (1, 1) = 3"""
        assert parse("x^2 + x + y").evaluate(1, 1) == 3

    def test_hexagon_spanning_trees(self):
        """Test T(C6) at (1, 1) = 6"""
        assert GraphSampleProvider.cycle_polynomial(6).evaluate(1, 1) == 6

    def test_evaluation_is_homomorphism(self):
        """Test evaluation respects sums and products"""
        samples = GraphSampleProvider.small_polynomials()
        for p, q in itertools.product(samples, repeat=2):
            for point in ((1, 1), (2, -3), (-1, 0)):
                assert (p * q).evaluate(*point) == p.evaluate(*point) * q.evaluate(*point)
                assert (p + q).evaluate(*point) == p.evaluate(*point) + q.evaluate(*point)

    def test_swap_variables(self):
        """Test p(x, y) -> p(y, x)"""
        assert parse("x^3 + 2*x*y^2 + y").swap_variables() == parse("y^3 + 2*x^2*y + x")
        assert ZERO.swap_variables() == ZERO

    def test_nonnegative_coefficients(self):
        """Test the sign check on coefficients"""
        assert parse("x^2 + 3*x*y + y").has_nonnegative_coefficients()
        assert ZERO.has_nonnegative_coefficients()
        assert not parse("x*y - x - y").has_nonnegative_coefficients()


class TestBivarPolyText:
    """Test cases for the canonical text format and parser"""

    def test_canonical_text_examples(self):
        """Test canonical rendering"""
        assert (X ** 2 + X + Y).to_canonical_text() == "x^2 + x + y"
        assert ZERO.to_canonical_text() == "0"
        assert BivarPoly.monomial(6, 2, 5).to_canonical_text() == "5*x^6*y^2"
        assert (X * Y - X - Y).to_canonical_text() == "x*y - x - y"
        assert (-(X ** 2) - 3).to_canonical_text() == "-x^2 - 3"

    def test_term_order(self):
        """Test x-degree descending, then y-degree descending"""
        p = parse("y + x*y^2 + x^2 + x*y + 1")
        assert [monomial for monomial, _ in p.sorted_terms()] == [(2, 0), (1, 2), (1, 1), (0, 1), (0, 0)]

    def test_parse_round_trip(self):
        """Test parse(to_canonical_text(p)) = p"""
        for p in GraphSampleProvider.small_polynomials():
            assert parse(p.to_canonical_text()) == p
        assert parse(ZERO.to_canonical_text()) == ZERO

    def test_parse_printed_spelling(self):
        """Test implicit products, braced exponents and unicode minus"""
        assert parse("4x^{14}y + 2x^9y") == 4 * X ** 14 * Y + 2 * X ** 9 * Y
        assert parse("x^{2} − y") == X ** 2 - Y
        assert parse("y^2x^3") == X ** 3 * Y ** 2

    def test_parse_combines_like_terms(self):
        """Test repeated monomials are summed"""
        assert parse("x + x + y - y") == 2 * X

    @pytest.mark.parametrize("text", ["", "x +", "x ^", "2^3", "x*+y", "x ** 2", "x^{2", "z"])
    def test_parse_errors(self, text):
        """Test malformed text raises ParseError with a position"""
        with pytest.raises(ParseError) as exc_info:
            parse(text)
        assert exc_info.value.position is not None

    def test_json_triples(self):
        """Test JSON triples with decimal-string coefficients in canonical order"""
        p = parse("x^2 + 3*x*y - y")
        assert p.to_json_triples() == [[2, 0, "1"], [1, 1, "3"], [0, 1, "-1"]]
        assert BivarPoly.from_json_triples(p.to_json_triples()) == p

    def test_json_triples_malformed(self):
        """Test malformed triples raise ParseError"""
        with pytest.raises(ParseError):
            BivarPoly.from_json_triples([[1, 0]])
        with pytest.raises(ParseError):
            BivarPoly.from_json_triples([[1, 0, "abc"]])

    def test_negative_exponent_rejected(self):
        """Test that negative exponents cannot be constructed"""
        with pytest.raises(ValidationError):
            BivarPoly({(-1, 0): 1})
