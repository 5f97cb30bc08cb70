import itertools
from fractions import Fraction
from math import factorial

import pytest

from gwlocalize.engine.exceptions import InvalidInput
from gwlocalize.engine.integrals import (
    PsiMonomial,
    blowup_tangent_integral,
    evaluate_query,
    lambda_one_closed_form,
    psi_integral_g0,
    psi_integral_g1,
)


def string_recursion_g0(exponents):
    """Genus-zero psi integrals from the string equation alone."""
    exponents = list(exponents)
    if len(exponents) == 3:
        return Fraction(1) if exponents == [0, 0, 0] else Fraction(0)
    exponents.remove(0)
    return sum(
        (string_recursion_g0(exponents[:i] + [a - 1] + exponents[i + 1:]) for i, a in enumerate(exponents) if a),
        Fraction(0),
    )


def compositions(total, parts):
    for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


class TestGenusZero:
    def test_values(self):
        assert psi_integral_g0((0, 0, 0)) == 1
        assert psi_integral_g0((1, 0, 0, 0)) == 1
        assert psi_integral_g0((2, 1, 0, 0, 0, 0)) == 3

    def test_matches_string_recursion(self):
        for points in range(3, 8):
            for exponents in compositions(points - 3, points):
                if 0 in exponents:
                    assert psi_integral_g0(exponents) == string_recursion_g0(exponents)

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInput):
            psi_integral_g0((1, 0, 0))
        with pytest.raises(InvalidInput):
            psi_integral_g0((0, 0))


class TestGenusOne:
    def test_starting_values(self):
        assert psi_integral_g1((1,)) == Fraction(1, 24)
        assert psi_integral_g1((0,), with_lambda_one=True) == Fraction(1, 24)

    def test_two_points(self):
        assert psi_integral_g1((2, 0)) == Fraction(1, 24)
        assert psi_integral_g1((0, 2)) == Fraction(1, 24)
        assert psi_integral_g1((1, 1)) == Fraction(1, 24)

    def test_known_values(self):
        assert psi_integral_g1((1, 1, 1)) == Fraction(1, 12)
        assert psi_integral_g1((2, 1, 0)) == Fraction(1, 12)
        assert psi_integral_g1((3, 0, 0)) == Fraction(1, 24)

    def test_dilaton(self):
        for points in range(1, 5):
            for exponents in compositions(points, points):
                assert psi_integral_g1(exponents + (1,)) == points * psi_integral_g1(exponents)

    def test_string(self):
        for points in range(1, 5):
            for exponents in compositions(points + 1, points):
                lowered = [exponents[:i] + (a - 1,) + exponents[i + 1:] for i, a in enumerate(exponents) if a]
                assert psi_integral_g1(exponents + (0,)) == sum(psi_integral_g1(e) for e in lowered)

    def test_lambda_one_reduction(self):
        for points in range(1, 6):
            for exponents in compositions(points - 1, points):
                value = psi_integral_g1(exponents, with_lambda_one=True)
                assert value == lambda_one_closed_form(exponents)

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInput):
            psi_integral_g1((1,), with_lambda_one=True)
        with pytest.raises(InvalidInput):
            psi_integral_g1(())


class TestBlowupTangentIntegral:
    def test_values(self):
        assert blowup_tangent_integral(1, 0) == Fraction(1, 24)
        assert blowup_tangent_integral(3, 1) == Fraction(1, 4)
        assert blowup_tangent_integral(7, 1) == 210

    @pytest.mark.parametrize("m", range(1, 11))
    @pytest.mark.parametrize("jp_size", range(4))
    def test_closed_form(self, m, jp_size):
        assert blowup_tangent_integral(m, jp_size) == Fraction(m ** jp_size * factorial(m - 1), 24)

    def test_unmarked_values_are_factorials(self):
        for m in range(1, 11):
            assert 24 * blowup_tangent_integral(m, 0) == factorial(m - 1)
            assert blowup_tangent_integral(m + 1, 0) == m * blowup_tangent_integral(m, 0)
            for jp_size in range(3):
                assert blowup_tangent_integral(m, jp_size + 1) == m * blowup_tangent_integral(m, jp_size)

    def test_agrees_with_elliptic_point(self):
        assert blowup_tangent_integral(1, 0) == psi_integral_g1((0,), with_lambda_one=True)

    def test_invalid(self):
        with pytest.raises(InvalidInput):
            blowup_tangent_integral(0, 0)


class TestQueries:
    def test_queries(self):
        assert evaluate_query("g0:2,1,0,0,0,0") == 3
        assert evaluate_query("g1:2,0") == Fraction(1, 24)
        assert evaluate_query("g1l:0") == Fraction(1, 24)
        assert evaluate_query("blowup:7,1") == 210

    def test_monomial(self):
        assert PsiMonomial(1, (1, 1, 1)).value() == Fraction(1, 12)
        assert PsiMonomial(0, (0, 0, 0, 1)).dimension() == 1
        with pytest.raises(InvalidInput):
            PsiMonomial(0, (0, 0, 0), lambda_one=True).value()

    @pytest.mark.parametrize("query", ["g5:1", "g0:x", "blowup:3", "g0:1,0,0"])
    def test_malformed(self, query):
        with pytest.raises(InvalidInput):
            evaluate_query(query)
