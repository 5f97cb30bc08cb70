import itertools
import random
from fractions import Fraction

import pytest

from gwlocalize.engine.exactnum import (
    WeightAssignment,
    bigrat,
    product,
    reseed,
    sample_weights,
)
from gwlocalize.engine.exceptions import InvalidInput


class TestSampleWeights:
    def test_deterministic_in_seed(self):
        first = sample_weights(1, 42)
        assert first == sample_weights(1, 42)
        assert len(first.alphas) == 2
        assert first[0] != first[1]

    def test_seeds_decorrelate(self):
        assert sample_weights(4, 0).alphas != sample_weights(4, 1).alphas

    def test_pairwise_differences_nonzero(self):
        weights = sample_weights(4, 0)
        differences = [a - b for a, b in itertools.combinations(weights.alphas, 2)]
        assert len(differences) == 10
        assert all(differences)
        assert all(weights.alphas)

    def test_magnitudes_bounded(self):
        for seed in range(20):
            for alpha in sample_weights(4, seed).alphas:
                assert abs(alpha.numerator) < 2 ** 31
                assert 0 < alpha.denominator < 2 ** 31

    def test_rejects_empty_ambient_space(self):
        with pytest.raises(InvalidInput):
            sample_weights(0, 0)

    def test_reseed_moves_the_draw(self):
        assert reseed(3, 0) == 3
        assert sample_weights(4, reseed(3, 1)) != sample_weights(4, 3)


class TestWeightAssignment:
    def test_tangent_euler(self):
        weights = WeightAssignment((Fraction(1), Fraction(2), Fraction(5)), seed=0)
        assert weights.tangent_euler(0) == (1 - 2) * (1 - 5)
        assert weights.tangent_euler(2) == (5 - 1) * (5 - 2)
        assert weights.n == 2

    def test_shift_keeps_differences(self):
        weights = sample_weights(3, 5)
        shifted = weights.shifted(Fraction(7, 3))
        for i in range(4):
            assert shifted.tangent_euler(i) == weights.tangent_euler(i)

    def test_permuted(self):
        weights = sample_weights(2, 1)
        permuted = weights.permuted((2, 0, 1))
        assert permuted.alphas == (weights[2], weights[0], weights[1])


class TestBigRat:
    def test_field_axioms(self):
        rng = random.Random(11)
        for _ in range(50):
            a, b, c = (Fraction(rng.randint(-999, 999), rng.randint(1, 999)) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if a:
                assert a * (1 / a) == 1

    def test_canonical_form_idempotent(self):
        value = bigrat(6, -4)
        assert value == Fraction(-3, 2)
        assert bigrat(value) == value
        assert (value.numerator, value.denominator) == (-3, 2)

    def test_parse_string(self):
        assert bigrat("-3/7") == Fraction(-3, 7)

    def test_product(self):
        assert product([]) == 1
        assert product(Fraction(k, k + 1) for k in range(1, 6)) == Fraction(1, 6)
