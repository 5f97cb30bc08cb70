"""
Exact scalars and torus weights.

Every quantity the engine handles is a ``fractions.Fraction``; ``BigRat`` is
kept as the name used across the engine so signatures read in the language of
the computation.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .exceptions import InvalidInput

BigRat = Fraction

WEIGHT_NUMERATOR_BOUND = 10 ** 4
WEIGHT_DENOMINATOR_BOUND = 97

# Offset between successive resampling attempts of one seed.
RESEED_STRIDE = 104729


def bigrat(value, denominator=None) -> BigRat:
    """Coerce ints, strings such as ``"-3/7"`` and Fractions to a BigRat."""
    if denominator is None:
        return Fraction(value)
    return Fraction(value, denominator)


def product(values: Iterable[BigRat]) -> BigRat:
    result = Fraction(1)
    for value in values:
        result *= value
    return result


@dataclass(frozen=True)
class WeightAssignment:
    alphas: Tuple[BigRat, ...]
    seed: int

    @property
    def n(self):
        return len(self.alphas) - 1

    def __getitem__(self, i):
        return self.alphas[i]

    def tangent_euler(self, i) -> BigRat:
        """Euler class of the tangent space of P^n at the fixed point p_i."""
        return product(self.alphas[i] - self.alphas[j] for j in range(len(self.alphas)) if j != i)

    def shifted(self, c) -> "WeightAssignment":
        return WeightAssignment(tuple(alpha + c for alpha in self.alphas), self.seed)

    def permuted(self, permutation) -> "WeightAssignment":
        """Weights with ``alphas[permutation[i]]`` moved to position ``i``."""
        return WeightAssignment(tuple(self.alphas[j] for j in permutation), self.seed)


def sample_weights(n: int, seed: int) -> WeightAssignment:
    """
    Pairwise distinct, nonzero rational weights for the n+1 fixed points.

    The draw only depends on ``(n, seed)``.
    """
    if n < 1:
        raise InvalidInput("ambient dimension must be at least 1, got %r" % n)

    rng = random.Random(seed)
    alphas = []
    while len(alphas) < n + 1:
        numerator = rng.randint(1, WEIGHT_NUMERATOR_BOUND) * rng.choice((1, -1))
        alpha = Fraction(numerator, rng.randint(1, WEIGHT_DENOMINATOR_BOUND))
        if alpha not in alphas:
            alphas.append(alpha)
    return WeightAssignment(tuple(alphas), seed)


def reseed(seed: int, attempt: int) -> int:
    """Seed used for the ``attempt``-th resample after degenerate weights."""
    return seed + attempt * RESEED_STRIDE
