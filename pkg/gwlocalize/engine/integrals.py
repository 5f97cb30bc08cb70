"""
Intersection numbers on moduli spaces of curves.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence, Tuple

from .exceptions import InvalidInput

logger = logging.getLogger(__name__)

ELLIPTIC_POINT_CLASS = Fraction(1, 24)


def _multinomial(exponents: Sequence[int]) -> int:
    result = factorial(sum(exponents))
    for exponent in exponents:
        result //= factorial(exponent)
    return result


def psi_integral_g0(exponents: Sequence[int]) -> Fraction:
    """``<tau_{a_1} ... tau_{a_n}>_0`` on the space of n-pointed rational curves."""
    exponents = tuple(exponents)
    points = len(exponents)
    if points < 3:
        raise InvalidInput("genus-zero integrals need at least 3 points, got %d" % points)
    if any(a < 0 for a in exponents) or sum(exponents) != points - 3:
        raise InvalidInput("exponents %r do not match dimension %d" % (exponents, points - 3))
    return Fraction(_multinomial(exponents))


@lru_cache(maxsize=None)
def _genus_one(key: Tuple[Tuple[int, ...], bool]) -> Fraction:
    exponents, lambda_one = key
    points = len(exponents)
    if points == 1:
        # <tau_1>_1 and <lambda_1>_1
        value = ELLIPTIC_POINT_CLASS
    elif 0 in exponents:
        rest = list(exponents)
        rest.remove(0)
        value = Fraction(0)
        for i, a in enumerate(rest):
            if a:
                lowered = rest[:i] + [a - 1] + rest[i + 1:]
                value += _genus_one((tuple(sorted(lowered)), lambda_one))
    else:
        # all exponents equal 1 here, so the dilaton equation applies
        rest = list(exponents)
        rest.remove(1)
        value = (points - 1) * _genus_one((tuple(rest), lambda_one))
    return value


def psi_integral_g1(exponents: Sequence[int], with_lambda_one: bool = False) -> Fraction:
    """
    ``<lambda_1^e tau_{a_1} ... tau_{a_n}>_1`` by the string and dilaton
    equations, starting from ``<tau_1>_1 = <lambda_1>_1 = 1/24``.
    """
    exponents = tuple(exponents)
    points = len(exponents)
    if points < 1:
        raise InvalidInput("genus-one integrals need at least one point")
    if any(a < 0 for a in exponents) or sum(exponents) + int(with_lambda_one) != points:
        raise InvalidInput(
            "exponents %r%s do not match dimension %d"
            % (exponents, " with lambda_1" if with_lambda_one else "", points)
        )
    return _genus_one((tuple(sorted(exponents)), bool(with_lambda_one)))


def lambda_one_closed_form(exponents: Sequence[int]) -> Fraction:
    """``<lambda_1 tau_{a_1} ... tau_{a_n}>_1 = (1/24) * (n-1)! / prod a_i!``."""
    return ELLIPTIC_POINT_CLASS * _multinomial(exponents)


def blowup_tangent_integral(m: int, jp_size: int) -> Fraction:
    """Top power of the first Chern class of the dual universal tangent line on the blown-up space."""
    if m < 1 or jp_size < 0:
        raise InvalidInput("need m >= 1 and |J_P| >= 0, got m=%r, |J_P|=%r" % (m, jp_size))
    return Fraction(m ** jp_size * factorial(m - 1), 24)


@dataclass(frozen=True)
class PsiMonomial:
    genus: int
    exponents: Tuple[int, ...]
    lambda_one: bool = False

    def dimension(self) -> int:
        points = len(self.exponents)
        return points - 3 if self.genus == 0 else points

    def value(self) -> Fraction:
        if self.genus == 0:
            if self.lambda_one:
                raise InvalidInput("lambda_1 vanishes in genus zero")
            return psi_integral_g0(self.exponents)
        if self.genus == 1:
            return psi_integral_g1(self.exponents, self.lambda_one)
        raise InvalidInput("genus %r is not supported" % self.genus)


QUERY_PREFIXES = {"g0": (0, False), "g1": (1, False), "g1l": (1, True)}


def evaluate_query(query: str) -> Fraction:
    """
    Evaluate a query such as ``g0:2,1,0,0,0,0``, ``g1:2,0``, ``g1l:1,0`` or
    ``blowup:3,1``.
    """
    prefix, _, body = query.partition(":")
    try:
        numbers = tuple(int(part) for part in body.split(",") if part.strip())
    except ValueError:
        raise InvalidInput("malformed query %r" % query)

    if prefix == "blowup":
        if len(numbers) != 2:
            raise InvalidInput("blowup queries take m,|J_P|")
        return blowup_tangent_integral(*numbers)
    if prefix not in QUERY_PREFIXES:
        raise InvalidInput("unknown query kind %r" % prefix)
    genus, lambda_one = QUERY_PREFIXES[prefix]
    return PsiMonomial(genus, numbers, lambda_one).value()
