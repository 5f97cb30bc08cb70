"""
Truncated polynomial rings in nilpotent cohomology generators.

A ring is described by its generators, each carrying an individual degree
cap, and by groups of generators whose *total* degree is capped as well (the
psi classes of one contracted component live on a moduli space of dimension
``val - 3``, so any monomial of higher total degree in them vanishes).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .exceptions import InvalidInput, NonGenericWeights

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    cap: int
    group: str


class NilpotentRing:
    def __init__(self, generators: Sequence[Generator], group_caps: Mapping[str, int] = None):
        self.generators = tuple(generators)
        self.index = {generator.name: i for i, generator in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise InvalidInput("generator names must be unique")

        self.group_caps = dict(group_caps or {})
        self.groups: Dict[str, Tuple[int, ...]] = {}
        for i, generator in enumerate(self.generators):
            self.groups.setdefault(generator.group, ())
            self.groups[generator.group] += (i,)
            self.group_caps.setdefault(generator.group, generator.cap)
        self.unit = (0,) * len(self.generators)

    def admissible(self, monomial: Monomial) -> bool:
        for exponent, generator in zip(monomial, self.generators):
            if exponent > generator.cap:
                return False
        for group, members in self.groups.items():
            if sum(monomial[i] for i in members) > self.group_caps[group]:
                return False
        return True

    @property
    def nilpotency_bound(self) -> int:
        """Every monomial of total degree above this bound vanishes."""
        return sum(self.group_caps[group] for group in self.groups)

    def const(self, value) -> "NilpotentClassPoly":
        value = Fraction(value)
        return NilpotentClassPoly(self, {self.unit: value} if value else {})

    def one(self):
        return self.const(1)

    def gen(self, name: str) -> "NilpotentClassPoly":
        try:
            i = self.index[name]
        except KeyError:
            raise InvalidInput("unknown generator %r" % name)
        monomial = tuple(1 if j == i else 0 for j in range(len(self.generators)))
        return NilpotentClassPoly(self, {monomial: Fraction(1)} if self.admissible(monomial) else {})


class NilpotentClassPoly:
    """An element of a :class:`NilpotentRing` with exact rational coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: NilpotentRing, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        self.terms = {monomial: coeff for monomial, coeff in terms.items() if coeff}

    def _coerce(self, other) -> "NilpotentClassPoly":
        if isinstance(other, NilpotentClassPoly):
            if other.ring is not self.ring:
                raise InvalidInput("cannot combine classes from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return NilpotentClassPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return NilpotentClassPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, NilpotentClassPoly):
            factor = Fraction(other)
            return NilpotentClassPoly(self.ring, {m: c * factor for m, c in self.terms.items()})
        other = self._coerce(other)
        terms: Dict[Monomial, Fraction] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                monomial = tuple(x + y for x, y in zip(left, right))
                if self.ring.admissible(monomial):
                    terms[monomial] = terms.get(monomial, 0) + a * b
        return NilpotentClassPoly(self.ring, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, NilpotentClassPoly):
            return self * other.inverse()
        if not other:
            raise NonGenericWeights("division by a zero weight")
        return self * (1 / Fraction(other))

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** -exponent
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NilpotentClassPoly):
            return self.ring is other.ring and self.terms == other.terms
        return self.terms == self.ring.const(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for monomial, coeff in sorted(self.terms.items()):
            names = "*".join(
                g.name if e == 1 else "%s^%d" % (g.name, e)
                for g, e in zip(self.ring.generators, monomial) if e
            )
            parts.append("%s*%s" % (coeff, names) if names else str(coeff))
        return " + ".join(parts)

    @property
    def constant(self) -> Fraction:
        return self.terms.get(self.ring.unit, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, **exponents) -> Fraction:
        monomial = [0] * len(self.ring.generators)
        for name, exponent in exponents.items():
            monomial[self.ring.index[name]] = exponent
        return self.terms.get(tuple(monomial), Fraction(0))

    def inverse(self) -> "NilpotentClassPoly":
        """Inverse through the terminating series ``1/(c(1+x)) = (1/c) sum (-x)^i``."""
        c = self.constant
        if not c:
            raise NonGenericWeights("class with vanishing weight is not invertible")
        x = self * (1 / c) - 1
        term = self.ring.one()
        result = self.ring.one()
        for _ in range(self.ring.nilpotency_bound):
            term = term * -x
            if term.is_zero():
                break
            result = result + term
        return result * (1 / c)


def product(factors: Iterable[NilpotentClassPoly], ring: NilpotentRing) -> NilpotentClassPoly:
    result = ring.one()
    for factor in factors:
        result = result * factor
    return result


def integrate(poly: NilpotentClassPoly, evaluators: Mapping[str, Callable[[Tuple[int, ...]], Fraction]]) -> Fraction:
    """
    Pair ``poly`` with the fundamental class of a product of spaces, one per
    generator group. Only monomials of full degree in every group survive;
    ``evaluators[group]`` returns the intersection number of the group's part.
    """
    ring = poly.ring
    missing = set(ring.groups) - set(evaluators)
    if missing:
        raise InvalidInput("no evaluator for groups %s" % ", ".join(sorted(missing)))

    total = Fraction(0)
    for monomial, coeff in poly.terms.items():
        value = coeff
        for group, members in ring.groups.items():
            exponents = tuple(monomial[i] for i in members)
            if sum(exponents) != ring.group_caps[group]:
                value = 0
                break
            value *= evaluators[group](exponents)
        total += value
    return total
