"""
Lines on hypersurfaces by Schubert calculus.

The number of lines on a general degree-``a`` hypersurface in P^n is the
degree of the top Chern class of Sym^a S* on the Grassmannian of lines
G(2, n+1). The Chern roots x1, x2 of S* are symmetrised into c1 = sigma_1 and
c2 = sigma_11, and the resulting monomials are evaluated with the Pieri rule.
It shares no code with the localization engine.
"""
from collections import defaultdict
from fractions import Fraction

import sympy
from sympy.polys.polyfuncs import symmetrize

from .exceptions import InvalidInput


def _pieri(classes, codim, top):
    """Multiply a combination of Schubert classes by sigma_1 (``codim=1``) or sigma_11 (``codim=2``)."""
    result = defaultdict(int)
    for (first, second), coeff in classes.items():
        if codim == 1:
            if first + 1 <= top:
                result[(first + 1, second)] += coeff
            if second + 1 <= first:
                result[(first, second + 1)] += coeff
        elif first + 1 <= top:
            result[(first + 1, second + 1)] += coeff
    return result


def grassmannian_lines_degree(sigma1_power: int, sigma11_power: int, n: int) -> int:
    """``<sigma_1^p sigma_11^q, G(2, n+1)>``."""
    top = n - 1
    if sigma1_power + 2 * sigma11_power != 2 * top:
        return 0
    classes = {(0, 0): 1}
    for _ in range(sigma11_power):
        classes = _pieri(classes, 2, top)
    for _ in range(sigma1_power):
        classes = _pieri(classes, 1, top)
    return classes.get((top, top), 0)


def lines_on_hypersurface(n: int, a: int) -> Fraction:
    if n < 2 or a < 1:
        raise InvalidInput("need n >= 2 and a >= 1")
    if a + 1 != 2 * (n - 1):
        raise InvalidInput(
            "lines on a degree-%d hypersurface in P^%d do not form a finite set" % (a, n)
        )
    x1, x2, c1, c2 = sympy.symbols("x1 x2 c1 c2")
    top_chern = sympy.Integer(1)
    for i in range(a + 1):
        top_chern *= i * x1 + (a - i) * x2
    symmetric, remainder, _ = symmetrize(sympy.expand(top_chern), x1, x2, formal=True, symbols=[c1, c2])
    if remainder != 0:
        raise InvalidInput("top Chern class failed to symmetrise")

    total = 0
    for (p, q), coeff in sympy.Poly(symmetric, c1, c2).terms():
        total += int(coeff) * grassmannian_lines_degree(p, q, n)
    return Fraction(total)
