"""
HOMFLY bottom rows of algebraic knots.

The Euler series of a branch at ``q^2`` is the lowest ``a``-row of the HOMFLY
polynomial of its link, normalised by ``(q/a)^(mu-1)``. For the torus knots
``T(2, n)`` the polynomial comes from the skein relation

    a P(L+) - a^-1 P(L-) = z P(L0),    z = q - q^-1,  P(unknot) = 1,

which for the positive braid ``sigma^n`` reads
``P(n) = a^-2 P(n-2) + a^-1 z P(n-1)``.
"""

from fractions import Fraction
from functools import lru_cache

import sympy as sp

from zetaforge.errors import InvalidInput
from zetaforge.polyalg import IntPoly, RationalFn, exact, exact_str
from zetaforge.semigroup import NumericalSemigroup
from zetaforge.semimodule import semimodule_numerator
from zetaforge.utils import logger


a, z, q = sp.symbols("a z q")


class HomflyPoly:
    """Sparse Laurent polynomial in ``a`` and ``q``: ``{(a_exp, q_exp): coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {k: exact(c) for k, c in terms.items() if c != 0}

    @classmethod
    def from_expr(cls, expr):
        """Read an expanded sympy Laurent polynomial in ``a`` and ``q``."""
        terms = {}
        for term in sp.Add.make_args(sp.expand(expr)):
            if term == 0:
                continue
            coeff, rest = term.as_coeff_Mul()
            powers = rest.as_powers_dict()
            extra = set(powers) - {a, q, sp.S.One}
            if extra or not coeff.is_Rational:
                raise InvalidInput("%s is not a Laurent polynomial in a, q" % term)
            key = (int(powers.get(a, 0)), int(powers.get(q, 0)))
            terms[key] = terms.get(key, 0) + Fraction(int(coeff.p), int(coeff.q))
        return cls(terms)

    def a_support(self):
        return sorted({ea for ea, _ in self.terms})

    def evaluate(self, a_value, q_value):
        a_value, q_value = Fraction(a_value), Fraction(q_value)
        return exact(
            sum(c * a_value**ea * q_value**eq for (ea, eq), c in self.terms.items())
        )

    def a_coefficient(self, k):
        """Coefficient of ``a^k`` as ``(shift, IntPoly)``, meaning ``q^shift * poly``."""
        row = {eq: c for (ea, eq), c in self.terms.items() if ea == k}
        if not row:
            return 0, IntPoly([])
        lo = min(row)
        return lo, IntPoly(row.get(lo + i, 0) for i in range(max(row) - lo + 1))

    def to_sympy(self):
        return sp.Add(
            *(
                sp.Rational(str(c)) * a**ea * q**eq
                for (ea, eq), c in self.terms.items()
            )
        )

    def __eq__(self, other):
        if not isinstance(other, HomflyPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return str(self.to_sympy())

    def to_json(self):
        return {
            "terms": [
                [ea, eq, exact_str(c)] for (ea, eq), c in sorted(self.terms.items())
            ]
        }


@lru_cache(maxsize=None)
def skein_torus2(n):
    """Unmirrored ``P(T(2, n))`` in ``a`` and ``z``; ``n = 0`` is the unlink."""
    if n == 0:
        return (a - 1 / a) / z
    if n == 1:
        return sp.Integer(1)
    return sp.expand(skein_torus2(n - 2) / a**2 + z * skein_torus2(n - 1) / a)


def torus2_homfly(n):
    """
    Normalised HOMFLY polynomial of ``T(2, n)`` in positive ``a`` powers.

    Examples
    --------
    >>> torus2_homfly(3) == HomflyPoly.from_expr(2*a**2 - a**4 + a**2*(q - 1/q)**2)
    True
    """
    if n <= 0 or n % 2 == 0:
        raise InvalidInput("T(2, n) is a knot only for odd n >= 1, got %s" % n)
    mirrored = skein_torus2(n).subs({a: 1 / a, z: -z}, simultaneous=True)
    P = HomflyPoly.from_expr(mirrored.subs(z, q - 1 / q))
    logger.debug("HOMFLY of T(2,%s) has %s terms", n, len(P.terms))
    return P


def bottom_row(P, mu):
    """
    ``q^(mu-1)`` times the ``a^(mu-1)`` coefficient of ``P (a - a^-1) / (q - q^-1)``.
    """
    k = mu - 1
    # a^k in P * (a - 1/a) comes from a^(k-1) and a^(k+1) in P
    lo_minus, below = P.a_coefficient(k - 1)
    lo_plus, above = P.a_coefficient(k + 1)
    lo = min(lo_minus, lo_plus)
    row = below.shift(lo_minus - lo) - above.shift(lo_plus - lo)
    # q^k * q^lo * row / (q - 1/q) = q^(k+lo+1) * row / (q^2 - 1)
    return RationalFn.from_laurent(row, k + lo + 1, IntPoly([-1, 0, 1]))


def predicted_bottom_row(S):
    """``f(q^2) / (1 - q^2)`` with ``f`` the semimodule numerator of ``S``."""
    return RationalFn(semimodule_numerator(S), IntPoly([1, -1])).substitute(2)


def _torus_degree(S):
    if len(S.min_generators) != 2 or S.multiplicity != 2:
        raise InvalidInput("%s is not the semigroup of a T(2, n) knot" % S)
    return S.min_generators[1]


def compare_bottom_row(S):
    """The skein bottom row of ``T(2, 2d+1)`` equals the prediction for ``<2, 2d+1>``."""
    n = _torus_degree(S)
    mu = S.conductor
    computed = bottom_row(torus2_homfly(n), mu)
    predicted = predicted_bottom_row(S)
    logger.debug("Bottom row of T(2,%s): computed %s, predicted %s", n, computed, predicted)
    return computed == predicted


def homfly_check(p, n):
    """
    Predicted and, for ``p = 2``, computed bottom rows of ``T(p, n)``.

    Returns
    -------
    dict with ``mu``, ``predicted``, ``computed`` and ``match``; the last two
    are ``None`` when no skein computation is available.
    """
    S = NumericalSemigroup([p, n])
    if len(S.min_generators) != 2:
        raise InvalidInput("T(%s, %s) is not a nontrivial torus knot" % (p, n))
    mu = S.conductor
    predicted = predicted_bottom_row(S)
    computed = None
    if S.multiplicity == 2:
        computed = bottom_row(torus2_homfly(S.min_generators[1]), mu)
    return {
        "mu": mu,
        "predicted": predicted,
        "computed": computed,
        "match": None if computed is None else computed == predicted,
    }
