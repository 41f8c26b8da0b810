"""Numerical semigroups and their gaps, delta invariant and conductor."""

from math import gcd

from zetaforge.errors import EmptyGenerators, InvalidInput, NotNumerical
from zetaforge.utils import logger


class NumericalSemigroup:
    """
    Cofinite additive submonoid of the non-negative integers.

    Parameters
    ----------
    generators : iterable of positive int
        Any generating set; it is reduced to the minimal one.

    Examples
    --------
    >>> S = NumericalSemigroup([3, 4])
    >>> S.gaps, S.delta, S.conductor
    ((1, 2, 5), 3, 6)
    """

    __slots__ = (
        "min_generators",
        "gaps",
        "conductor",
        "delta",
        "multiplicity",
        "_member",
    )

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] <= 0:
            raise InvalidInput("generators must be positive, got %s" % gens)
        if gcd(*gens) != 1:
            raise NotNumerical("gcd(%s) = %s" % (",".join(map(str, gens)), gcd(*gens)))

        # every gap is below (m-1)(M-1) (Schur's bound on the Frobenius number)
        bound = (gens[0] - 1) * (gens[-1] - 1) + gens[-1] + 1
        member = [False] * bound
        member[0] = True
        for n in range(1, bound):
            member[n] = any(n >= g and member[n - g] for g in gens)

        self.gaps = tuple(n for n in range(bound) if not member[n])
        self.delta = len(self.gaps)
        self.conductor = self.gaps[-1] + 1 if self.gaps else 0
        self.min_generators = tuple(
            g
            for g in gens
            if not any(member[a] and member[g - a] for a in range(1, g))
        )
        self.multiplicity = self.min_generators[0]
        # membership table; everything at or past the conductor is in
        self._member = tuple(member[: self.conductor])
        logger.debug(
            "Semigroup %s: delta=%s conductor=%s", self, self.delta, self.conductor
        )

    def __contains__(self, n):
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return self._member[n]

    def contains(self, n):
        return n in self

    def elements_upto(self, bound):
        """Sorted elements of the semigroup in ``[0, bound)``."""
        return [n for n in range(max(bound, 0)) if n in self]

    @property
    def frobenius(self):
        """Largest gap, ``-1`` for the whole of N0."""
        return self.conductor - 1

    def is_symmetric(self):
        """Symmetric (Gorenstein) semigroups have ``c == 2 delta``."""
        return self.conductor == 2 * self.delta

    @property
    def generators(self):
        return self.min_generators

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.min_generators == other.min_generators

    def __hash__(self):
        return hash(self.min_generators)

    def __str__(self):
        return "⟨%s⟩" % ",".join(map(str, self.min_generators))

    def __repr__(self):
        return "NumericalSemigroup(%r)" % (list(self.min_generators),)

    def to_json(self):
        return {
            "generators": list(self.min_generators),
            "gaps": list(self.gaps),
            "delta": self.delta,
            "conductor": self.conductor,
        }


def parse_generators(text):
    """Parse ``"3,4"`` (spaces allowed) into ``[3, 4]``."""
    items = [p.strip() for p in str(text).split(",")]
    if any(p == "" for p in items):
        raise InvalidInput("malformed generator list %r" % text)
    try:
        return [int(p) for p in items]
    except ValueError:
        raise InvalidInput("malformed generator list %r" % text)


def make_semigroup(gens):
    """Build the semigroup generated by ``gens`` (a list or ``"3,4"`` text)."""
    if isinstance(gens, str):
        gens = parse_generators(gens)
    return NumericalSemigroup(gens)


def contains(S, n):
    return n in S


def elements_upto(S, bound):
    return S.elements_upto(bound)
