"""
Semimodules over a numerical semigroup and their generating function.

A semimodule ``D`` is a subset of the semigroup ``G`` with ``D + G ⊆ D`` and
finite complement ``G \\ D``. The complement is a down-set of the poset
``a ⪯ b  <=>  b - a ∈ G``, which is what gets enumerated here.
"""

from math import comb

from zetaforge.errors import InvalidInput, TruncationTooShort
from zetaforge.polyalg import IntPoly, LaurentSeries, RationalFn
from zetaforge.utils import logger


class SemiModule:
    """
    A semimodule stored through its finite complement in the semigroup.

    Parameters
    ----------
    parent : NumericalSemigroup
    complement : iterable of int
        The finite set ``G \\ D``; must be a down-set of the semigroup poset.
    """

    __slots__ = ("parent", "complement", "_complement_set", "_generators")

    def __init__(self, parent, complement):
        self.parent = parent
        self.complement = tuple(sorted(set(complement)))
        self._complement_set = frozenset(self.complement)
        self._generators = None
        for x in self.complement:
            if x not in parent:
                raise InvalidInput("%s is not an element of %s" % (x, parent))
            for g in parent.min_generators:
                if (x - g) in parent and (x - g) not in self._complement_set:
                    raise InvalidInput(
                        "complement %s is not closed downward at %s" % (self.complement, x)
                    )

    @property
    def codim(self):
        return len(self.complement)

    def __contains__(self, n):
        return n in self.parent and n not in self._complement_set

    @property
    def min_generators(self):
        """Elements of ``D`` that are not ``d + g`` with ``d ∈ D``, ``g ∈ G \\ {0}``."""
        if self._generators is None:
            S = self.parent
            top = self.complement[-1] + 1 if self.complement else 0
            bound = max(S.conductor, top) + S.multiplicity
            self._generators = tuple(
                n
                for n in range(bound)
                if n in self and not any((n - g) in self for g in S.min_generators)
            )
        return self._generators

    def is_closed(self):
        """Direct check of ``D + g ⊆ D`` for every generator ``g`` of the semigroup."""
        S = self.parent
        bound = max(S.conductor, self.complement[-1] + 1 if self.complement else 0)
        return all(
            (n + g) in self
            for n in range(bound + 1)
            if n in self
            for g in S.min_generators
        )

    def __eq__(self, other):
        if not isinstance(other, SemiModule):
            return NotImplemented
        return self.parent == other.parent and self.complement == other.complement

    def __hash__(self):
        return hash((self.parent, self.complement))

    def __str__(self):
        return "⟨%s⟩_Γ" % ",".join(map(str, self.min_generators))

    def __repr__(self):
        return "SemiModule(%r, %r)" % (self.parent, list(self.complement))

    def to_json(self):
        return {
            "generators": list(self.min_generators),
            "complement": list(self.complement),
            "codim": self.codim,
        }


def semimodule_from_generators(S, gens):
    """Semimodule ``∪ (g + G)`` for ``gens`` inside the semigroup ``S``."""
    gens = sorted(set(gens))
    if not gens:
        raise InvalidInput("a semimodule needs at least one generator")
    for g in gens:
        if g not in S:
            raise InvalidInput("generator %s is not an element of %s" % (g, S))
    bound = gens[0] + S.conductor + 1
    complement = [
        n for n in S.elements_upto(bound) if not any((n - g) in S for g in gens)
    ]
    return SemiModule(S, complement)


def _window(S, l):
    # a complement element u >= c + l*m would drag the chain u, u-m, ..., u-l*m along
    return S.conductor + l * S.multiplicity


def _iter_complements(S, max_size):
    """Yield every down-set of size <= ``max_size`` once, in lexicographic order."""
    elements = S.elements_upto(_window(S, max_size))
    covers = [
        tuple(x - g for g in S.min_generators if (x - g) in S) for x in elements
    ]
    logger.debug(
        "Enumerating down-sets of %s up to size %s over %s elements",
        S,
        max_size,
        len(elements),
    )
    chosen = []
    chosen_set = set()

    def walk(start):
        yield tuple(chosen)
        if len(chosen) == max_size:
            return
        for idx in range(start, len(elements)):
            x = elements[idx]
            if all(p in chosen_set for p in covers[idx]):
                chosen.append(x)
                chosen_set.add(x)
                yield from walk(idx + 1)
                chosen.pop()
                chosen_set.discard(x)

    yield from walk(0)


def enumerate_semimodules(S, l):
    """
    All semimodules of codimension ``l``, ordered lexicographically by complement.

    Examples
    --------
    >>> from zetaforge.semigroup import make_semigroup
    >>> [m.min_generators for m in enumerate_semimodules(make_semigroup([2, 3]), 2)]
    [(3, 4), (2,)]
    """
    if l < 0:
        raise InvalidInput("codimension must be >= 0, got %s" % l)
    return [SemiModule(S, c) for c in _iter_complements(S, l) if len(c) == l]


def count_table(S, upto):
    """Number of semimodules of each codimension ``0..upto`` in one pass."""
    if upto < 0:
        raise InvalidInput("codimension must be >= 0, got %s" % upto)
    counts = [0] * (upto + 1)
    for c in _iter_complements(S, upto):
        counts[len(c)] += 1
    return counts


def count_semimodules(S, l):
    if l < 0:
        raise InvalidInput("codimension must be >= 0, got %s" % l)
    return sum(1 for c in _iter_complements(S, l) if len(c) == l)


def stable_count(S):
    """Count at codimension ``c``; constant from there on."""
    return count_semimodules(S, S.conductor)


def catalan_count(p, q):
    """``binom(p+q, p) / (p+q)`` for coprime ``p, q``."""
    return comb(p + q, p) // (p + q)


def _differences(counts):
    return IntPoly(
        [counts[0]] + [counts[l] - counts[l - 1] for l in range(1, len(counts))]
    )


def semimodule_numerator(S):
    """The polynomial ``f(q) = (1 - q) I(G; q)``."""
    return _differences(count_table(S, S.conductor))


def igen(S, N):
    """
    Generating function ``I(G; q) = sum_D q^codim(D)``.

    Parameters
    ----------
    S : NumericalSemigroup
    N : int
        Series length; must exceed the conductor.

    Returns
    -------
    (LaurentSeries, RationalFn)
        Counts for codimensions ``< N`` and the normal form ``f(q)/(1-q)``.
    """
    if N <= S.conductor:
        raise TruncationTooShort(
            "need N > conductor %s for %s, got N=%s" % (S.conductor, S, N)
        )
    counts = count_table(S, S.conductor)
    stable = counts[-1]
    series = LaurentSeries(
        0, [counts[l] if l < len(counts) else stable for l in range(N)], N
    )
    return series, RationalFn(_differences(counts), IntPoly([1, -1]))


def check_rationality(S, extra=10):
    """
    ``(1-q) I(G; q)`` is a polynomial with constant term 1 and degree ``c``.

    The counts are enumerated ``extra`` codimensions past the conductor, so
    the vanishing of the tail is checked rather than assumed.
    """
    counts = count_table(S, S.conductor + extra)
    f = _differences(counts)
    return f[0] == 1 and f.degree == S.conductor
