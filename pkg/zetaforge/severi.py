"""
Degrees of Severi strata from the semimodule generating function.

For an irreducible plane branch with delta invariant ``δ``

    (1-q) I(G; q) = sum_{h=0}^{δ} q^(δ-h) (1-q)^(2h) deg V_h

The basis polynomial of index ``h`` starts at ``q^(δ-h)`` with coefficient 1,
so the degrees are read off from the constant term upward and the remaining
coefficients must cancel exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from zetaforge.errors import InvalidInput, InversionFailure
from zetaforge.polyalg import IntPoly, exact, exact_str
from zetaforge.semimodule import semimodule_numerator
from zetaforge.utils import logger


@dataclass(frozen=True)
class SeveriDegrees:
    delta: int
    degrees: tuple

    def __getitem__(self, h):
        return self.degrees[h]

    def __str__(self):
        return ", ".join("deg V_%s = %s" % (h, d) for h, d in enumerate(self.degrees))

    def to_json(self):
        return {"delta": self.delta, "degrees": [exact_str(d) for d in self.degrees]}


def _basis(delta, h):
    return IntPoly([1, -1]) ** (2 * h) * IntPoly.monomial(delta - h)


def forward_severi(degrees, delta=None):
    """``sum_h q^(δ-h) (1-q)^(2h) degrees[h]`` as a polynomial in ``q``."""
    delta = len(degrees) - 1 if delta is None else delta
    if len(degrees) != delta + 1:
        raise InvalidInput("need %s degrees for delta %s, got %s" % (delta + 1, delta, len(degrees)))
    out = IntPoly([])
    for h, d in enumerate(degrees):
        out = out + _basis(delta, h) * exact(d)
    return out


def invert_severi(f, delta):
    """
    Solve ``f = sum_h q^(δ-h) (1-q)^(2h) d_h`` for ``d_0..d_δ``.

    Raises
    ------
    InversionFailure
        If the coefficients of ``q^(δ+1)`` and above do not cancel.
    """
    if delta < 0:
        raise InvalidInput("delta must be >= 0, got %s" % delta)
    degrees = [0] * (delta + 1)
    partial = IntPoly([])
    for e in range(delta + 1):
        h = delta - e
        degrees[h] = exact(Fraction(f[e] - partial[e]))
        partial = partial + _basis(delta, h) * degrees[h]
    residual = f - partial
    if not residual.is_zero():
        raise InversionFailure("residual %s for delta %s" % (residual, delta))
    for h, d in enumerate(degrees):
        if not isinstance(d, int):
            logger.warning("deg V_%s = %s is not an integer", h, d)
    return SeveriDegrees(delta, tuple(degrees))


def severi_degrees(S):
    """Severi degrees ``deg V_0..deg V_δ`` of the branch with semigroup ``S``."""
    if not S.is_symmetric():
        raise InvalidInput(
            "%s is not symmetric (c = %s, 2 delta = %s); not a plane branch"
            % (S, S.conductor, 2 * S.delta)
        )
    f = semimodule_numerator(S)
    logger.debug("Inverting Severi system for %s with f = %s", S, f)
    return invert_severi(f, S.delta)
