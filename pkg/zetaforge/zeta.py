"""
Motivic Hilbert zeta functions of the A1, A2d, E6 and E8 curve singularities.

``Z(t, L) = sum_l [C_p^[l]] t^l = f(t, L) / (1 - t)^b`` with ``b`` the number
of branches. The numerators are the closed forms obtained from the affine cell
decompositions of the punctual Hilbert schemes; setting ``L = 1`` counts cells
and gives Euler numbers.
"""

import re
from dataclasses import dataclass, field

from zetaforge.errors import InvalidInput, UnknownSingularity
from zetaforge.polyalg import BiPoly, IntPoly, LaurentSeries, LPoly, RationalFn
from zetaforge.semigroup import NumericalSemigroup
from zetaforge.semimodule import igen
from zetaforge.utils import logger


_A2D_PATTERN = re.compile(r"^A2d\((\d+)\)$")
_A_PATTERN = re.compile(r"^A(\d+)$")


@dataclass(frozen=True)
class SingularityType:
    """One of ``A1``, ``A2d(d)`` (``d >= 1``), ``E6``, ``E8``."""

    tag: str
    d: int = 0

    def __post_init__(self):
        if self.tag not in ("A1", "A2d", "E6", "E8"):
            raise UnknownSingularity("unknown singularity tag %r" % self.tag)
        if self.tag == "A2d" and self.d < 1:
            raise InvalidInput("A2d needs d >= 1, got %s" % self.d)

    @property
    def branches(self):
        return 2 if self.tag == "A1" else 1

    @property
    def delta(self):
        return {"A1": 1, "A2d": self.d, "E6": 3, "E8": 4}[self.tag]

    @property
    def conductor(self):
        # plane curves are Gorenstein: dim(normalization / conductor ideal) = 2 delta
        return 2 * self.delta

    @property
    def milnor(self):
        return 2 * self.delta - self.branches + 1

    @property
    def semigroup(self):
        """Semigroup of the branch; ``None`` for the node."""
        if self.tag == "A1":
            return None
        if self.tag == "A2d":
            return NumericalSemigroup([2, 2 * self.d + 1])
        return NumericalSemigroup([3, 4] if self.tag == "E6" else [3, 5])

    def is_irreducible(self):
        return self.branches == 1

    def __str__(self):
        return "A2d(%s)" % self.d if self.tag == "A2d" else self.tag


A1 = SingularityType("A1")
E6 = SingularityType("E6")
E8 = SingularityType("E8")


def A2d(d):
    return SingularityType("A2d", d)


def parse_singularity(text):
    """
    Parse ``A1``, ``A2d(3)``, ``A6`` (same as ``A2d(3)``), ``E6`` or ``E8``.
    """
    s = str(text).strip()
    if s in ("A1", "E6", "E8"):
        return SingularityType(s)
    m = _A2D_PATTERN.match(s)
    if m:
        return A2d(int(m.group(1)))
    m = _A_PATTERN.match(s)
    if m:
        n = int(m.group(1))
        if n >= 2 and n % 2 == 0:
            return A2d(n // 2)
    raise UnknownSingularity("unknown singularity tag %r" % s)


@dataclass(frozen=True)
class ZetaFn:
    """``numerator(t, L) / (1 - t)**branch_exponent``."""

    numerator: BiPoly
    branch_exponent: int = 1
    singularity: SingularityType = field(default=None, compare=False)

    def class_series(self, N):
        return class_series(self, N)

    def euler_series(self, N):
        return euler_series(self, N)

    def at_L(self, value=1):
        """``Z(q, L=value)`` as a reduced rational function in ``q``."""
        num = self.numerator.eval_at(value).with_var("q")
        return RationalFn(num, IntPoly([1, -1]) ** self.branch_exponent)

    def __str__(self):
        den = "(1−t)" if self.branch_exponent == 1 else "(1−t)²" if self.branch_exponent == 2 \
            else "(1−t)^%s" % self.branch_exponent
        num = str(self.numerator)
        if len(self.numerator.terms()) > 1:
            num = "(%s)" % num
        return "%s/%s" % (num, den)

    def to_json(self):
        return {
            "type": str(self.singularity) if self.singularity else None,
            "numerator": self.numerator.to_json(),
            "branches": self.branch_exponent,
        }


def zeta_closed_form(s):
    """
    Closed-form motivic Hilbert zeta function of ``s``.

    Examples
    --------
    >>> str(zeta_closed_form(A1))
    '(1−t+𝕃t²)/(1−t)²'
    """
    if s.tag == "A1":
        terms = {(0, 0): 1, (1, 0): -1, (2, 1): 1}
    elif s.tag == "A2d":
        terms = {(2 * i, i): 1 for i in range(s.d + 1)}
    elif s.tag == "E6":
        terms = {(0, 0): 1, (2, 1): 1, (3, 2): 1, (4, 2): 1, (6, 3): 1}
    else:
        terms = {
            (0, 0): 1,
            (2, 1): 1,
            (3, 2): 1,
            (4, 2): 1,
            (5, 3): 1,
            (6, 3): 1,
            (8, 4): 1,
        }
    return ZetaFn(BiPoly.from_terms(terms), s.branches, s)


def class_series(z, N):
    """Classes ``[C_p^[l]]`` for ``l < N`` as polynomials in ``L``."""
    if N < 1:
        raise InvalidInput("need N >= 1, got %s" % N)
    classes = [z.numerator[l] for l in range(N)]
    for _ in range(z.branch_exponent):
        running = LPoly([])
        for l in range(N):
            running = running + classes[l]
            classes[l] = running
    return classes


def euler_series(z, N):
    """``Z(q, 1) = sum_l chi(C_p^[l]) q^l`` known below ``N``."""
    return LaurentSeries(0, [c(1) for c in class_series(z, N)], N)


def euler_zeta(s):
    """``Z(q, 1)`` of ``s`` as a reduced rational function."""
    return zeta_closed_form(s).at_L(1)


def jacobian_factor_class(s):
    """Stable class ``[J] = [C_p^[l]]`` for ``l >= c`` (branches only)."""
    if not s.is_irreducible():
        raise InvalidInput("%s has no stable punctual Hilbert scheme class" % s)
    return class_series(zeta_closed_form(s), s.conductor + 1)[s.conductor]


def check_theorem_main4(s, N):
    """
    Euler series of ``s`` equals the semimodule generating function of its
    semigroup through ``q^(N-1)``.
    """
    if not s.is_irreducible():
        raise InvalidInput("%s is not irreducible; it has no semigroup" % s)
    euler = euler_series(zeta_closed_form(s), N)
    S = s.semigroup
    counts, _ = igen(S, max(N, S.conductor + 1))
    ok = euler.coefficients(0, N) == counts.coefficients(0, N)
    logger.debug("Euler series of %s vs I(%s; q) through %s: %s", s, S, N, ok)
    return ok
