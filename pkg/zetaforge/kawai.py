"""
Euler numbers of Hilbert schemes of points on singular curves.

For a projective curve ``C`` of arithmetic genus ``g`` with singular points
from the supported families, the local zeta functions at ``L = 1`` multiply to

    sum_l chi(C^[l]) q^l = (1-q)^(2 g~ - 2 + sum b_i) prod Z_{C,p_i}(q, 1)

and, written in ``x = q / (1-q)^2`` and ``T = q + 1/q``, the shifted series
``q^(1-g) sum_l chi(C^[l]) q^l`` is the finite sum ``sum_h n_h x^(1-h)`` with
integer BPS numbers. Every formula is evaluated as an exact series in ``q``.
"""

from dataclasses import dataclass
from math import comb

from zetaforge.errors import (
    DecompositionFailure,
    InvalidCurveSpec,
    InvalidInput,
    TruncationTooShort,
)
from zetaforge.polyalg import IntPoly, LaurentSeries, RationalFn, series_from_rational
from zetaforge.utils import default_truncation as _default_truncation
from zetaforge.utils import logger
from zetaforge.zeta import A1, A2d, E6, E8, euler_zeta, parse_singularity


ONE_MINUS_Q = IntPoly([1, -1])

# families drawn by random_curve_spec unless told otherwise
DEFAULT_FAMILIES = (A1, A2d(1), A2d(2), A2d(3), E6, E8)


@dataclass(frozen=True)
class CurveSpec:
    """
    Arithmetic genus plus the number of singular points of each type.

    Parameters
    ----------
    genus : int
        Arithmetic genus ``g >= 0``.
    sing_counts : dict
        ``{SingularityType: multiplicity}``; zero multiplicities are dropped.
    """

    genus: int
    sing_counts: tuple = ()

    def __post_init__(self):
        genus = self.genus
        counts = dict(self.sing_counts or {})
        for s, m in counts.items():
            if m < 0:
                raise InvalidInput("multiplicity of %s must be >= 0, got %s" % (s, m))
        if genus < 0:
            raise InvalidInput("arithmetic genus must be >= 0, got %s" % genus)
        items = tuple(
            sorted(
                ((s, m) for s, m in counts.items() if m > 0),
                key=lambda sm: (sm[0].tag, sm[0].d),
            )
        )
        object.__setattr__(self, "sing_counts", items)
        if self.geometric_genus < 0:
            raise InvalidCurveSpec(
                "g~ = %s - %s = %s < 0"
                % (genus, genus - self.geometric_genus, self.geometric_genus)
            )

    @property
    def geometric_genus(self):
        return self.genus - sum(m * s.delta for s, m in self.sing_counts)

    @property
    def conductors(self):
        return [s.conductor for s, _ in self.sing_counts]

    def counts(self):
        return dict(self.sing_counts)

    @classmethod
    def parse(cls, genus, text):
        """Build from ``"A1:2,A2d(3):1,E6:1"``; an omitted count means 1."""
        counts = {}
        for item in (p.strip() for p in (text or "").split(",")):
            if not item:
                continue
            tag, _, m = item.rpartition(":") if ":" in item else (item, None, "1")
            try:
                m = int(m)
            except ValueError:
                raise InvalidInput("malformed singularity count in %r" % item)
            s = parse_singularity(tag)
            counts[s] = counts.get(s, 0) + m
        return cls(genus, counts)

    def __str__(self):
        sings = ",".join("%s:%s" % (s, m) for s, m in self.sing_counts)
        return "g=%s [%s]" % (self.genus, sings)

    def to_json(self):
        return {
            "genus": self.genus,
            "geometric_genus": self.geometric_genus,
            "singularities": {str(s): m for s, m in self.sing_counts},
        }


@dataclass(frozen=True)
class BpsVector:
    """Integers ``n_h`` for ``g~ <= h <= g``."""

    genus: int
    geometric_genus: int
    numbers: tuple

    def __getitem__(self, h):
        if not self.geometric_genus <= h <= self.genus:
            raise KeyError(h)
        return self.numbers[self.genus - h]

    def as_dict(self):
        return {h: self[h] for h in range(self.genus, self.geometric_genus - 1, -1)}

    def __str__(self):
        return ", ".join("n_%s=%s" % (h, n) for h, n in self.as_dict().items())

    def to_json(self):
        return {str(h): str(n) for h, n in self.as_dict().items()}


def f_poly(i):
    """``F_0 = 2``, ``F_1 = T``, ``F_i = T F_(i-1) - F_(i-2)``."""
    if i < 0:
        raise InvalidInput("F_i needs i >= 0, got %s" % i)
    T = IntPoly([0, 1], var="T")
    prev, cur = IntPoly([2], var="T"), T
    if i == 0:
        return prev
    for _ in range(i - 1):
        prev, cur = cur, T * cur - prev
    return cur


def g_poly(i):
    """
    ``G_i(T)`` with ``sum_{l<=i} q^(2l) / (1-q)^(2i) = 1 + x^i G_i(q + 1/q)``.

    Examples
    --------
    >>> str(g_poly(2))
    '4T−5'
    """
    if i < 1:
        raise InvalidInput("G_i needs i >= 1, got %s" % i)
    # F_j with j of the parity of i pick up 1 - binom, the others + binom
    out = IntPoly([], var="T")
    for j in range(1, i + 1):
        c = comb(2 * i, i + j)
        c = 1 - c if (i + j) % 2 == 0 else c
        if c:
            out = out + f_poly(j) * c
    constant = 1 - comb(2 * i, i) if i % 2 == 0 else comb(2 * i, i)
    return out + constant


def g_poly_e6():
    return IntPoly([9, -14, 6], var="T")


def g_poly_e8():
    return IntPoly([-15, 33, -27, 8], var="T")


def local_factor(s):
    """
    ``(i, G)`` such that the point ``s`` contributes ``1 + x^i G(T)``.

    ``i`` is the delta invariant; the node contributes ``1 + x``.
    """
    if s.tag == "A1":
        return 1, IntPoly([1], var="T")
    if s.tag == "A2d":
        return s.d, g_poly(s.d)
    if s.tag == "E6":
        return 3, g_poly_e6()
    return 4, g_poly_e8()


def _cleared_identity(exponents, G, i):
    lhs = IntPoly([1 if e in exponents else 0 for e in range(2 * i + 1)])
    lhs = lhs - ONE_MINUS_Q ** (2 * i)
    return lhs == G.reciprocal_compose(i)


def verify_w2(i):
    """``sum_{l=0}^i q^(2l) - (1-q)^(2i) == q^i G_i(q + 1/q)``."""
    return _cleared_identity({2 * l for l in range(i + 1)}, g_poly(i), i)


def verify_w4_lemma(i):
    """``F_i(q + 1/q) == q^i + q^-i``, checked after multiplying by ``q^i``."""
    rhs = IntPoly.monomial(2 * i) + 1 if i > 0 else IntPoly([2])
    return f_poly(i).reciprocal_compose(i) == rhs


def verify_node_identity():
    """``(1 - q + q^2) / (1-q)^2 == 1 + q / (1-q)^2``."""
    den = ONE_MINUS_Q**2
    return RationalFn(IntPoly([1, -1, 1]), den) == 1 + RationalFn(IntPoly([0, 1]), den)


def verify_w5():
    return _cleared_identity({0, 2, 3, 4, 6}, g_poly_e6(), 3)


def verify_w6():
    return _cleared_identity({0, 2, 3, 4, 5, 6, 8}, g_poly_e8(), 4)


def x_power_series(k, trunc_order):
    """``x^k = q^k (1-q)^(-2k)`` known below ``trunc_order``."""
    if k <= 0:
        return LaurentSeries.from_poly(ONE_MINUS_Q ** (-2 * k), trunc_order - k).shift(k)
    return series_from_rational(
        IntPoly([1]), ONE_MINUS_Q ** (2 * k), trunc_order - k
    ).shift(k)


def x_polynomial_series(p, shift, trunc_order):
    """``sum_k p_k x^(k + shift)`` for a polynomial ``p`` in ``x``."""
    out = LaurentSeries.zero(trunc_order)
    for k, c in p.terms():
        out = out + x_power_series(k + shift, trunc_order) * c
    return out


def _one_minus_q_power(e, N):
    if e >= 0:
        return LaurentSeries.from_poly(ONE_MINUS_Q**e, N)
    return series_from_rational(IntPoly([1]), ONE_MINUS_Q ** (-e), N)


def curve_euler_series(c, N):
    """
    ``sum_{l < N} chi(C^[l]) q^l`` from the local zeta functions.

    The exponent of ``(1-q)`` is ``2 g~ - 2 + sum b_i``, with ``b = 2`` at each
    node and ``b = 1`` elsewhere.
    """
    if N < 1:
        raise InvalidInput("need N >= 1, got %s" % N)
    e = 2 * c.geometric_genus - 2 + sum(m * s.branches for s, m in c.sing_counts)
    out = _one_minus_q_power(e, N)
    for s, m in c.sing_counts:
        out = out * euler_zeta(s).series(N) ** m
    logger.debug("Euler series of %s through q^%s", c, N - 1)
    return out


def local_factor_series(s, N):
    """``1 + x^i G(q + 1/q)`` for the point ``s``, known below ``N``."""
    i, G = local_factor(s)
    den = ONE_MINUS_Q ** (2 * i)
    return series_from_rational(den + G.reciprocal_compose(i), den, N)


def kawai_product_series(c, N):
    """
    ``x^(1-g) prod_i (1 + x^(delta_i) G_i(T))^(m_i)`` expanded in ``q``.

    The result starts at ``q^(1-g)`` and is known below ``q^(N+1-g)``, i.e.
    it matches ``q^(1-g) * curve_euler_series(c, N)`` term by term.
    """
    if N < 1:
        raise InvalidInput("need N >= 1, got %s" % N)
    g = c.genus
    out = x_power_series(1 - g, N + 1 - g)
    for s, m in c.sing_counts:
        out = out * local_factor_series(s, N) ** m
    return out


def macdonald_series(g, N):
    """Shifted Euler series ``x^(1-g)`` of a smooth curve of genus ``g``."""
    return kawai_product_series(CurveSpec(g), N)


def kawai_original_series(g, m, n, N):
    """``x^(1-g) (1 + x)^m (1 + 2x)^n`` for ``m`` nodes and ``n`` cusps."""
    if N < 1:
        raise InvalidInput("need N >= 1, got %s" % N)
    p = IntPoly([1, 1], var="x") ** m * IntPoly([1, 2], var="x") ** n
    return x_polynomial_series(p, 1 - g, N + 1 - g)


def check_kawai(c, N):
    """The product formula agrees with the local-zeta Euler series below ``N``."""
    lhs = curve_euler_series(c, N).shift(1 - c.genus)
    rhs = kawai_product_series(c, N)
    ok = lhs == rhs
    logger.debug("Kawai product for %s through %s: %s", c, N, ok)
    return ok


def bps_decompose(series, g, g_tilde):
    """
    Integers ``n_h`` with ``series = sum_{h=g~}^{g} n_h x^(1-h)``.

    ``series`` is the shifted Euler series starting at ``q^(1-g)``. The
    lowest exponent of ``x^(1-h)`` is ``1 - h``, so the numbers are peeled
    off from ``h = g`` downward.
    """
    if g_tilde > g:
        raise InvalidInput("g~ = %s exceeds g = %s" % (g_tilde, g))
    if series.trunc_order <= 1 - g_tilde:
        raise TruncationTooShort(
            "need %s known terms from q^%s, got %s"
            % (g - g_tilde + 1, 1 - g, series.trunc_order - 1 + g)
        )
    remainder = series
    if any(remainder[e] != 0 for e in range(series.min_exp, 1 - g)):
        raise DecompositionFailure("series has terms below q^%s" % (1 - g))
    numbers = []
    for h in range(g, g_tilde - 1, -1):
        n_h = remainder[1 - h]
        if not isinstance(n_h, int):
            raise DecompositionFailure("n_%s = %s is not an integer" % (h, n_h))
        logger.debug("Peeled n_%s = %s", h, n_h)
        numbers.append(n_h)
        if n_h:
            remainder = remainder - x_power_series(1 - h, series.trunc_order) * n_h
    if not remainder.is_zero():
        raise DecompositionFailure(
            "remainder %s after peeling h = %s..%s" % (remainder, g, g_tilde)
        )
    return BpsVector(g, g_tilde, tuple(numbers))


def bps_series(bps, N):
    """``sum_h n_h x^(1-h)`` known below ``q^(N+1-g)``; inverse of ``bps_decompose``."""
    p = IntPoly(bps.numbers, var="x")
    return x_polynomial_series(p, 1 - bps.genus, N + 1 - bps.genus)


def curve_bps(c, N=None):
    """BPS numbers of the curve ``c`` from its Euler series."""
    if N is None:
        N = default_truncation(c)
    shifted = curve_euler_series(c, N).shift(1 - c.genus)
    return bps_decompose(shifted, c.genus, c.geometric_genus)


def default_truncation(c):
    """``max(2 c_i) + 2 g + 10`` for the curve ``c``, or ``ZETAFORGE_TRUNC``."""
    return _default_truncation(c.conductors, c.genus)


def random_curve_spec(rng, families=DEFAULT_FAMILIES, max_geometric_genus=3, max_count=2):
    """Draw a curve with ``g~ >= 0`` from ``families`` using ``rng`` (``random.Random``)."""
    counts = {s: rng.randint(0, max_count) for s in families}
    g_tilde = rng.randint(0, max_geometric_genus)
    genus = g_tilde + sum(m * s.delta for s, m in counts.items())
    return CurveSpec(genus, counts)
