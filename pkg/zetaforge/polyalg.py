"""Exact polynomial and truncated series arithmetic.

Everything here works over Python integers and ``fractions.Fraction``; no value
is ever rounded. Polynomials are dense (index = exponent) since every object in
this package has small degree.
"""

from fractions import Fraction
from math import gcd, lcm

from zetaforge.errors import DivisionByZero, NotDivisible, TruncationTooShort


_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
MINUS = "−"

# names used when rendering; internal variable names stay ascii
DISPLAY_NAMES = {"L": "𝕃"}

# polynomials in these variables read better highest power first
DESCENDING_VARS = {"T"}


def exact(value):
    """Return ``value`` as an int when it is integral, else as a Fraction."""
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value)
    value = Fraction(value)
    if value.denominator == 1:
        return int(value.numerator)
    return value


def exact_str(value):
    """Decimal (or ``p/q``) string used in JSON output."""
    return str(exact(value))


def _superscript(n):
    return str(n).translate(_SUPERSCRIPTS)


def _monomial_text(var, e):
    if e == 0:
        return ""
    return var if e == 1 else var + _superscript(e)


def _coefficient_text(c, mono):
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if isinstance(c, Fraction):
        return "(%s)%s" % (c, mono)
    return "%s%s" % (c, mono)


def format_terms(terms, var):
    """Render ``(exponent, coefficient)`` pairs as a signed unicode sum."""
    var = DISPLAY_NAMES.get(var, var)
    pieces = []
    for e, c in terms:
        if c == 0:
            continue
        negative = c < 0
        body = _coefficient_text(-c if negative else c, _monomial_text(var, e))
        pieces.append((negative, body))
    if not pieces:
        return "0"
    negative, body = pieces[0]
    out = (MINUS if negative else "") + body
    for negative, body in pieces[1:]:
        out += (MINUS if negative else "+") + body
    return out


class IntPoly:
    """Dense univariate polynomial with exact coefficients.

    Parameters
    ----------
    coeffs : iterable of int or Fraction
        ``coeffs[i]`` is the coefficient of ``var**i``. Trailing zeros are
        stripped.
    var : str
        Variable name, ``"q"`` unless stated otherwise.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="q"):
        cs = [exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k, coeff=1, var="q"):
        return cls([0] * k + [coeff], var=var)

    @classmethod
    def constant(cls, c, var="q"):
        return cls([c], var=var)

    def _like(self, coeffs):
        return type(self)(coeffs, var=self.var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def valuation(self):
        """Lowest exponent with a nonzero coefficient (None for zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, IntPoly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError(
                    "Mixing polynomials in %r and %r" % (self.var, other.var)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self._like([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return self._like(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self._like([])
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("Negative powers of a polynomial are not polynomials")
        result = self._like([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs == IntPoly([other]).coeffs
        if not isinstance(other, IntPoly):
            return NotImplemented
        # constants are equal across variables
        if self.var != other.var and self.degree > 0:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var if self.degree > 0 else None, self.coeffs))

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a number or any ring element."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def divmod(self, other):
        """Long division over the rationals, returning ``(quotient, remainder)``."""
        if other.is_zero():
            raise DivisionByZero("Polynomial division by zero")
        rem = list(self.coeffs)
        lead = Fraction(other.leading)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = exact(c / lead)
            quot[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= f * b
        return self._like(quot), self._like(rem[:dq] if dq > 0 else [])

    def divexact(self, other):
        """Exact quotient; raises ``NotDivisible`` on a nonzero remainder."""
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise NotDivisible("%s is not divisible by %s" % (self, other))
        return quot

    def primitive(self):
        """Integer multiple with coprime integer coefficients and positive lead."""
        if self.is_zero():
            return self
        den = lcm(*(Fraction(c).denominator for c in self.coeffs))
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return self._like(c // g for c in ints)

    def substitute(self, k):
        """``var -> var**k`` for ``k >= 1``."""
        if k < 1:
            raise ValueError("substitution power must be >= 1, got %s" % k)
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return self._like(out)

    def shift(self, s):
        """Multiply by ``var**s`` (``s >= 0``)."""
        if s < 0:
            raise ValueError("Use LaurentSeries for negative shifts")
        return self._like([0] * s + list(self.coeffs)) if self.coeffs else self

    def eval_at(self, value):
        return self(value)

    def with_var(self, var):
        return IntPoly(self.coeffs, var=var)

    def reciprocal_compose(self, k, var="q"):
        """Return ``q**k * p(q + 1/q)`` as a polynomial in ``q``.

        Requires ``k >= deg p`` so the result has no negative powers.
        """
        if k < self.degree:
            raise ValueError("need k >= degree (%s < %s)" % (k, self.degree))
        q2p1 = IntPoly([1, 0, 1], var=var)
        out = IntPoly([], var=var)
        power = IntPoly([1], var=var)
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + (power * c).shift(k - j)
            power = power * q2p1
        return out

    def terms(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if c != 0]

    def __str__(self):
        terms = self.terms()
        if self.var in DESCENDING_VARS:
            terms = terms[::-1]
        return format_terms(terms, self.var)

    def __repr__(self):
        return "%s(%r, var=%r)" % (type(self).__name__, list(self.coeffs), self.var)

    def to_json(self):
        return {"var": self.var, "coeffs": [exact_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls([exact(c) for c in data["coeffs"]], var=data.get("var", "q"))


class LPoly(IntPoly):
    """Polynomial in the Lefschetz class, stored under the variable ``L``."""

    __slots__ = ()

    def __init__(self, coeffs=(), var="L"):
        super().__init__(coeffs, var=var)


def poly_gcd(p, q):
    """Primitive greatest common divisor of two polynomials over the rationals."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.primitive()


class BiPoly:
    """Polynomial in ``t`` whose coefficients are polynomials in ``L``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="t"):
        cs = [c if isinstance(c, LPoly) else LPoly(_as_list(c)) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_terms(cls, terms, var="t"):
        """Build from ``{(t_exp, L_exp): coeff}``."""
        if not terms:
            return cls([], var=var)
        top = max(i for i, _ in terms)
        rows = [[0] * (max(j for _, j in terms) + 1) for _ in range(top + 1)]
        for (i, j), c in terms.items():
            rows[i][j] += c
        return cls([LPoly(r) for r in rows], var=var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return LPoly([])

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        n = max(len(self), len(other))
        return BiPoly((self[i] + other[i] for i in range(n)), var=self.var)

    def __neg__(self):
        return BiPoly((-c for c in self.coeffs), var=self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LPoly)):
            return BiPoly((c * other for c in self.coeffs), var=self.var)
        if self.is_zero() or other.is_zero():
            return BiPoly([], var=self.var)
        out = [LPoly([]) for _ in range(len(self) + len(other) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out, var=self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divexact(self, other):
        """Exact division by a polynomial in ``t`` with constant coefficients."""
        if isinstance(other, IntPoly) and not isinstance(other, LPoly):
            if other.is_zero():
                raise DivisionByZero("BiPoly division by zero")
            # divide each L-slice separately
            width = max((len(c) for c in self.coeffs), default=0)
            slices = []
            for j in range(width):
                col = IntPoly([c[j] for c in self.coeffs], var=self.var)
                slices.append(col.divexact(other))
            n = max((len(s) for s in slices), default=0)
            return BiPoly(
                (LPoly([s[i] for s in slices]) for i in range(n)), var=self.var
            )
        raise TypeError("Can only divide a BiPoly by a polynomial in %s" % self.var)

    def substitute(self, k):
        """``t -> t**k``; the L-coefficients are untouched."""
        if k < 1:
            raise ValueError("substitution power must be >= 1, got %s" % k)
        out = [LPoly([]) for _ in range(k * self.degree + 1)] if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return BiPoly(out, var=self.var)

    def eval_at(self, value):
        """Evaluate every L-coefficient at ``L = value``."""
        return IntPoly((c(value) for c in self.coeffs), var=self.var)

    def terms(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def __str__(self):
        var = DISPLAY_NAMES.get(self.var, self.var)
        pieces = []
        for i, c in self.terms():
            mono = _monomial_text(var, i)
            nz = c.terms()
            if len(nz) == 1:
                # single L-monomial coefficient: fold into the term
                e, k = nz[0]
                lmono = _monomial_text(DISPLAY_NAMES["L"], e)
                text = _coefficient_text(abs(k), lmono + mono) if (lmono or mono) else str(abs(k))
                pieces.append((k < 0, text))
            else:
                pieces.append((False, "(%s)%s" % (c, mono) if mono else str(c)))
        if not pieces:
            return "0"
        out = (MINUS if pieces[0][0] else "") + pieces[0][1]
        for negative, text in pieces[1:]:
            out += (MINUS if negative else "+") + text
        return out

    def __repr__(self):
        return "BiPoly(%r)" % ([list(c.coeffs) for c in self.coeffs],)

    def to_json(self):
        return {
            "var": self.var,
            "coeffs": [[exact_str(x) for x in c.coeffs] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            (LPoly([exact(x) for x in row]) for row in data["coeffs"]),
            var=data.get("var", "t"),
        )


def _as_list(c):
    if isinstance(c, IntPoly):
        return list(c.coeffs)
    if isinstance(c, (int, Fraction)):
        return [c]
    return list(c)


class LaurentSeries:
    """Truncated Laurent series ``sum_{min_exp <= e < trunc_order} c_e var**e``.

    Coefficients at exponents ``>= trunc_order`` are unknown and never reported.

    Parameters
    ----------
    min_exp : int
        Exponent of ``coeffs[0]``.
    coeffs : iterable of int or Fraction
    trunc_order : int (None)
        First unknown exponent. Defaults to ``min_exp + len(coeffs)``.
    var : str ("q")
    """

    __slots__ = ("min_exp", "coeffs", "trunc_order", "var")

    def __init__(self, min_exp, coeffs, trunc_order=None, var="q"):
        cs = [exact(c) for c in coeffs]
        if trunc_order is None:
            trunc_order = min_exp + len(cs)
        if trunc_order <= min_exp:
            raise ValueError(
                "trunc_order (%s) must exceed min_exp (%s)" % (trunc_order, min_exp)
            )
        width = trunc_order - min_exp
        cs = cs[:width] + [0] * (width - len(cs))
        self.min_exp = min_exp
        self.coeffs = tuple(cs)
        self.trunc_order = trunc_order
        self.var = var

    @classmethod
    def from_poly(cls, poly, trunc_order, shift=0):
        """Series of ``var**shift * poly`` known below ``trunc_order``."""
        if trunc_order <= shift:
            return cls.zero(trunc_order, var=poly.var)
        return cls(shift, poly.coeffs, trunc_order, var=poly.var)

    @classmethod
    def zero(cls, trunc_order, var="q"):
        return cls(trunc_order - 1, [0], trunc_order, var=var)

    @classmethod
    def one(cls, trunc_order, var="q"):
        if trunc_order <= 0:
            return cls.zero(trunc_order, var=var)
        return cls(0, [1], trunc_order, var=var)

    def valuation(self):
        """Exponent of the first nonzero known coefficient (None if all zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return self.min_exp + i
        return None

    def _stripped(self):
        v = self.valuation()
        if v is None or v == self.min_exp:
            return self
        return LaurentSeries(v, self.coeffs[v - self.min_exp:], self.trunc_order, self.var)

    def __getitem__(self, e):
        if e >= self.trunc_order:
            raise TruncationTooShort(
                "coefficient of %s^%s is beyond the truncation order %s"
                % (self.var, e, self.trunc_order)
            )
        if e < self.min_exp:
            return 0
        return self.coeffs[e - self.min_exp]

    def coefficients(self, start, stop):
        return [self[e] for e in range(start, stop)]

    def items(self):
        return [(self.min_exp + i, c) for i, c in enumerate(self.coeffs)]

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentSeries.from_poly(IntPoly([other], var=self.var), self.trunc_order)
        if isinstance(other, IntPoly):
            return LaurentSeries.from_poly(other, self.trunc_order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.trunc_order, other.trunc_order)
        if hi <= lo:
            return LaurentSeries.zero(hi, self.var)
        return LaurentSeries(
            lo, (self[e] + other[e] for e in range(lo, hi)), hi, self.var
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.min_exp, (-c for c in self.coeffs), self.trunc_order, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(
                self.min_exp, (c * other for c in self.coeffs), self.trunc_order, self.var
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._stripped(), other._stripped()
        va, vb = a.valuation(), b.valuation()
        if va is None or vb is None:
            va = a.trunc_order if va is None else va
            vb = b.trunc_order if vb is None else vb
            return LaurentSeries.zero(
                min(va + b.trunc_order, vb + a.trunc_order), self.var
            )
        hi = min(va + b.trunc_order, vb + a.trunc_order)
        width = hi - (va + vb)
        out = [0] * width
        for i, x in enumerate(a.coeffs[:width]):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs[: width - i]):
                out[i + j] += x * y
        return LaurentSeries(va + vb, out, hi, self.var)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; the lowest known coefficient must be nonzero."""
        a = self._stripped()
        v = a.valuation()
        if v is None:
            raise DivisionByZero("Series is zero to its truncation order")
        n = a.trunc_order - v
        u0 = Fraction(a.coeffs[0])
        inv = []
        for k in range(n):
            s = Fraction(1 if k == 0 else 0)
            for j in range(1, min(k, len(a.coeffs) - 1) + 1):
                s -= a.coeffs[j] * inv[k - j]
            inv.append(exact(s / u0))
        return LaurentSeries(-v, inv, n - v, self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("Series division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            v = self.valuation()
            return LaurentSeries.one(self.trunc_order - (v or 0), self.var)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def shift(self, s):
        """Multiply by ``var**s``."""
        return LaurentSeries(self.min_exp + s, self.coeffs, self.trunc_order + s, self.var)

    def truncate(self, trunc_order):
        if trunc_order > self.trunc_order:
            raise TruncationTooShort(
                "cannot extend a series known below %s to %s"
                % (self.trunc_order, trunc_order)
            )
        if trunc_order <= self.min_exp:
            return LaurentSeries.zero(trunc_order, self.var)
        return LaurentSeries(self.min_exp, self.coeffs, trunc_order, self.var)

    def substitute(self, k):
        """``var -> var**k``; exponents and truncation order scale by ``k``."""
        if k < 1:
            raise ValueError("substitution power must be >= 1, got %s" % k)
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return LaurentSeries(self.min_exp * k, out, self.trunc_order * k, self.var)

    def agrees_with(self, other):
        """True when both series coincide on their common known range."""
        hi = min(self.trunc_order, other.trunc_order)
        lo = min(self.min_exp, other.min_exp)
        return all(self[e] == other[e] for e in range(lo, hi))

    def is_zero(self):
        return self.valuation() is None

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.trunc_order == other.trunc_order and self.agrees_with(other)

    def __hash__(self):
        s = self._stripped()
        return hash((s.min_exp, s.coeffs, s.trunc_order))

    def __str__(self):
        body = format_terms(self.items(), self.var)
        big_o = "O(%s)" % (DISPLAY_NAMES.get(self.var, self.var) + _superscript(self.trunc_order))
        return big_o if body == "0" else "%s+%s" % (body, big_o)

    def __repr__(self):
        return "LaurentSeries(%r, %r, %r)" % (self.min_exp, list(self.coeffs), self.trunc_order)

    def to_json(self):
        s = self._stripped()
        return {
            "var": s.var,
            "min_exp": s.min_exp,
            "coeffs": [exact_str(c) for c in s.coeffs],
            "trunc_order": s.trunc_order,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["min_exp"],
            [exact(c) for c in data["coeffs"]],
            data.get("trunc_order"),
            var=data.get("var", "q"),
        )


def series_from_rational(num, den, N):
    """Expand ``num/den`` as a Laurent series with coefficients below ``N``.

    ``den`` may vanish at 0 (``den = var**k * u`` with ``u(0) != 0``); the
    result then starts at a negative exponent.

    Examples
    --------
    >>> str(series_from_rational(IntPoly([1]), IntPoly([1, -1]), 4))
    '1+q+q²+q³+O(q⁴)'
    """
    if den.is_zero():
        raise DivisionByZero("Cannot expand a rational function with zero denominator")
    var = den.var if den.degree > 0 else num.var
    k = den.valuation()
    u = den.coeffs[k:]
    v = num.valuation()
    if v is None:
        return LaurentSeries.zero(N, var)
    start = v - k
    count = N - start
    if count <= 0:
        return LaurentSeries.zero(N, var)
    a = num.coeffs[v:]
    u0 = u[0]
    out = []
    for n in range(count):
        s = a[n] if n < len(a) else 0
        for j in range(1, min(n, len(u) - 1) + 1):
            s -= u[j] * out[n - j]
        out.append(exact(Fraction(s) / u0))
    return LaurentSeries(start, out, N, var)


def substitute(s, k):
    """``var -> var**k`` for polynomials, series and rational functions."""
    return s.substitute(k)


def eval_at(p, value):
    """Specialise ``L = value`` coefficient-wise (LPoly gives a number)."""
    return p.eval_at(value)


def divexact(p, q):
    return p.divexact(q)


class RationalFn:
    """Reduced quotient of two polynomials in one variable.

    The stored pair is primitive over the integers with the denominator's
    lowest nonzero coefficient positive, so equal functions print the same.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        if denominator is None:
            denominator = IntPoly([1], var=numerator.var)
        if denominator.is_zero():
            raise DivisionByZero("Rational function with zero denominator")
        var = numerator.var if numerator.degree > 0 else denominator.var
        numerator = numerator.with_var(var)
        denominator = denominator.with_var(var)
        if numerator.is_zero():
            self.numerator = IntPoly([], var=var)
            self.denominator = IntPoly([1], var=var)
            return
        g = poly_gcd(numerator, denominator)
        num = numerator.divexact(g)
        den = denominator.divexact(g)
        # scale to primitive integers
        scale = lcm(
            *(Fraction(c).denominator for c in num.coeffs + den.coeffs)
        )
        num, den = num * scale, den * scale
        content = gcd(*(int(c) for c in num.coeffs + den.coeffs))
        if den[den.valuation()] < 0:
            content = -content
        self.numerator = IntPoly((int(c) // content for c in num.coeffs), var=var)
        self.denominator = IntPoly((int(c) // content for c in den.coeffs), var=var)

    @property
    def var(self):
        return self.numerator.var

    @classmethod
    def from_laurent(cls, numerator, shift, denominator):
        """Build ``var**shift * numerator / denominator`` (``shift`` may be negative)."""
        if shift >= 0:
            return cls(numerator.shift(shift), denominator)
        return cls(numerator, denominator.shift(-shift))

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, IntPoly):
            return RationalFn(other)
        if isinstance(other, (int, Fraction)):
            return RationalFn(IntPoly([other], var=self.var))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFn(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFn(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.numerator.is_zero():
            raise DivisionByZero("Division by the zero rational function")
        return RationalFn(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __pow__(self, n):
        if n < 0:
            return RationalFn(self.denominator ** (-n), self.numerator ** (-n))
        return RationalFn(self.numerator**n, self.denominator**n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def is_polynomial(self):
        return self.denominator.degree == 0

    def substitute(self, k):
        return RationalFn(self.numerator.substitute(k), self.denominator.substitute(k))

    def series(self, N):
        return series_from_rational(self.numerator, self.denominator, N)

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        num = str(self.numerator)
        if len(self.numerator.terms()) > 1:
            num = "(%s)" % num
        den = str(self.denominator)
        if len(self.denominator.terms()) > 1:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def __repr__(self):
        return "RationalFn(%r, %r)" % (self.numerator, self.denominator)

    def to_json(self):
        return {
            "var": self.var,
            "numerator": [exact_str(c) for c in self.numerator.coeffs],
            "denominator": [exact_str(c) for c in self.denominator.coeffs],
        }
