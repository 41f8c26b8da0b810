import random
from fractions import Fraction

import pytest

from zetaforge.errors import DivisionByZero, NotDivisible, TruncationTooShort
from zetaforge.polyalg import (
    BiPoly,
    IntPoly,
    LaurentSeries,
    LPoly,
    RationalFn,
    divexact,
    eval_at,
    exact,
    poly_gcd,
    series_from_rational,
    substitute,
)

one_minus_q = IntPoly([1, -1])


def test_exact():
    assert exact(Fraction(4, 2)) == 2
    assert isinstance(exact(Fraction(4, 2)), int)
    assert exact("3/4") == Fraction(3, 4)
    with pytest.raises(ValueError):
        exact("three")


def test_intpoly_arithmetic():
    assert one_minus_q**2 == IntPoly([1, -2, 1])
    assert one_minus_q * (1 + IntPoly([0, 1])) == IntPoly([1, 0, -1])
    assert 2 - one_minus_q == IntPoly([1, 1])
    assert IntPoly([0, 0, 0]).is_zero()
    assert IntPoly([0, 0, 3]).valuation() == 2
    assert IntPoly([1, 2, 3])(2) == 17


def test_intpoly_str():
    assert str(one_minus_q) == "1−q"
    assert str(IntPoly([0, 0, 1])) == "q²"
    assert str(IntPoly([-5, 4], var="T")) == "4T−5"
    assert str(IntPoly([])) == "0"
    assert str(LPoly([1, 1, 2])) == "1+𝕃+2𝕃²"


def test_mixed_variables():
    with pytest.raises(ValueError):
        IntPoly([0, 1]) + IntPoly([0, 1], var="T")


def test_division():
    q2m1 = IntPoly([-1, 0, 1])
    assert q2m1.divexact(IntPoly([-1, 1])) == IntPoly([1, 1])
    quot, rem = IntPoly([1, 0, 1]).divmod(IntPoly([-1, 1]))
    assert quot == IntPoly([1, 1])
    assert rem == IntPoly([2])
    with pytest.raises(NotDivisible):
        IntPoly([1, 0, 1]).divexact(IntPoly([-1, 1]))
    with pytest.raises(DivisionByZero):
        IntPoly([1]).divmod(IntPoly([]))


def test_gcd():
    a = IntPoly([-1, 0, 1])
    b = IntPoly([1, 2, 1])
    assert poly_gcd(a, b) == IntPoly([1, 1])


def test_reciprocal_compose():
    T = IntPoly([0, 1], var="T")
    # q * (q + 1/q) = 1 + q^2
    assert T.reciprocal_compose(1) == IntPoly([1, 0, 1])
    assert (T * T).reciprocal_compose(2) == IntPoly([1, 0, 2, 0, 1])
    with pytest.raises(ValueError):
        (T * T).reciprocal_compose(1)


def test_substitute_and_shift():
    assert one_minus_q.substitute(2) == IntPoly([1, 0, -1])
    assert one_minus_q.shift(2) == IntPoly([0, 0, 1, -1])
    with pytest.raises(ValueError):
        one_minus_q.shift(-1)


def test_geometric_series():
    s = series_from_rational(IntPoly([1]), one_minus_q, 4)
    assert str(s) == "1+q+q²+q³+O(q⁴)"
    assert s.coefficients(0, 4) == [1, 1, 1, 1]
    with pytest.raises(TruncationTooShort):
        s[4]


def test_series_with_pole():
    s = series_from_rational(IntPoly([1]), IntPoly([0, 1, -1]), 3)
    assert s.min_exp == -1
    assert s.coefficients(-1, 3) == [1, 1, 1, 1]
    with pytest.raises(DivisionByZero):
        series_from_rational(IntPoly([1]), IntPoly([]), 3)


def test_series_product_and_inverse():
    s = series_from_rational(IntPoly([1]), one_minus_q, 5)
    assert s * one_minus_q == LaurentSeries.one(5)
    inv = LaurentSeries.from_poly(one_minus_q, 5).inverse()
    assert inv.coefficients(0, 5) == [1] * 5
    assert (s / s) == LaurentSeries.one(5)
    squared = s**2
    assert squared.coefficients(0, 5) == [1, 2, 3, 4, 5]


def test_series_truncation_rules():
    s = LaurentSeries(0, [1, 2, 3], 3)
    t = LaurentSeries(0, [1, 2, 3, 4, 5], 5)
    assert (s + t).trunc_order == 3
    assert s.agrees_with(t)
    assert s != t
    assert t.truncate(3) == s
    with pytest.raises(TruncationTooShort):
        s.truncate(4)
    assert s.shift(-2).min_exp == -2
    assert s.shift(-2)[-1] == 2


def test_series_substitute():
    s = series_from_rational(IntPoly([1]), one_minus_q, 4).substitute(2)
    assert s.trunc_order == 8
    assert s.coefficients(0, 8) == [1, 0, 1, 0, 1, 0, 1, 0]


def test_series_json():
    s = LaurentSeries(-1, [1, Fraction(1, 2), 0], 2)
    data = s.to_json()
    assert data == {"var": "q", "min_exp": -1, "coeffs": ["1", "1/2", "0"], "trunc_order": 2}
    assert LaurentSeries.from_json(data) == s


def test_rational_reduction():
    r = RationalFn(IntPoly([-1, 0, 1]), IntPoly([-1, 1]))
    assert r == RationalFn(IntPoly([1, 1]))
    assert r.is_polynomial()
    assert str(r) == "1+q"
    f = IntPoly([1, 0, 1, 1, 1, 0, 1])
    assert str(RationalFn(f, one_minus_q)) == "(1+q²+q³+q⁴+q⁶)/(1−q)"
    # sign moves to the numerator
    assert str(RationalFn(IntPoly([1]), IntPoly([-1, 1]))) == "−1/(1−q)"
    with pytest.raises(DivisionByZero):
        RationalFn(IntPoly([1]), IntPoly([]))


def test_rational_arithmetic():
    x = RationalFn(IntPoly([0, 1]), one_minus_q**2)
    node = RationalFn(IntPoly([1, -1, 1]), one_minus_q**2)
    assert 1 + x == node
    assert node - x == 1
    assert (x * x) / x == x
    assert x**-1 == RationalFn(one_minus_q**2, IntPoly([0, 1]))
    assert x.substitute(2) == RationalFn(IntPoly([0, 0, 1]), IntPoly([1, 0, -1]) ** 2)
    assert x.series(4).coefficients(0, 4) == [0, 1, 2, 3]


def test_bipoly():
    f = BiPoly.from_terms({(0, 0): 1, (1, 0): -1, (2, 1): 1})
    assert str(f) == "1−t+𝕃t²"
    assert f[2] == LPoly([0, 1])
    assert f.degree == 2
    assert f.eval_at(1) == IntPoly([1, -1, 1], var="t")
    g = BiPoly.from_terms({(0, 0): 1, (1, 1): 1})
    assert str(f * BiPoly.from_terms({(0, 0): 1})) == str(f)
    assert (f * g).divexact(IntPoly([1], var="t")) == f * g
    assert BiPoly.from_json(f.to_json()) == f


def random_poly(rng, cls=IntPoly, max_degree=5, **kwargs):
    return cls([rng.randint(-4, 4) for _ in range(rng.randint(0, max_degree + 1))], **kwargs)


def random_bipoly(rng):
    return BiPoly(random_poly(rng, LPoly, max_degree=3) for _ in range(rng.randint(0, 5)))


def test_ring_axioms():
    rng = random.Random(0)
    for _ in range(100):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert (a - a).is_zero()
        assert a + 0 == a
        if not b.is_zero():
            assert divexact(a * b, b) == a


def test_bipoly_ring_axioms():
    rng = random.Random(1)
    for _ in range(50):
        a, b, c = (random_bipoly(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a - a).is_zero()


def test_series_from_rational_round_trip():
    rng = random.Random(2)
    for _ in range(100):
        num = random_poly(rng)
        den = random_poly(rng, max_degree=4)
        if den[0] == 0:
            den = den + 1
        N = rng.randint(1, 12)
        s = series_from_rational(num, den, N)
        assert (s * den).coefficients(0, N) == [num[e] for e in range(N)]


def test_substitute_commutes_with_eval():
    rng = random.Random(3)
    for _ in range(50):
        p = random_bipoly(rng)
        k = rng.randint(1, 3)
        value = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        assert eval_at(substitute(p, k), value) == substitute(eval_at(p, value), k)


def test_substitute_wrapper():
    assert substitute(one_minus_q, 3) == IntPoly([1, 0, 0, -1])
    s = substitute(series_from_rational(IntPoly([1]), one_minus_q, 3), 2)
    assert s.coefficients(0, 6) == [1, 0, 1, 0, 1, 0]
    with pytest.raises(ValueError):
        substitute(BiPoly([1]), 0)


def test_variable_aware_equality():
    assert IntPoly([0, 1], var="q") != IntPoly([0, 1], var="T")
    assert len({IntPoly([0, 1], var="q"), IntPoly([0, 1], var="T")}) == 2
    assert IntPoly([3], var="q") == IntPoly([3], var="T")
    assert len({IntPoly([3], var="q"), IntPoly([3], var="T")}) == 1
    assert hash(LPoly([1, 2])) == hash(IntPoly([1, 2], var="L"))
