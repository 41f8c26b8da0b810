import pytest

from zetaforge.errors import InvalidInput, UnknownSingularity
from zetaforge.polyalg import BiPoly, IntPoly, LPoly, RationalFn
from zetaforge.semigroup import make_semigroup
from zetaforge.semimodule import igen
from zetaforge.zeta import (
    A1,
    A2d,
    E6,
    E8,
    SingularityType,
    check_theorem_main4,
    class_series,
    euler_series,
    euler_zeta,
    jacobian_factor_class,
    parse_singularity,
    zeta_closed_form,
)

IRREDUCIBLE = [A2d(d) for d in range(1, 11)] + [E6, E8]


def test_singularity_invariants():
    assert (A1.branches, A1.delta, A1.conductor, A1.milnor) == (2, 1, 2, 1)
    assert A1.semigroup is None
    assert (E6.delta, E6.milnor) == (3, 6)
    assert E6.semigroup == make_semigroup([3, 4])
    assert E8.semigroup == make_semigroup([3, 5])
    assert A2d(4).semigroup == make_semigroup([2, 9])
    assert str(A2d(3)) == "A2d(3)"
    with pytest.raises(UnknownSingularity):
        SingularityType("D4")
    with pytest.raises(InvalidInput):
        A2d(0)


@pytest.mark.parametrize(
    "text, expected",
    [("A1", A1), ("A2d(3)", A2d(3)), ("A6", A2d(3)), ("A2", A2d(1)), (" E6 ", E6), ("E8", E8)],
)
def test_parse_singularity(text, expected):
    assert parse_singularity(text) == expected


@pytest.mark.parametrize("text", ["A3", "A0", "D4", "E7", "A2d()", ""])
def test_parse_unknown(text):
    with pytest.raises(UnknownSingularity):
        parse_singularity(text)


def test_closed_forms():
    assert str(zeta_closed_form(A1)) == "(1−t+𝕃t²)/(1−t)²"
    assert zeta_closed_form(A1).branch_exponent == 2
    z = zeta_closed_form(A2d(3))
    assert z.numerator == BiPoly.from_terms({(0, 0): 1, (2, 1): 1, (4, 2): 1, (6, 3): 1})
    assert z.branch_exponent == 1
    assert str(zeta_closed_form(E6).numerator) == "1+𝕃t²+𝕃²t³+𝕃²t⁴+𝕃³t⁶"
    assert str(zeta_closed_form(E8).numerator) == "1+𝕃t²+𝕃²t³+𝕃²t⁴+𝕃³t⁵+𝕃³t⁶+𝕃⁴t⁸"


@pytest.mark.parametrize("s", IRREDUCIBLE)
def test_numerator_degree_is_milnor(s):
    f = zeta_closed_form(s).numerator
    assert f[0] == LPoly([1])
    assert f.degree == s.conductor == 2 * s.delta == s.milnor


def test_class_series():
    assert class_series(zeta_closed_form(E6), 5)[4] == LPoly([1, 1, 2])
    assert class_series(zeta_closed_form(E8), 6)[5] == LPoly([1, 1, 2, 1])
    assert class_series(zeta_closed_form(A1), 5)[4] == LPoly([1, 3])
    for s in [A1, E6, E8, A2d(2)]:
        assert class_series(zeta_closed_form(s), 1) == [LPoly([1])]
    with pytest.raises(InvalidInput):
        class_series(zeta_closed_form(E6), 0)


@pytest.mark.parametrize("s", IRREDUCIBLE + [A1])
def test_class_coefficients_are_cell_counts(s):
    for c in class_series(zeta_closed_form(s), 31):
        assert all(isinstance(k, int) and k >= 0 for k in c)


@pytest.mark.parametrize("s", IRREDUCIBLE)
def test_class_stabilizes(s):
    classes = class_series(zeta_closed_form(s), s.conductor + 8)
    assert all(c == classes[s.conductor] for c in classes[s.conductor:])
    assert jacobian_factor_class(s) == classes[s.conductor]


def test_jacobian_factor():
    assert jacobian_factor_class(E6) == LPoly([1, 1, 2, 1])
    with pytest.raises(InvalidInput):
        jacobian_factor_class(A1)


def test_euler_series():
    assert euler_series(zeta_closed_form(E6), 9).coefficients(0, 9) == [1, 1, 2, 3, 4, 4, 5, 5, 5]
    assert euler_series(zeta_closed_form(A2d(3)), 10).coefficients(0, 10) == [
        1, 1, 2, 2, 3, 3, 4, 4, 4, 4
    ]
    assert euler_series(zeta_closed_form(A1), 6).coefficients(0, 6) == [1, 1, 2, 3, 4, 5]


@pytest.mark.parametrize("d", range(1, 8))
def test_cusp_euler_pairs(d):
    s = euler_series(zeta_closed_form(A2d(d)), 4 * d)
    for k in range(2 * d - 1):
        assert s[2 * k] == s[2 * k + 1]


def test_euler_zeta():
    assert euler_zeta(A1) == RationalFn(IntPoly([1, -1, 1]), IntPoly([1, -1]) ** 2)
    _, rational = igen(make_semigroup([3, 4]), 7)
    assert euler_zeta(E6) == rational
    assert str(euler_zeta(E6)) == "(1+q²+q³+q⁴+q⁶)/(1−q)"


@pytest.mark.parametrize("s", [A2d(d) for d in range(1, 7)] + [E6, E8])
def test_euler_series_matches_semimodules(s):
    assert check_theorem_main4(s, 30)


def test_main4_needs_a_branch():
    with pytest.raises(InvalidInput):
        check_theorem_main4(A1, 10)


def test_zeta_json():
    data = zeta_closed_form(A1).to_json()
    assert data["type"] == "A1"
    assert data["branches"] == 2
    assert data["numerator"] == {"var": "t", "coeffs": [["1"], ["-1"], ["0", "1"]]}
