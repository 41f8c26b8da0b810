"""
Command line entry point: ``zetaforge <command> ...``.

Every command builds a :class:`Report` (labelled rows plus a JSON payload)
which is rendered as text, JSON or LaTeX and written to stdout or, with
``--output``, to any path or URL ``fsspec`` can open.
"""

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass, field

import fsspec
import sympy as sp

from zetaforge._version import __version__
from zetaforge.errors import InvalidInput, translate_error
from zetaforge.homfly import HomflyPoly, compare_bottom_row, homfly_check, torus2_homfly
from zetaforge.kawai import (
    CurveSpec,
    bps_decompose,
    check_kawai,
    curve_euler_series,
    f_poly,
    g_poly,
    g_poly_e6,
    g_poly_e8,
    kawai_original_series,
    macdonald_series,
    random_curve_spec,
    verify_node_identity,
    verify_w2,
    verify_w4_lemma,
    verify_w5,
    verify_w6,
)
from zetaforge.kawai import default_truncation as curve_truncation
from zetaforge.polyalg import BiPoly, IntPoly, LaurentSeries, RationalFn, exact
from zetaforge.semigroup import make_semigroup
from zetaforge.semimodule import (
    catalan_count,
    check_rationality,
    count_table,
    enumerate_semimodules,
    igen,
    stable_count,
)
from zetaforge.severi import severi_degrees
from zetaforge.utils import logger
from zetaforge.zeta import (
    A1,
    A2d,
    E6,
    E8,
    ZetaFn,
    check_theorem_main4,
    class_series,
    parse_singularity,
    zeta_closed_form,
)


_SYMBOLS = {name: sp.Symbol(name) for name in ("q", "t", "L", "T", "x")}
_LATEX_NAMES = {_SYMBOLS["L"]: r"\mathbb{L}"}


@dataclass
class Report:
    """Rows ``(label, value)`` for text/LaTeX and a JSON-ready payload."""

    rows: list
    data: dict
    exit_code: int = 0
    footer: list = field(default_factory=list)


def _sympify(value):
    if isinstance(value, IntPoly):
        v = _SYMBOLS.get(value.var, sp.Symbol(value.var))
        return sp.Add(*(sp.Rational(str(c)) * v**e for e, c in value.terms()))
    if isinstance(value, BiPoly):
        t = _SYMBOLS["t"]
        return sp.Add(*(_sympify(c) * t**i for i, c in value.terms()))
    if isinstance(value, RationalFn):
        return _sympify(value.numerator) / _sympify(value.denominator)
    if isinstance(value, ZetaFn):
        return _sympify(value.numerator) / (1 - _SYMBOLS["t"]) ** value.branch_exponent
    if isinstance(value, LaurentSeries):
        v = _SYMBOLS.get(value.var, sp.Symbol(value.var))
        body = sp.Add(*(sp.Rational(str(c)) * v**e for e, c in value.items()))
        return body + sp.O(v**value.trunc_order)
    if isinstance(value, HomflyPoly):
        return value.to_sympy()
    return None


def to_latex(value):
    expr = _sympify(value)
    if expr is None:
        return str(value)
    return sp.latex(expr, symbol_names=_LATEX_NAMES)


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report.data, sort_keys=True, ensure_ascii=False, indent=2)
    show = to_latex if fmt == "latex" else str
    lines = [
        show(value) if label is None else "%s = %s" % (label, show(value))
        for label, value in report.rows
    ]
    return "\n".join(lines + report.footer)


def emit(text, output=None):
    if output:
        with fsspec.open(output, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.debug("Wrote %s characters to %s", len(text), output)
    else:
        print(text)


def cmd_semigroup(args):
    S = make_semigroup(args.generators)
    data = S.to_json()
    data.update(frobenius=S.frobenius, symmetric=S.is_symmetric())
    return Report(
        [
            ("Γ", S),
            ("gaps", "{%s}" % ",".join(map(str, S.gaps))),
            ("δ", S.delta),
            ("c", S.conductor),
            ("Frobenius", S.frobenius),
            ("symmetric", "yes" if S.is_symmetric() else "no"),
        ],
        data,
    )


def cmd_semimodules(args):
    S = make_semigroup(args.generators)
    modules = enumerate_semimodules(S, args.codim)
    rows = [(None, "%s  complement {%s}" % (m, ",".join(map(str, m.complement)))) for m in modules]
    return Report(
        rows,
        {
            "semigroup": str(S),
            "codim": args.codim,
            "count": len(modules),
            "semimodules": [m.to_json() for m in modules],
        },
        footer=["%s semimodules of codimension %s" % (len(modules), args.codim)],
    )


def cmd_table(args):
    S = make_semigroup(args.generators)
    upto = S.conductor if args.upto is None else args.upto
    counts = count_table(S, upto)
    return Report(
        [("l=%s" % l, n) for l, n in enumerate(counts)],
        {"semigroup": str(S), "counts": counts},
    )


def _series_length(value, option):
    if value is not None and value < 1:
        raise InvalidInput("%s must be >= 1, got %s" % (option, value))
    return value


def cmd_igen(args):
    S = make_semigroup(args.generators)
    expand = _series_length(args.expand, "--expand")
    trunc = _series_length(args.trunc, "--trunc")
    N = expand if expand is not None else trunc if trunc is not None else S.conductor + 1
    series, rational = igen(S, max(N, S.conductor + 1))
    rows = [("I(Γ;q)", rational)]
    data = {"semigroup": str(S), "igen": rational.to_json()}
    if expand is not None:
        series = series.truncate(expand)
        rows.append(("series", series))
        data["series"] = series.to_json()
    return Report(rows, data)


def cmd_zeta(args):
    s = parse_singularity(args.type)
    z = zeta_closed_form(s)
    rows = [("Z(t,𝕃)", z), ("δ", s.delta), ("c", s.conductor), ("μ", s.milnor)]
    data = z.to_json()
    data.update(delta=s.delta, conductor=s.conductor, milnor=s.milnor)
    if args.expand is not None:
        classes = class_series(z, args.expand)
        rows.extend(("[C^[%s]]" % l, c) for l, c in enumerate(classes))
        data["classes"] = [c.to_json() for c in classes]
    if args.at_L is not None:
        at = z.at_L(args.at_L)
        rows.append(("Z(q,%s)" % args.at_L, at))
        data["at_L"] = {"L": str(args.at_L), "value": at.to_json()}
    return Report(rows, data)


def _poly_index(text):
    if text.upper() in ("E6", "E8"):
        return text.upper()
    return int(text)


def cmd_gpoly(args):
    i = args.index
    G = g_poly_e6() if i == "E6" else g_poly_e8() if i == "E8" else g_poly(i)
    return Report([(None, G)], {"index": str(i), "poly": G.to_json()})


def cmd_fpoly(args):
    F = f_poly(args.index)
    return Report([(None, F)], {"index": str(args.index), "poly": F.to_json()})


def cmd_verify_w2(args):
    indices = [args.index] if args.index is not None else range(1, args.upto + 1)
    results = {i: verify_w2(i) for i in indices}
    return Report(
        [("w2(%s)" % i, "ok" if ok else "FAIL") for i, ok in results.items()],
        {str(i): ok for i, ok in results.items()},
        exit_code=0 if all(results.values()) else 1,
    )


def _curve(args):
    c = CurveSpec.parse(args.genus, args.sing)
    return c, curve_truncation(c) if args.trunc is None else args.trunc


def cmd_curve(args):
    c, N = _curve(args)
    chi = curve_euler_series(c, N)
    bps = bps_decompose(chi.shift(1 - c.genus), c.genus, c.geometric_genus)
    match = check_kawai(c, N)
    return Report(
        [
            ("curve", c),
            ("g̃", c.geometric_genus),
            ("Σχ(C^[l])q^l", chi),
            ("BPS", bps),
            ("kawai_match", match),
        ],
        {
            "curve": c.to_json(),
            "chi_series": chi.to_json(),
            "bps": bps.to_json(),
            "kawai_match": match,
        },
        exit_code=0 if match else 1,
    )


def cmd_bps(args):
    c, N = _curve(args)
    bps = bps_decompose(curve_euler_series(c, N).shift(1 - c.genus), c.genus, c.geometric_genus)
    return Report(
        [("n_%s" % h, n) for h, n in bps.as_dict().items()],
        {"genus": c.genus, "geometric_genus": c.geometric_genus, "bps": bps.to_json()},
    )


def cmd_severi(args):
    degrees = severi_degrees(make_semigroup(args.generators))
    return Report(
        [("deg V_%s" % h, d) for h, d in enumerate(degrees.degrees)], degrees.to_json()
    )


def cmd_homfly_check(args):
    p, n = args.torus
    result = homfly_check(p, n)
    computed = result["computed"]
    return Report(
        [
            ("μ", result["mu"]),
            ("predicted", result["predicted"]),
            ("computed", "not computed" if computed is None else computed),
            ("match", "n/a" if result["match"] is None else result["match"]),
        ],
        {
            "mu": result["mu"],
            "predicted": str(result["predicted"]),
            "computed": None if computed is None else str(computed),
            "match": result["match"],
        },
        exit_code=0 if result["match"] is not False else 1,
    )


TABLE_COUNTS = {(3, 4): [1, 1, 2, 3, 4, 4, 5], (3, 5): [1, 1, 2, 3, 4, 5, 6, 6, 7]}

CATALAN_SEMIGROUPS = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (4, 7), (5, 6)]


def _check_table(gens):
    expected = TABLE_COUNTS[gens]
    return count_table(make_semigroup(list(gens)), len(expected) - 1) == expected


def _check_closed_forms():
    checks = [
        class_series(zeta_closed_form(E6), 5)[4] == IntPoly([1, 1, 2], var="L"),
        class_series(zeta_closed_form(E8), 6)[5] == IntPoly([1, 1, 2, 1], var="L"),
        class_series(zeta_closed_form(A1), 5)[4] == IntPoly([1, 3], var="L"),
    ]
    return all(checks)


def _check_main4():
    types = [A2d(d) for d in range(1, 7)] + [E6, E8]
    return all(check_theorem_main4(s, 30) for s in types)


def _check_macdonald():
    for g in range(7):
        bps = bps_decompose(macdonald_series(g, 2 * g + 2), g, g)
        if bps.as_dict() != {g: 1}:
            return False
    return True


def _check_kawai_original():
    for g in range(9):
        for m in range(4):
            for n in range(4):
                if m + n > g:
                    continue
                c = CurveSpec(g, {A1: m, A2d(1): n})
                lhs = curve_euler_series(c, 40).shift(1 - g)
                if lhs != kawai_original_series(g, m, n, 40):
                    return False
    return True


def _check_kawai_random(count=50, N=40, seed=0):
    rng = random.Random(seed)
    for _ in range(count):
        c = random_curve_spec(rng)
        if not check_kawai(c, N):
            return False
        bps = bps_decompose(curve_euler_series(c, N).shift(1 - c.genus), c.genus, c.geometric_genus)
        if bps[c.geometric_genus] == 0:
            return False
    return True


def _check_severi():
    cusp = severi_degrees(make_semigroup([2, 3])).degrees == (2, 1)
    severi_degrees(make_semigroup([3, 4]))
    severi_degrees(make_semigroup([3, 5]))
    return cusp


def _check_trefoil():
    a, q = sp.symbols("a q")
    return torus2_homfly(3) == HomflyPoly.from_expr(2 * a**2 - a**4 + a**2 * (q - 1 / q) ** 2)


SELFTEST = [
    ("semimodule counts of <3,4>", lambda: _check_table((3, 4))),
    ("semimodule counts of <3,5>", lambda: _check_table((3, 5))),
    ("closed-form zeta classes", _check_closed_forms),
    ("Euler series = I(G;q) for A2d(d<=6), E6, E8", _check_main4),
    (
        "rationality of (1-q) I(G;q)",
        lambda: all(check_rationality(make_semigroup(list(g))) for g in CATALAN_SEMIGROUPS),
    ),
    (
        "stable counts are Catalan numbers",
        lambda: all(
            stable_count(make_semigroup(list(g))) == catalan_count(*g) for g in CATALAN_SEMIGROUPS
        ),
    ),
    ("G_i identity for i=1..12", lambda: all(verify_w2(i) for i in range(1, 13))),
    ("F_i(q+1/q) = q^i+q^-i for i=1..12", lambda: all(verify_w4_lemma(i) for i in range(1, 13))),
    ("node identity", verify_node_identity),
    ("E6 identity", verify_w5),
    ("E8 identity", verify_w6),
    ("smooth curves: n_h = 1 at h = g", _check_macdonald),
    ("nodes and cusps: original product formula", _check_kawai_original),
    ("generalized product formula, random curves", _check_kawai_random),
    ("Severi degrees", _check_severi),
    ("trefoil HOMFLY", _check_trefoil),
    (
        "HOMFLY bottom rows of T(2,2d+1), d=1..8",
        lambda: all(compare_bottom_row(make_semigroup([2, 2 * d + 1])) for d in range(1, 9)),
    ),
]


def run_selftest():
    """Run every check; returns ``(passed, results)`` with ``results[name] = bool``."""
    results = {}
    for name, check in SELFTEST:
        try:
            ok = bool(check())
        except Exception as e:  # a crashing check is a failing check
            logger.error("selftest %r raised %r", name, e)
            ok = False
        results[name] = ok
    return all(results.values()), results


def cmd_selftest(args):
    passed, results = run_selftest()
    rows = [] if args.quiet else [
        ("PASS" if ok else "FAIL", name) for name, ok in results.items()
    ]
    summary = "selftest: %s/%s passed" % (sum(results.values()), len(results))
    return Report(
        rows,
        {"passed": passed, "results": results},
        exit_code=0 if passed else 1,
        footer=[summary],
    )


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "json", "latex"], default="text", dest="format"
    )
    common.add_argument("--json", action="store_const", const="json", dest="format")
    common.add_argument("--latex", action="store_const", const="latex", dest="format")
    common.add_argument("--trunc", type=int, default=None, metavar="N",
                        help="series length (default from the conductors and genus)")
    common.add_argument("--quiet", action="store_true", help="only print results")
    common.add_argument("--output", default=None, metavar="PATH_OR_URL",
                        help="write the result here instead of stdout")
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="zetaforge",
        description="Hilbert zeta functions, semimodules and BPS numbers of plane curve singularities.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("semigroup", cmd_semigroup, "gaps, delta and conductor")
    p.add_argument("generators", help='comma separated, e.g. "3,4"')

    p = add("semimodules", cmd_semimodules, "list semimodules of one codimension")
    p.add_argument("generators")
    p.add_argument("--codim", type=int, required=True)

    p = add("table", cmd_table, "count semimodules per codimension")
    p.add_argument("generators")
    p.add_argument("--upto", type=int, default=None)

    p = add("igen", cmd_igen, "generating function I(G;q)")
    p.add_argument("generators")
    p.add_argument("--expand", type=int, default=None, metavar="N")

    p = add("zeta", cmd_zeta, "motivic Hilbert zeta function")
    p.add_argument("--type", required=True, help="A1, A2d(d), A<2d>, E6 or E8")
    p.add_argument("--expand", type=int, default=None, metavar="N")
    p.add_argument("--at-L", type=exact, default=None, dest="at_L", metavar="VALUE")

    p = add("gpoly", cmd_gpoly, "G_i(T), or the E6/E8 polynomial")
    p.add_argument("index", type=_poly_index)

    p = add("fpoly", cmd_fpoly, "F_i(T)")
    p.add_argument("index", type=int)

    p = add("verify-w2", cmd_verify_w2, "check the G_i identity")
    p.add_argument("index", type=int, nargs="?", default=None)
    p.add_argument("--upto", type=int, default=12)

    for name, func, help in (
        ("curve", cmd_curve, "Euler series, BPS numbers and product formula check"),
        ("bps", cmd_bps, "BPS numbers of a curve"),
    ):
        p = add(name, func, help)
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--sing", default="", help='e.g. "A1:2,A2d(3):1,E6:1"')

    p = add("severi", cmd_severi, "Severi degrees of a plane branch")
    p.add_argument("generators")

    p = add("homfly-check", cmd_homfly_check, "HOMFLY bottom row of T(p,n)")
    p.add_argument("--torus", type=int, nargs=2, required=True, metavar=("P", "N"))

    add("selftest", cmd_selftest, "run the identity suite")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.quiet:
        logger.setLevel(logging.ERROR)
    try:
        report = args.func(args)
    except Exception as e:
        message = translate_error(e)
        if message is None:
            raise
        print("zetaforge %s: %s" % (args.command, message), file=sys.stderr)
        return 1
    emit(render(report, args.format), args.output)
    return report.exit_code
