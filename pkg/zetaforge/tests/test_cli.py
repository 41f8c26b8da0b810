import json

import pytest

from zetaforge import __version__, cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_igen(capsys):
    code, out, _ = run(capsys, "igen", "3,4")
    assert code == 0
    assert out.strip() == "I(Γ;q) = (1+q²+q³+q⁴+q⁶)/(1−q)"


def test_igen_expand_json(capsys):
    code, out, _ = run(capsys, "igen", "3,5", "--expand", "10", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["series"]["coeffs"] == ["1", "1", "2", "3", "4", "5", "6", "6", "7", "7"]
    assert data["semigroup"] == "⟨3,5⟩"


def test_gpoly(capsys):
    assert run(capsys, "gpoly", "2")[1].strip() == "4T−5"
    assert run(capsys, "gpoly", "E6")[1].strip() == "6T²−14T+9"
    assert run(capsys, "fpoly", "2")[1].strip() == "T²−2"


def test_not_numerical(capsys):
    code, out, err = run(capsys, "semigroup", "4,6")
    assert code == 1
    assert out == ""
    assert "gcd ≠ 1" in err


def test_semigroup(capsys):
    code, out, _ = run(capsys, "semigroup", "3,4")
    assert code == 0
    assert "gaps = {1,2,5}" in out
    assert "c = 6" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["igen"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["nonsense"])
    assert e.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["--version"])
    assert e.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_unknown_singularity(capsys):
    code, _, err = run(capsys, "zeta", "--type", "D4")
    assert code == 1
    assert "singularity tag" in err


def test_zeta(capsys):
    code, out, _ = run(capsys, "zeta", "--type", "E6", "--expand", "5", "--at-L", "1")
    assert code == 0
    assert "Z(t,𝕃) = (1+𝕃t²+𝕃²t³+𝕃²t⁴+𝕃³t⁶)/(1−t)" in out
    assert "[C^[4]] = 1+𝕃+2𝕃²" in out
    assert "Z(q,1) = (1+q²+q³+q⁴+q⁶)/(1−q)" in out


def test_zeta_latex(capsys):
    code, out, _ = run(capsys, "zeta", "--type", "A1", "--latex")
    assert code == 0
    assert r"\mathbb{L}" in out


def test_table(capsys):
    code, out, _ = run(capsys, "table", "3,4", "--upto", "6", "--json")
    assert json.loads(out)["counts"] == [1, 1, 2, 3, 4, 4, 5]


def test_semimodules(capsys):
    code, out, _ = run(capsys, "semimodules", "3,4", "--codim", "2")
    assert code == 0
    assert "⟨3,8⟩_Γ" in out
    assert "2 semimodules of codimension 2" in out


def test_curve(capsys):
    code, out, _ = run(capsys, "curve", "--genus", "1", "--sing", "A2d(1):1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["bps"] == {"1": "1", "0": "2"}
    assert data["kawai_match"] is True
    assert data["curve"]["geometric_genus"] == 0


def test_curve_invalid(capsys):
    code, _, err = run(capsys, "curve", "--genus", "1", "--sing", "E6:1")
    assert code == 1
    assert "geometric genus" in err


def test_bps(capsys):
    code, out, _ = run(capsys, "bps", "--genus", "2", "--sing", "A1:2")
    assert code == 0
    assert out.split() == ["n_2", "=", "1", "n_1", "=", "2", "n_0", "=", "1"]


@pytest.mark.parametrize(
    "argv",
    [
        ["curve", "--genus", "0", "--trunc", "0"],
        ["bps", "--genus", "1", "--sing", "A1", "--trunc", "0"],
        ["verify-w2", "0"],
        ["zeta", "--type", "E6", "--expand", "0"],
        ["igen", "3,4", "--expand", "0"],
        ["igen", "3,4", "--trunc", "0"],
    ],
)
def test_explicit_zero_is_rejected(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("zetaforge %s: " % argv[0])


def test_trunc_precedence(capsys, monkeypatch):
    monkeypatch.setenv("ZETAFORGE_TRUNC", "5")
    data = json.loads(run(capsys, "curve", "--genus", "0", "--json")[1])
    assert data["chi_series"]["coeffs"] == ["1", "2", "3", "4", "5"]
    data = json.loads(run(capsys, "curve", "--genus", "0", "--trunc", "3", "--json")[1])
    assert data["chi_series"]["coeffs"] == ["1", "2", "3"]
    monkeypatch.setenv("ZETAFORGE_TRUNC", "abc")
    code, _, err = run(capsys, "curve", "--genus", "0")
    assert code == 1
    assert "ZETAFORGE_TRUNC" in err


def test_severi(capsys):
    code, out, _ = run(capsys, "severi", "2,3", "--json")
    assert code == 0
    assert json.loads(out) == {"delta": 1, "degrees": ["2", "1"]}


def test_homfly_check(capsys):
    code, out, _ = run(capsys, "homfly-check", "--torus", "2", "7", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == 6
    assert data["match"] is True
    assert data["computed"] == data["predicted"]
    code, out, _ = run(capsys, "homfly-check", "--torus", "3", "4", "--json")
    data = json.loads(out)
    assert data["computed"] is None
    assert data["predicted"] == "(1+q⁴+q⁶+q⁸+q¹²)/(1−q²)"


def test_verify_w2(capsys):
    code, out, _ = run(capsys, "verify-w2")
    assert code == 0
    assert out.count("ok") == 12


def test_output(capsys, tmp_path):
    path = tmp_path / "g2.txt"
    code, out, _ = run(capsys, "gpoly", "2", "--output", str(path))
    assert code == 0
    assert out == ""
    assert path.read_text(encoding="utf-8") == "4T−5\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["zeta", "--type", "E8"],
        ["zeta", "--type", "A1", "--expand", "4", "--at-L", "2"],
        ["semigroup", "4,6,9"],
        ["semimodules", "3,4,5", "--codim", "3"],
        ["table", "5,7,9", "--upto", "4"],
        ["igen", "3,4,5", "--expand", "8"],
        ["gpoly", "E8"],
        ["fpoly", "4"],
        ["verify-w2", "--upto", "4"],
        ["curve", "--genus", "4", "--sing", "A1:1,E6:1"],
        ["bps", "--genus", "2", "--sing", "A1:2"],
        ["severi", "3,5"],
        ["homfly-check", "--torus", "2", "5"],
    ],
)
def test_json_is_stable(capsys, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    assert json.dumps(json.loads(out), sort_keys=True, ensure_ascii=False, indent=2) == out.strip()


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == len(cli.SELFTEST)
    assert "FAIL" not in out
    code, out, _ = run(capsys, "selftest", "--quiet")
    assert out.strip() == "selftest: %s/%s passed" % (len(cli.SELFTEST), len(cli.SELFTEST))
