import json
from fractions import Fraction

import pytest

import costar.cli as cli
from costar.cli import (
    ParseError,
    flat_text,
    main,
    parse_expression,
    radial_text,
    tokenize,
)
from costar.cpn import a_coeff_engine
from costar.flatphase import FlatPoly
from costar.radialphase import RadialFun
from costar.scalar import GaussianRational, I, RadialRational, UPoly


def test_tokenize_kinds_and_positions():
    toks = tokenize("z1 + u^2")
    assert [(k, t, p) for k, t, p in toks] == [
        ("name", "z1", 0), ("op", "+", 3), ("name", "u", 5),
        ("op", "^", 6), ("int", "2", 7), ("end", "", 8),
    ]
    with pytest.raises(ParseError) as err:
        tokenize("z1 $ u")
    assert err.value.pos == 3


def test_parse_radial_examples():
    f = parse_expression("z1*zb2/u + 2", "radial-linear", 2)
    want = RadialFun.monomial((1, 0), (0, 1), radial=RadialRational.u_power(-1))
    assert f == want + 2
    assert parse_expression("u^-2", "radial-quadratic", 2) == \
        RadialFun.from_radial(RadialRational.u_power(-2), 2)
    g = parse_expression("(1/2 + 3*I)*z1^2*zb1^2/u^2", "radial-linear", 2)
    c = GaussianRational(Fraction(1, 2), 3)
    assert g == RadialFun.monomial((2, 0), (2, 0),
                                   radial=RadialRational.u_power(-2)).scale(c)
    h = parse_expression("(u + 1)/(u^2 - 2)", "radial-linear", 1)
    assert h == RadialFun.from_radial(
        RadialRational(UPoly((1, 1)), UPoly((-2, 0, 1))), 1)


def test_parse_flat_examples():
    f = parse_expression("q1^2*p2 - 3/4", "flat", 2)
    want = FlatPoly(2, {(2, 0, 0, 1): 1, (0, 0, 0, 0): Fraction(-3, 4)})
    assert f == want
    assert parse_expression("I*q1", "flat", 2) == FlatPoly.q(1, 2).scale(I)
    assert parse_expression("-q1^2", "flat", 1) == -(FlatPoly.q(1, 1) ** 2)


def test_parse_mode_gating():
    with pytest.raises(ParseError, match="flat mode"):
        parse_expression("z1", "flat", 2)
    with pytest.raises(ParseError, match="radial mode"):
        parse_expression("q1", "radial-linear", 2)
    with pytest.raises(ParseError, match="out of range"):
        parse_expression("z3", "radial-linear", 2)
    with pytest.raises(ParseError, match="out of range"):
        parse_expression("q0", "flat", 2)


def test_parse_error_positions_and_divisors():
    with pytest.raises(ParseError) as err:
        parse_expression("2q1", "flat", 2)
    assert err.value.pos == 1
    with pytest.raises(ParseError, match="end of input"):
        parse_expression("z1 +", "radial-linear", 2)
    with pytest.raises(ParseError, match="exponent"):
        parse_expression("u^x", "radial-linear", 2)
    with pytest.raises(ParseError, match="radial divisor"):
        parse_expression("1/(z1 + zb1)", "radial-linear", 2)
    with pytest.raises(ParseError, match="division by zero"):
        parse_expression("1/0", "radial-linear", 2)
    with pytest.raises(ParseError, match="scalar divisor"):
        parse_expression("1/q1", "flat", 2)


ROUNDTRIP_RADIAL = [
    RadialFun.zero(2),
    RadialFun.one(2) + RadialFun.u(2).scale(Fraction(-1, 3)),
    RadialFun.monomial((1, 0), (0, 1), radial=RadialRational.u_power(-1)),
    RadialFun.monomial((2, 1), (1, 2),
                       radial=RadialRational(UPoly((1, 1)), UPoly((0, 0, 1)))),
    RadialFun.monomial((1, 0), (1, 0)).scale(GaussianRational(Fraction(1, 2), -2)),
    RadialFun.from_radial(RadialRational(UPoly((2, 0, 3)), UPoly((1, 1))), 1),
    RadialFun.z(1, 2) * RadialFun.zbar(1, 2) - RadialFun.u(2),
]


@pytest.mark.parametrize("f", ROUNDTRIP_RADIAL)
def test_radial_text_round_trip(f):
    assert parse_expression(radial_text(f), "radial-linear", f.dim) == f


ROUNDTRIP_FLAT = [
    FlatPoly.zero(2),
    FlatPoly(2, {(1, 0, 1, 0): GaussianRational(0, 1),
                 (0, 2, 0, 0): Fraction(-5, 2)}),
    FlatPoly(1, {(3, 1): GaussianRational(Fraction(1, 3), Fraction(-1, 2))}),
    FlatPoly.one(2).scale(-1),
]


@pytest.mark.parametrize("f", ROUNDTRIP_FLAT)
def test_flat_text_round_trip(f):
    assert parse_expression(flat_text(f), "flat", f.dim) == f


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_star_output_is_deterministic_and_reparses(capsys):
    argv = ["star", "--mode", "radial-linear", "--dim", "1",
            "--order", "2", "z1", "zb1"]
    code1, out1, _ = _run(capsys, argv)
    code2, out2, _ = _run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1 == "order 0: u\norder 1: 2\norder 2: 0\n"
    for k, line in enumerate(out1.splitlines()):
        label, expr = line.split(": ", 1)
        assert label == "order %d" % k
        parse_expression(expr, "radial-linear", 1)


def test_star_json_schema(capsys):
    argv = ["star", "--mode", "flat", "--dim", "2", "--order", "1",
            "--json", "q1", "p1"]
    code, out1, _ = _run(capsys, argv)
    _, out2, _ = _run(capsys, argv)
    assert code == 0 and out1 == out2
    payload = json.loads(out1)
    assert payload["order"] == 1
    assert len(payload["coeffs"]) == 2
    term = payload["coeffs"][0]["terms"][0]
    assert term == {"alpha": [1, 0], "beta": [1, 0],
                    "num": [{"re": "1", "im": "0"}],
                    "den": [{"re": "1", "im": "0"}]}
    assert payload["coeffs"][1]["terms"][0]["num"] == [{"re": "0", "im": "1/2"}]


def test_reduce_cli_flat_frozen(capsys):
    code, out, _ = _run(capsys, ["reduce", "--mode", "flat", "--dim", "2",
                                 "--order", "2", "q1", "p1"])
    assert code == 0
    assert out == "order 0: q1*p1\norder 1: 1/2*I\norder 2: 0\n"


def test_reduce_cli_radial_round_trips(capsys):
    argv = ["reduce", "--mode", "radial-quadratic", "--mu=-3/2", "--dim", "2",
            "--order", "2", "z1*zb2/u", "z2*zb1/u"]
    code, out1, _ = _run(capsys, argv)
    _, out2, _ = _run(capsys, argv)
    assert code == 0 and out1 == out2
    for line in out1.splitlines():
        parse_expression(line.split(": ", 1)[1], "radial-quadratic", 2)


def test_reduce_cli_rejects_non_member(capsys):
    code, _, err = _run(capsys, ["reduce", "--mode", "radial-linear",
                                 "--dim", "2", "u", "z1*zb1/u"])
    assert code == 2
    assert "left factor" in err


def test_coeffs_tsv_grid(capsys):
    code, out, _ = _run(capsys, ["coeffs", "--kind", "linear",
                                 "--kmax", "4", "--lmax", "4", "--tsv"])
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 4 and all(len(r) == 4 for r in rows)
    assert rows[0] == ["1", "-2", "4", "-8"]
    for k in range(1, 5):
        for l in range(4):
            assert rows[k - 1][l] == str(a_coeff_engine(k, l))


def test_coeffs_quadratic_and_threads(capsys, monkeypatch):
    argv = ["coeffs", "--kind", "quadratic", "--kmax", "2", "--lmax", "3",
            "--tsv"]
    _, serial, _ = _run(capsys, argv)
    assert serial.splitlines()[0].split("\t") == ["1", "-3", "17/2"]
    monkeypatch.setenv("COSTAR_THREADS", "3")
    _, threaded, _ = _run(capsys, argv)
    assert threaded == serial
    monkeypatch.setenv("COSTAR_THREADS", "zero")
    code, _, err = _run(capsys, argv)
    assert code == 2 and "COSTAR_THREADS" in err


def test_coeffs_json(capsys):
    code, out, _ = _run(capsys, ["coeffs", "--kind", "linear", "--kmax", "1",
                                 "--lmax", "3", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload == {"kind": "linear", "kmax": 1, "lmax": 3,
                       "rows": [["1", "-2", "4"]]}


def test_obstruct_cli(capsys):
    code, out, _ = _run(capsys, ["obstruct", "--dim", "2", "--json",
                                 "z1*zb2/u", "z2*zb1/u"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ratio"] == {"re": "-2", "im": "0"}
    code, out, _ = _run(capsys, ["obstruct", "--dim", "2",
                                 "z1*zb2/u", "z2*zb1/u"])
    assert code == 0
    assert out.splitlines()[-1] == "ratio: -2"


def test_verify_cli(capsys, monkeypatch):
    code, out, _ = _run(capsys, ["verify", "--suite", "tables",
                                 "--examples", "1"])
    assert code == 0
    assert out == "VERIFY tables: PASS\n"
    monkeypatch.setattr(cli, "SUITES", (("broken", lambda rng, n: False),))
    code, out, _ = _run(capsys, ["verify"])
    assert code == 1
    assert out == "VERIFY broken: FAIL\n"


def test_usage_and_parse_errors_exit_2(capsys):
    assert _run(capsys, ["star", "--mode", "bogus", "1", "1"])[0] == 2
    assert _run(capsys, [])[0] == 2
    code, _, err = _run(capsys, ["star", "--mode", "flat", "--dim", "2",
                                 "z1", "q1"])
    assert code == 2 and "flat mode" in err
    code, _, err = _run(capsys, ["reduce", "--mode", "radial-linear",
                                 "--dim", "2", "z1", "zb1"])
    assert code == 2 and "even" in err


def test_help_exits_zero(capsys):
    assert _run(capsys, ["--help"])[0] == 0
