import json
import random
from pathlib import Path

import pytest

from conftest import field, rand_poly_mv
from ffzeta.cli import main, parse_modulus, parse_poly
from ffzeta.errors import ParseError, UnknownVariable
from ffzeta.poly import SparsePoly, render_poly

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_INVOCATIONS = {
    "zerodim.json": ["zerodim", "--q", "2", "--poly", "x^2+x+1"],
    "modp.json": ["modp", "--q", "2", "-n", "1", "--poly", "x^2+x+1",
                  "-B", "4"],
    "factor.json": ["factor", "--q", "3", "--poly", "x^2-1"],
    "count.json": ["count", "--q", "3", "-n", "2", "--poly", "x*y+1"],
    "torus.json": ["torus-zeta", "--q", "2", "-n", "1", "-m", "2",
                   "-B", "2"],
    "modpm.json": ["modpm", "--q", "2", "-n", "2", "-m", "2", "--poly",
                   "x*y+1", "-B", "4"],
    "verify.json": ["verify", "--q", "2", "-n", "1", "--poly", "x^3+x+1",
                    "--mode", "modp", "-B", "6"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_INVOCATIONS))
def test_golden_json_payloads(name, capsys):
    argv = GOLDEN_INVOCATIONS[name] + ["--json"]
    assert main(argv) == 0
    got = json.loads(capsys.readouterr().out)
    want = json.loads((GOLDEN / name).read_text())
    assert got == want


# -- parsing ----------------------------------------------------------------


def test_parse_basic_forms():
    ctx = field(3)
    f = parse_poly("x^2 + 2*x + 1", ctx, 1)
    assert f.to_dense() == [1, 2, 1]
    g = parse_poly("x*y + 3*x + 1", ctx, 2)  # 3 = 0 mod 3, term drops
    assert g.terms == {(1, 1): 1, (0, 0): 1}
    h = parse_poly("x1^2 - x2", ctx, 2)
    assert h.terms == {(2, 0): 1, (0, 1): 2}
    assert parse_poly("2 - x", ctx, 1).to_dense() == [2, 2]
    assert parse_poly("x - x", ctx, 1).is_zero()


def test_parse_extension_field_coefficients():
    ctx = field(4)
    f = parse_poly("(t+1)*x + t", ctx, 1)
    assert f.to_dense() == [2, 3]
    g = parse_poly("t^2*x", ctx, 1)  # t^2 = t + 1
    assert g.to_dense() == [0, 3]
    h = parse_poly("t*t*x", ctx, 1)
    assert h == g


def test_parse_rejects_bad_input():
    ctx2 = field(2)
    for bad in ("", "  ", "x +", "^2", "x^", "x^y", "* x", "x ? 1",
                "(x+1", "()"):
        with pytest.raises(ParseError):
            parse_poly(bad, ctx2, 1)
    with pytest.raises(UnknownVariable):
        parse_poly("x + w", ctx2, 1)
    with pytest.raises(UnknownVariable):
        parse_poly("y", ctx2, 1)  # alias beyond nvars
    with pytest.raises(ParseError):
        parse_poly("t*x", ctx2, 1)  # no t in a prime field


def test_parse_aliases_and_numbered_variables():
    ctx = field(2)
    assert parse_poly("x*y*z", ctx, 3).terms == {(1, 1, 1): 1}
    assert parse_poly("x1*x2*x3", ctx, 3).terms == {(1, 1, 1): 1}
    four = parse_poly("x1*x4", ctx, 4)
    assert four.terms == {(1, 0, 0, 1): 1}
    with pytest.raises(UnknownVariable):
        parse_poly("x", ctx, 4)  # aliases only exist for nvars <= 3


def test_parse_modulus_forms():
    assert parse_modulus("t^2+t+1", 2) == [1, 1, 1]
    assert parse_modulus("t^3 + 2*t + 1", 3) == [1, 2, 0, 1]
    assert parse_modulus("t^2 - t - 1", 3) == [2, 2, 1]
    with pytest.raises(ParseError):
        parse_modulus("x^2+1", 2)


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_render_parse_round_trip(q):
    ctx = field(q)
    rng = random.Random(q * 77)
    for _ in range(60):
        nvars = rng.randrange(1, 4)
        f = rand_poly_mv(ctx, rng, nvars, rng.randrange(1, 4))
        assert parse_poly(render_poly(f), ctx, nvars) == f


def test_render_parse_round_trip_univariate_dense():
    ctx = field(9)
    rng = random.Random(9)
    for _ in range(40):
        coeffs = [rng.randrange(9) for _ in range(rng.randrange(1, 7))]
        if not any(coeffs):
            coeffs[-1] = 1
        f = SparsePoly.from_dense(ctx, coeffs)
        assert parse_poly(render_poly(f), ctx, 1) == f


# -- exit codes -------------------------------------------------------------


def test_exit_code_parse_error(capsys):
    assert main(["factor", "--q", "2", "--poly", "x^^2"]) == 2
    assert "parse error" in capsys.readouterr().err
    assert main(["count", "--q", "6", "-n", "1", "--poly", "x"]) == 2
    assert main(["zerodim", "--q", "2", "--poly", "x+w"]) == 2


def test_exit_code_precondition(capsys):
    assert main(["zerodim", "--q", "2", "--poly", "x^3+x",
                 "--method", "psi"]) == 3
    assert "precondition" in capsys.readouterr().err
    assert main(["zerodim", "--q", "3", "--poly", "2*x^2+1"]) == 3  # not monic


def test_exit_code_limits(capsys):
    assert main(["count", "--q", "2", "-n", "3", "--poly", "x*y+1",
                 "-k", "11"]) == 4
    assert "limit" in capsys.readouterr().err
    assert main(["factor", "--q", "128", "--poly", "x^2+x"]) == 4


def test_threads_flag_validated():
    assert main(["count", "--q", "2", "-n", "1", "--poly", "x",
                 "--threads", "0"]) == 2
    assert main(["count", "--q", "2", "-n", "1", "--poly", "x",
                 "--threads", "4"]) == 0


# -- behaviors --------------------------------------------------------------


def test_shift_translates_and_pulls_back(capsys):
    assert main(["factor", "--q", "3", "--poly", "x^2+2*x", "--shift", "1",
                 "--json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["result"]["factors"] == [["x", 1], ["x + 2", 1]]


def test_shift_with_extension_constant(capsys):
    assert main(["factor", "--q", "4", "--poly", "x^2+(t+1)",
                 "--shift", "(t)", "--json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["result"]["factors"] == [["x + (t)", 2]]


def test_explicit_modulus_flag(capsys):
    assert main(["zerodim", "--q", "4", "--modulus", "t^2+t+1",
                 "--poly", "x^2+t*x", "--json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["result"]["s"] == [2, 0]


def test_dump_matrix_flag(capsys):
    assert main(["zerodim", "--q", "2", "--poly", "x^2+x+1",
                 "--dump-matrix", "--json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["result"]["matrix"] == [[1, 1], [0, 1]]
    assert main(["zerodim", "--q", "2", "--poly", "x^2+x+1", "--json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert "matrix" not in got["result"]


def test_human_output_default(capsys):
    assert main(["zerodim", "--q", "2", "--poly", "x^2+x+1"]) == 0
    out = capsys.readouterr().out
    assert "s = [0, 1]" in out
    assert "1/((1-T^2))" in out


@pytest.mark.parametrize("mode,extra", [
    ("modp", ["-n", "2", "-B", "3"]),
    ("modpm", ["-n", "1", "-m", "2", "-B", "4"]),
    ("zerodim", []),
])
def test_verify_agreement_across_corpus(mode, extra, capsys):
    polys = {
        "modp": ["x*y+1", "x^2+y^2+1", "x*y+x+y"],
        "modpm": ["x^2+x+1", "x^3+x+1", "x^2+x"],
        "zerodim": ["x^2+x+1", "x^4+x^2+1", "x^5+x+1"],
    }[mode]
    for poly in polys:
        argv = ["verify", "--q", "2", "--poly", poly, "--mode", mode,
                "--json"] + extra
        assert main(argv) == 0
        got = json.loads(capsys.readouterr().out)
        assert got["result"]["match"] is True
