import io
import json

import pytest

from troplen.cli import main
from troplen.instances import TRIPOD_PAIR_TEXT
from troplen.minimize import SignedFan
from troplen.parser import factorization_from_json, rational_from_json, signomial_from_json
from troplen.plancomplex import PlanarComplex, SignedComplex

G = "1*x*y^-1 + 1*y^-2 + 1*x^-1*y^-1 + 1 + y"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_mlen(capsys):
    assert run(capsys, "mlen", G)[:2] == (0, {"mlen": 5})


def test_flen_and_rational_lengths(capsys):
    code, out, _ = run(capsys, "flen", "(x + y + 0)*(x*y + x + y)")
    assert out == {"flen": 5}
    code, out, _ = run(capsys, "mlen", "(x + 0)*(y + 0) / (x + y + 0)")
    assert out == {"mlen": [4, 3]}


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "(x + 0)*(y + 0) / (x + y + 0)", "--at", "2,1")
    assert out == {"value": "1"}


def test_reduce_round_trip(capsys):
    code, out, _ = run(capsys, "reduce", "0 + -1*x + x^2")
    assert out["removed"] == 1
    assert len(signomial_from_json(out["signomial"])) == 2


def test_regions_with_oracle(capsys):
    code, out, _ = run(capsys, "regions", "--oracle", *TRIPOD_PAIR_TEXT)
    assert code == 0
    assert (out["formula"], out["oracle"]) == (8, 8)


def test_balancefan_flen(capsys, tmp_path):
    fan = {"base": ["0", "0"], "rays": [["3", "1"], ["1", "2"], ["-1", "3"], ["2", "-1"]]}
    code, out, _ = run(capsys, "balancefan", "--json", "--length", "flen", json.dumps(fan))
    assert code == 0 and out["count"] == 15
    code, out, _ = run(capsys, "balancefan", "--json", json.dumps(fan))
    assert len(out["fans"][0]["rays"]) == 5


def test_curve_json_round_trip_and_svg(capsys, tmp_path):
    svg = tmp_path / "c.svg"
    code, out, _ = run(capsys, "curve", "x + y + 0", "--svg", str(svg))
    assert code == 0 and out["regions"] == 3 and out["euler_characteristic"] == -2
    X = PlanarComplex.from_json(out["complex"])
    assert X.to_json() == out["complex"]
    assert svg.read_text().startswith("<svg")
    code, out2, _ = run(capsys, "overlay", "--json", json.dumps(out["complex"]), json.dumps(out["complex"]))
    assert {tuple(e["w"]) for e in out2["complex"]["edges"]} == {("2", "2"), ("-2", "0"), ("0", "-2")}


def test_cornerlocus(capsys):
    code, out, _ = run(capsys, "cornerlocus", "(x + y + 0) / (x + y)")
    S = SignedComplex.from_json(out)
    assert {e.w for e in S.positive.edges} == {(-1, 0), (0, -1)}
    assert {e.w for e in S.negative.edges} == {(-1, -1)}


def test_minrepfan(capsys):
    doc = {"base": ["0", "0"], "positive": [["0", "-1"], ["-1", "0"]], "negative": [["-1", "-1"]]}
    code, out, _ = run(capsys, "minrepfan", "--json", json.dumps(doc))
    assert out["mlen"] == [3, 2]
    rational_from_json(out["rational"])
    code, out, _ = run(capsys, "minrepfan", "(x + y + 0) / (x + y)")
    assert out["mlen"] == [3, 2]
    assert SignedFan.from_json(doc).is_sign_balanced()


def test_min1d(capsys):
    code, out, _ = run(capsys, "min1d", "(x^2 + 0) / x")
    assert out["mlen"] == [2, 1]
    code, out2, _ = run(capsys, "min1d", "--json", json.dumps(out["function"]))
    assert out2 == out


def test_minkowski_and_bounds(capsys):
    code, out, _ = run(capsys, "minkowski", "[[0,0],[3,1],[1,2]]", "[[0,0],[-1,2],[-2,-1]]")
    assert out["vertices"] == 6 and out["holds"]
    code, out, _ = run(capsys, "bounds", *TRIPOD_PAIR_TEXT)
    assert out["lower_bound"]["holds"] and out["count"]["mlen_formula"] == 8


def test_newton_subdivision_canonical(capsys):
    code, out, _ = run(capsys, "newton", "x + y + 0")
    assert len(out["vertices"]) == 3
    code, out, _ = run(capsys, "newton", "--lifted", "x + y + 0")
    assert out["dim"] == 3
    code, out, _ = run(capsys, "subdivision", G)
    assert len(out["vertices"]) == 5
    code, c, _ = run(capsys, "curve", "x + y + 0")
    code, out, _ = run(capsys, "canonical", "--json", json.dumps(c["complex"]))
    assert out["flen"] == 4


def test_witness(capsys):
    code, out, _ = run(capsys, "witness")
    assert code == 0 and out["holds"]
    assert out["mlen"][0] < out["mlen"][1] and out["flen"][0] > out["flen"][1]
    factorization_from_json(out["Y2_factorization"])


def test_file_and_stdin_inputs(capsys, tmp_path, monkeypatch):
    f = tmp_path / "curves.txt"
    f.write_text("# two lines\n" + "\n".join(TRIPOD_PAIR_TEXT) + "\n")
    code, out, _ = run(capsys, "regions", str(f))
    assert out["formula"] == 8
    monkeypatch.setattr("sys.stdin", io.StringIO(G + "\n"))
    code, out, _ = run(capsys, "mlen", "-")
    assert out == {"mlen": 5}


@pytest.mark.parametrize(
    "argv,code",
    [
        (["mlen", "x + "], "parse_error"),
        (["balancefan", "--json", "{not json"], "json_error"),
        (["balancefan", "--json", '{"base": [0, 0], "rays": [[1, 0], [-1, 0]]}'], "not_completely_unbalanced"),
        (["minrepfan", "--json", '{"base": [0, 0], "positive": [[1, 0], [-1, 0], [0, 1]], "negative": [[1, 1]]}'], "reducible"),
        (["eval", "x + y", "--at", "1,2,3"], "dimension_error"),
    ],
)
def test_input_errors(capsys, argv, code):
    status = main(argv)
    out, err = capsys.readouterr()
    assert status == 2 and out == ""
    assert json.loads(err)["error"]["code"] == code


def test_parse_error_location(capsys):
    main(["mlen", "x + y)"])
    err = json.loads(capsys.readouterr().err)["error"]
    assert (err["line"], err["column"]) == (1, 6)
