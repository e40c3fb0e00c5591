import io
import json

import pytest

from cyclic_quiver.cli import RunConfig, main
from cyclic_quiver.core import parse_multisegment
from cyclic_quiver.errors import ParseError


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_enumerate():
    code, out = run("enumerate", "--n", "2", "--dim", "3,3", "--two-row")
    assert code == 0 and out.strip().endswith("9 orbits")
    code, out = run("enumerate", "--n", "2", "--dim", "1,0", "--json")
    assert [o["ms"] for o in json.loads(out)["orbits"]] == ["0:1"]


def test_enumerate_example_needs_cap():
    assert run("enumerate", "--n", "3", "--dim", "4,5,2")[0] == 3
    code, out = run("enumerate", "--n", "3", "--dim", "4,5,2", "--cap", "11", "--json")
    assert code == 0
    assert "1:4,0:2,0:2,2:2,1:1" in [o["ms"] for o in json.loads(out)["orbits"]]


def test_poset_dot_deterministic():
    code, out = run("poset", "--n", "2", "--dim", "3,3", "--two-row", "--dot")
    assert code == 0
    assert out.count("->") == 12
    assert out.count("[label=\"") == 9 + 12
    assert '"0:6" [label="0:6\\nε=3,dim=15"];' in out
    assert '"0:6" -> "0:4,0:2" [label="codim=2"];' in out
    assert run("poset", "--n", "2", "--dim", "3,3", "--two-row", "--dot")[1] == out


def test_poset_small():
    code, out = run("poset", "--n", "2", "--dim", "", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["edges"] == [] and len(doc["nodes"]) == 1
    code, out = run("poset", "--n", "2", "--dim", "2,0", "--json")
    assert json.loads(out)["edges"] == []


def test_gpoly():
    assert run("gpoly", "--n", "2", "--lambda", "0:6", "--mu", "0:3,1:3") == (0, "1 + t\n")
    assert run("gpoly", "--n", "2", "--lambda", "0:6", "--mu", "0:6", "--method", "both") == (0, "1\n")
    assert run("gpoly", "--n", "2", "--lambda", "0:6", "--mu", "1:4,1:2", "--method", "both") == (
        0,
        "0 (mu not ≤ lambda)\n",
    )
    assert run("gpoly", "--n", "2", "--lambda", "0:4,0:1", "--mu", "0:2,0:2,0:1", "--method", "closed")[0] == 3
    assert run("gpoly", "--n", "2", "--lambda", "0:6", "--mu", "0:4")[0] == 3


def test_ic_json():
    code, out = run("ic", "--n", "2", "--dim", "3,2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"n", "dim", "orbits", "pairs"}
    assert set(doc["orbits"][0]) == {"ms", "epsilon", "dim", "aperiodic"}
    pair = next(p for p in doc["pairs"] if p["lambda"] == "0:4,0:1" and p["mu"] == "0:2,0:2,0:1")
    assert pair["a"] == {"-1": 1, "1": 1}
    for o in doc["orbits"]:
        assert str(parse_multisegment(o["ms"], 2)) == o["ms"]


def test_ic_two_row_and_single():
    for method in ("closed", "count", "both"):
        code, out = run("ic", "--n", "2", "--dim", "3,3", "--two-row", "--json", "--method", method)
        assert code == 0
        assert {tuple(p["ktilde"]) for p in json.loads(out)["pairs"]} == {(1,)}
    code, out = run("ic", "--n", "2", "--dim", "1,0", "--json")
    assert json.loads(out)["pairs"] == [{"lambda": "0:1", "mu": "0:1", "ktilde": [1], "a": {"0": 1}}]


def test_verify_suites():
    assert run("verify", "--suite", "tworow", "--n-max", "2", "--d-max", "6")[0] == 0
    assert run("verify", "--suite", "green", "--s-max", "4")[0] == 0
    code, out = run("verify", "--suite", "epsilon", "--n-max", "6", "--len-max", "30", "--json")
    assert code == 0 and json.loads(out)["suites"]["epsilon"]["ok"]


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--n", "2", "--dim", "1"],
        ["enumerate", "--n", "2", "--dim", "x,1"],
        ["gpoly", "--n", "2", "--lambda", "0:q", "--mu", "0:1"],
        ["ic", "--n", "2", "--dim", "1,1", "--primes", "2,4"],
    ],
)
def test_bad_input_exit_code(argv):
    assert run(*argv)[0] == 3


def test_unknown_flag_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--bogus"])
    assert info.value.code == 3


def test_runconfig_validation():
    with pytest.raises(ParseError):
        RunConfig(cap=0)
    with pytest.raises(ParseError):
        RunConfig(primes=(5, 3))
    assert RunConfig(primes=(2, 3, 5)).primes == (2, 3, 5)
