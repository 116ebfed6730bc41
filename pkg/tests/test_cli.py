import json

import pytest

from q6threefolds.cli import EXIT_INPUT, EXIT_OK, EXIT_OUTCOME, main
from q6threefolds.quadspace import H0, V0, IsoType, iso_type
from q6threefolds.serialize import InputError, TEST_SUBSPACE, load_subspace, load_variety, table, variety_to_json
from q6threefolds.varieties import Q4Divisor, builtin


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# serialization


def test_load_variety_forms(tmp_path):
    assert load_variety("builtin:segre").name == "segre"
    D = load_variety("divisor:x1*x6 - x2*x4")
    assert isinstance(D, Q4Divisor) and D.p == 2
    path = tmp_path / "d.json"
    path.write_text(json.dumps(variety_to_json(D)))
    assert load_variety(str(path)) == D
    X = load_variety(json.dumps(variety_to_json(builtin("veronese_cone"))))
    assert X.eval([1, 0, 0, 0]) == builtin("veronese_cone").eval([1, 0, 0, 0])


@pytest.mark.parametrize("spec", ["builtin:nope", "divisor:x1+", "{not json", "missing.json", '{"kind": "other"}'])
def test_load_variety_errors(spec):
    with pytest.raises(InputError):
        load_variety(spec)


def test_load_subspace():
    assert load_subspace("V0") == V0 and load_subspace("H0") == H0
    assert load_subspace("test") == TEST_SUBSPACE
    assert iso_type(load_subspace("random:horizontal:4")) == IsoType.HORIZONTAL
    assert load_subspace("random:p4:1").dim == 5
    eqs = [[str(c) for c in row] for row in TEST_SUBSPACE.equations()]
    assert load_subspace(json.dumps({"equations": eqs})) == TEST_SUBSPACE
    for bad in ("random:x:1", "random:vertical", '{"basis": [[1, 0]]}'):
        with pytest.raises(InputError):
            load_subspace(bad)


def test_table_flattening():
    lines = table({"a": {"b": 1, "c": [{"d": "x"}]}})
    assert lines == ["a.b       1", "a.c[0].d  x"]


# command line


def test_meet_json(capsys):
    code, out, _ = run(capsys, "meet", "builtin:veronese_cone", "--subspace", "test")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["schema_version"] == 1 and doc["command"] == "meet"
    assert doc["result"]["total"] == 1


def test_nonfinite_exit_code(capsys):
    code, out, _ = run(capsys, "meet", "builtin:horizontal3", "--subspace", "V0")
    assert code == EXIT_OUTCOME
    assert json.loads(out)["result"]["status"] == "nonfinite"


def test_input_errors(capsys):
    code, _, err = run(capsys, "smooth", "divisor:x1*")
    assert code == EXIT_INPUT
    assert json.loads(err)["error"]["code"] == "input_error"
    code, _, err = run(capsys, "smooth", "builtin:segre")
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, "planes", "builtin:segre_divisor", "--at", "0,0")
    assert code == EXIT_INPUT


def test_randomized_commands_require_seed(capsys):
    for cmd in ("bidegree", "degree", "span", "classify"):
        code, _, _ = run(capsys, cmd, "builtin:segre")
        assert code == EXIT_INPUT


def test_output_is_deterministic(capsys):
    argv = ("bidegree", "builtin:segre", "--seed", "3", "--trials", "3")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    doc = json.loads(first[1])["result"]
    assert (doc["a"], doc["b"]) == (1, 2)


def test_smooth_and_table_format(capsys):
    code, out, _ = run(capsys, "--format", "table", "smooth", "divisor:x1*x4^2 + x2*x6^2")
    assert code == EXIT_OK
    assert ["result.kind", "PsiDoublePoint"] in [line.split() for line in out.splitlines()]


@pytest.mark.parametrize("argv", [
    ("builtin",),
    ("builtin", "cubic_secant"),
    ("irreducible", "divisor:x1*x4"),
    ("normalize-p2", "builtin:segre_divisor"),
    ("planes", "builtin:segre_divisor", "--at", "1,2"),
    ("psi", "divisor:x1*x4^2 + x2*x6^2", "--degree"),
    ("psi", "divisor:x1*x4^2 + x2*x6^2", "--at", "1,-1"),
    ("brute", "builtin:veronese_cone", "--subspace", "test", "--q", "7", "--ext", "2"),
    ("span", "builtin:quadric5", "--seed", "0"),
    ("classify", "builtin:quadric5", "--seed", "0", "--trials", "3"),
    ("decompose", "builtin:segre_divisor", "--seed", "0", "--samples", "5"),
])
def test_commands_succeed(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert json.loads(out)["command"] == argv[0]


def test_verify_plumbing(capsys, monkeypatch):
    from q6threefolds import acceptance

    monkeypatch.setattr(acceptance, "run_suite", lambda only=None: [acceptance.criterion_1()])
    code, out, _ = run(capsys, "--format", "table", "verify", "--suite", "acceptance")
    assert code == EXIT_OK
    assert out.startswith("[PASS]  1.")
    code, out, _ = run(capsys, "verify", "--suite", "acceptance")
    assert json.loads(out)["result"]["passed"] == 1
