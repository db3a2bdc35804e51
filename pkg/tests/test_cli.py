"""Command-line envelope contract: JSON shape, exit codes, fixtures."""

import json

import pytest

from quiverinv import cli

K2 = "quiver\nvertices: v1 v2\narrow a1: v1 -> v2\narrow a2: v1 -> v2\n"
K3 = (
    "quiver\nvertices: v1 v2\narrow a1: v1 -> v2\narrow a2: v1 -> v2\n"
    "arrow a3: v1 -> v2\n"
)
K2_REVERSED = "quiver\nvertices: v2 v1\narrow a1: v1 -> v2\narrow a2: v1 -> v2\n"
CANONICAL = "canonical weights=2,2,2,2 lambda=1,2\n"


@pytest.fixture
def k2(tmp_path):
    path = tmp_path / "k2.quiver"
    path.write_text(K2)
    return str(path)


@pytest.fixture
def k3(tmp_path):
    path = tmp_path / "k3.quiver"
    path.write_text(K3)
    return str(path)


@pytest.fixture
def tubular(tmp_path):
    path = tmp_path / "t4.alg"
    path.write_text(CANONICAL)
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_envelope_shape(capsys, k2):
    code, out, err = run(capsys, "euler", "-f", k2, "-d", "1,1", "-e", "1,1")
    assert code == 0
    assert err == ""
    assert out.endswith("\n") and out.count("\n") == 1
    doc = json.loads(out)
    assert set(doc) == {"command", "input", "result"}
    assert doc["command"] == "euler"
    assert doc["result"]["value"] == 0
    assert doc["input"]["d"] == {"v1": 1, "v2": 1}


def test_deterministic_output(capsys, k2):
    _, first, _ = run(capsys, "candecomp", "-f", k2, "-d", "3,1")
    _, second, _ = run(capsys, "candecomp", "-f", k2, "-d", "3,1")
    assert first == second


def test_pretty_flag(capsys, k2):
    _, compact, _ = run(capsys, "classify", "-f", k2)
    _, pretty, _ = run(capsys, "classify", "-f", k2, "--json-pretty")
    assert compact.count("\n") == 1
    assert pretty.count("\n") > 1
    assert json.loads(compact) == json.loads(pretty)


def test_candecomp_pretty_string(capsys, k2):
    code, out, _ = run(capsys, "candecomp", "-f", k2, "-d", "3,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["pretty"] == "(2,1)+(1,0)"
    roots = [s["root"] for s in doc["result"]["summands"]]
    assert {"v1": 2, "v2": 1} in roots and {"v1": 1, "v2": 0} in roots


def test_declared_order_controls_pretty_only(capsys, tmp_path):
    a = tmp_path / "a.quiver"
    b = tmp_path / "b.quiver"
    a.write_text(K2)
    b.write_text(K2_REVERSED)
    _, out_a, _ = run(capsys, "candecomp", "-f", str(a), "-d", "3,1")
    # the second file declares v2 first, so the same vector reads 1,3
    _, out_b, _ = run(capsys, "candecomp", "-f", str(b), "-d", "1,3")
    doc_a = json.loads(out_a)
    doc_b = json.loads(out_b)
    assert doc_a["result"]["summands"] == doc_b["result"]["summands"]
    assert doc_a["result"]["pretty"] == "(2,1)+(1,0)"
    assert doc_b["result"]["pretty"] == "(1,2)+(0,1)"


def test_si_table(capsys, k2):
    code, out, _ = run(
        capsys, "si-table", "-f", k2, "-d", "1,1", "-t", "1,-1", "-n", "6"
    )
    assert code == 0
    assert json.loads(out)["result"]["dims"] == [1, 2, 3, 4, 5, 6, 7]


def test_logconcave_needs_no_file(capsys):
    code, out, _ = run(capsys, "logconcave", "--values", "1,3,2")
    assert code == 0
    assert json.loads(out)["result"]["status"] == "ok"
    code, out, _ = run(capsys, "logconcave", "--values", "1,1,5")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["status"] == "violated"
    assert doc["result"]["index"] == 1


def test_input_error_exit_2(capsys, k2):
    code, out, _ = run(capsys, "euler", "-f", k2, "-d", "1,1,1", "-e", "1,1")
    assert code == 2
    doc = json.loads(out)
    assert set(doc) == {"command", "error"}
    assert doc["error"]["type"] == "InputError"
    assert doc["error"]["message"]


def test_missing_flag_exit_2(capsys, k2):
    code, out, _ = run(capsys, "euler", "-f", k2, "-d", "1,1")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "InputError"


def test_precondition_error_exit_3(capsys, k2):
    code, out, _ = run(capsys, "schur", "-f", k2, "-d", "0,0")
    assert code == 3
    assert json.loads(out)["error"]["type"] == "PreconditionError"


def test_budget_error_exit_4(capsys, k2):
    code, out, _ = run(
        capsys, "si-dim", "-f", k2, "-d", "1,1", "-t", "1,-1", "--budget", "0"
    )
    assert code == 4
    assert json.loads(out)["error"]["type"] == "BudgetError"


def test_invariant_error_exit_5(capsys, tmp_path):
    path = tmp_path / "a2.quiver"
    path.write_text("quiver\nvertices: v1 v2\narrow a1: v1 -> v2\n")
    code, out, _ = run(
        capsys,
        "local-quiver",
        "-f",
        str(path),
        "--factor",
        "1,1:1",
        "--factor",
        "0,1:1",
    )
    assert code == 5
    assert json.loads(out)["error"]["type"] == "InvariantError"


def test_unknown_command_exits_argparse(capsys, k2):
    with pytest.raises(SystemExit) as info:
        cli.main(["no-such-command", "-f", k2])
    assert info.value.code == 2


def test_wrong_source_kind(capsys, k2, tubular):
    code, out, _ = run(capsys, "canonical-info", "-f", k2)
    assert code == 2
    assert json.loads(out)["error"]["type"] == "InputError"
    code, out, _ = run(capsys, "stable", "-f", tubular, "-d", "1,1,1,1,1,1", "-t", "0,0,0,0,0,0")
    assert code == 2


def test_canonical_info(capsys, tubular):
    code, out, _ = run(capsys, "canonical-info", "-f", tubular)
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["class"] == "tubular"
    assert doc["result"]["genus"] == "1"


def test_fixture_record_replay_mismatch(capsys, k2, tmp_path):
    fixture = tmp_path / "golden.json"
    args = ("candecomp", "-f", k2, "-d", "3,1", "--fixture", str(fixture))
    code, out, err = run(capsys, *args)
    assert code == 0 and err == ""
    assert fixture.read_bytes() == out.encode()
    assert "(2,1)+(1,0)" in fixture.read_text()
    code, out2, err = run(capsys, *args)
    assert code == 0 and err == "" and out2 == out
    fixture.write_bytes(fixture.read_bytes() + b" ")
    code, _, err = run(capsys, *args)
    assert code == 5
    assert "fixture mismatch" in err


def test_wild_search_cli(capsys, k3, tmp_path):
    fixture = tmp_path / "wild.json"
    code, out, err = run(
        capsys, "wild-search", "-f", k3, "--fixture", str(fixture)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["status"] == "found"
    assert doc["result"]["dprime"] == {"v1": 1, "v2": 1}
    assert doc["result"]["n"] == 7
    assert doc["result"]["si_theta"] == 253
    assert doc["result"]["si_2theta"] == 65780
    code, out2, err = run(
        capsys, "wild-search", "-f", k3, "--fixture", str(fixture)
    )
    assert code == 0 and out2 == out


def test_rr_check_cli(capsys, tubular):
    code, out, _ = run(
        capsys,
        "rr-check",
        "-f",
        tubular,
        "-d",
        "1,1,1,1,1,1",
        "-e",
        "1,0,0,0,0,0",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["status"] == "ok"
    assert doc["result"]["lhs"] == "-2"
    assert doc["result"]["rhs"] == "-2"


def test_entry_point_matches_package():
    import pathlib

    text = pathlib.Path(__file__).resolve().parent.parent / "pyproject.toml"
    assert 'quiverinv = "quiverinv.cli:main"' in text.read_text()
