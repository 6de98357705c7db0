"""Command-line surface: routing, formats, exit codes, determinism."""

import json

import pytest

from polarvar.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, dispatch


@pytest.fixture()
def circle_file(tmp_path):
    path = tmp_path / "circle.txt"
    path.write_text("# unit circle\nx1^2 + x2^2 - 1\n")
    return str(path)


@pytest.fixture()
def a10_file(tmp_path):
    path = tmp_path / "a10.json"
    path.write_text("[[1, 0]]")
    return str(path)


def test_dim_subcommand(circle_file, capsys):
    assert dispatch(["dim", "--system", circle_file]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"


def test_deg_and_gb_subcommands(circle_file, capsys):
    assert dispatch(["deg", "--system", circle_file]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"
    assert dispatch(["gb", "--system", circle_file, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["basis"] == ["x1^2 + x2^2 - 1"]


def test_parse_subcommand_canonicalizes(circle_file, capsys):
    assert dispatch(["parse", "--system", circle_file]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "x1^2 + x2^2 - 1"


def test_construct_circle(circle_file, a10_file, tmp_path, capsys):
    report = tmp_path / "out.json"
    code = dispatch(["construct", "--flavor", "classic", "--i", "1",
                     "--system", circle_file, "--matrix", a10_file,
                     "--report", str(report), "--json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim"] == 0 and payload["degree"] == 2
    assert json.loads(report.read_text())["dim"] == 0


def test_delta_and_singular(circle_file, a10_file, capsys):
    assert dispatch(["delta", "--flavor", "classic", "--i", "1",
                     "--system", circle_file, "--matrix", a10_file,
                     "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["dim"] == -1
    assert dispatch(["singular", "--flavor", "classic", "--i", "1",
                     "--system", circle_file, "--matrix", a10_file,
                     "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim_sing"] == -1 and payload["mode"] == "full"


def test_tb_and_fiber(tmp_path, capsys):
    system = tmp_path / "sphere.txt"
    system.write_text("x1^2+x2^2+x3^2-1\n")
    matrix = tmp_path / "a.json"
    matrix.write_text("[[1,0,0],[0,1,0]]")
    assert dispatch(["tb", "--system", str(system), "--matrix", str(matrix),
                     "--point", "1,0,0"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"
    assert dispatch(["fiber", "--system", str(system), "--matrix", str(matrix),
                     "--point", "0,0,1", "--i", "1"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "-1"


def test_point_off_variety_is_an_input_error(tmp_path, capsys):
    system = tmp_path / "sphere.txt"
    system.write_text("x1^2+x2^2+x3^2-1\n")
    matrix = tmp_path / "a.json"
    matrix.write_text("[[1,0,0],[0,1,0]]")
    assert dispatch(["tb", "--system", str(system), "--matrix", str(matrix),
                     "--point", "0,0,0"]) == EXIT_INPUT


def test_malformed_system_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("x1^2 +\n")
    assert dispatch(["dim", "--system", str(bad)]) == EXIT_INPUT
    err = capsys.readouterr().err
    assert "line 1" in err and "position" in err


def test_missing_file_exits_two(capsys):
    assert dispatch(["dim", "--system", "/nonexistent/sys.txt"]) == EXIT_INPUT


def test_unknown_subcommand_exits_two(capsys):
    assert dispatch(["frobnicate"]) == EXIT_INPUT


def test_budget_exit_code(tmp_path, capsys):
    system = tmp_path / "sys.txt"
    system.write_text("x1^2+x2^2+x3^2-1\nx1*x2-x3\nx1*x3-x2\n")
    assert dispatch(["gb", "--system", str(system),
                     "--max-pairs", "1", "--max-basis", "2"]) == EXIT_BUDGET


def test_prime_flag_and_env(tmp_path, capsys, monkeypatch):
    system = tmp_path / "sys.txt"
    system.write_text("x1 - 7\n")
    assert dispatch(["parse", "--system", str(system), "--prime", "7"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "x1"
    monkeypatch.setenv("POLAR_PRIME", "7")
    assert dispatch(["parse", "--system", str(system)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "x1"
    monkeypatch.setenv("POLAR_PRIME", "8")
    assert dispatch(["parse", "--system", str(system)]) == EXIT_INPUT


def test_family31_subcommand(capsys):
    assert dispatch(["family31", "--n", "6", "--seed", "4", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True


def test_chain2_subcommand(tmp_path, capsys):
    system = tmp_path / "circle.txt"
    system.write_text("x1^2 + x2^2 - 1\n")
    assert dispatch(["chain2", "--system", str(system), "--seed", "1",
                     "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert [lv["dim"] for lv in payload["levels"]] == [0]
    gamma = tmp_path / "gamma.json"
    gamma.write_text("[3, 5]")
    assert dispatch(["chain2", "--system", str(system), "--gamma", str(gamma),
                     "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["gamma"] == [3, 5]
    gamma.write_text("[3, \"x\"]")
    assert dispatch(["chain2", "--system", str(system),
                     "--gamma", str(gamma)]) == EXIT_INPUT


def test_degcmp_subcommand(tmp_path, capsys):
    system = tmp_path / "circle.txt"
    system.write_text("x1^2 + x2^2 - 1\n")
    assert dispatch(["degcmp", "--system", str(system), "--i", "1",
                     "--trials", "2", "--seed", "5", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["dominated"] is True
    assert payload["random_degrees"] == [2, 2]


def test_experiment_writes_deterministic_jsonl(tmp_path, capsys):
    out1 = tmp_path / "r1.jsonl"
    out2 = tmp_path / "r2.jsonl"
    base = ["experiment", "--nmax", "3", "--seeds", "2",
            "--master-seed", "11", "--out"]
    assert dispatch(base + [str(out1)]) == EXIT_OK
    capsys.readouterr()
    assert dispatch(base + [str(out2)]) == EXIT_OK
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    records = [json.loads(line) for line in out1.read_text().splitlines()]
    assert len(records) == 8
    assert all(r["match"] for r in records)
    assert all(r["elapsed_ms"] is None for r in records)
    first_keys = list(records[0].keys())
    assert first_keys[:6] == ["n", "p", "i", "flavor", "prime", "seed"]


def test_experiment_human_summary(capsys):
    assert dispatch(["experiment", "--nmax", "2", "--seeds", "1",
                     "--master-seed", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "matched: 1" in out
