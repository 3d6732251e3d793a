import json
from unittest.mock import patch

from app.core.errors import BudgetExceeded

START = "0000 1\n1010 1\n"


def basis_file(cli, runner, tmp_path, dmax):
    out = str(tmp_path / f"moves{dmax}.txt")
    result = runner.invoke(cli, ["basis", "--graph", "C4", "--dmax", str(dmax), "--format", "text", "--out", out])
    assert result.exit_code == 0
    return out


def test_basis_of_square(cli, runner):
    """ Should list 8 quadrics and 8 quartics with an exact width of 4."""
    result = runner.invoke(cli, ["basis", "--graph", "C4", "--dmax", "4"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert sorted(data) == ["degrees", "graph", "partial", "width"]
    assert {d: r["count"] for d, r in data["degrees"].items()} == {"2": 8, "3": 0, "4": 8}
    assert data["width"] == {"value": 4, "exact": True}
    assert data["partial"] is False


def test_basis_groups_reps_under_their_degree(cli, runner):
    """ Should key degrees by string and hold one tableau per counted generator."""
    data = json.loads(runner.invoke(cli, ["basis", "--graph", "C4", "--dmax", "4"]).stdout)
    assert data["graph"]["n"] == 4
    assert len(data["graph"]["edges"]) == 4
    for degree, entry in data["degrees"].items():
        assert len(entry["reps"]) == entry["count"]
        assert entry["status"] == "complete"
        for rep in entry["reps"]:
            assert len(rep["plus"]) == len(rep["minus"]) == int(degree)
            assert all(len(row) == 4 for row in rep["plus"] + rep["minus"])


def test_basis_out_of_budget_writes_partial(cli, runner, tmp_path):
    out = tmp_path / "basis.json"
    result = runner.invoke(cli, ["basis", "--graph", "C4", "--dmax", "4", "--budget", "10", "--out", str(out)])
    assert result.exit_code == 3
    data = json.loads(out.read_text())
    assert data["partial"] is True
    assert {d["status"] for d in data["degrees"].values()} == {"skipped"}


def test_basis_rejects_bad_budget(cli, runner):
    result = runner.invoke(cli, ["basis", "--graph", "C4", "--dmax", "4", "--budget", "0"])
    assert result.exit_code == 2


@patch("app.basis.commands.markov_basis_up_to", side_effect=BudgetExceeded("monomials", 99))
def test_basis_budget_from_engine(mock_engine, cli, runner):
    result = runner.invoke(cli, ["basis", "--graph", "C4", "--dmax", "2"])
    assert result.exit_code == 3
    mock_engine.assert_called_once()


def test_width_text(cli, runner):
    result = runner.invoke(cli, ["width", "--graph", "K3", "--dmax", "4", "--format", "text"])
    assert result.exit_code == 0
    assert result.stdout == "= 4\n"


def test_width_lower_bound(cli, runner):
    """ Should report only a lower bound when no known bound is reached."""
    result = runner.invoke(cli, ["width", "--graph", "K4", "--dmax", "3", "--format", "text"])
    assert result.exit_code == 0
    assert result.stdout == ">= 0\n"


def test_verify_full_basis(cli, runner, tmp_path):
    moves = basis_file(cli, runner, tmp_path, 4)
    result = runner.invoke(cli, ["verify", "--graph", "C4", "--moves", moves, "--dmax", "4"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["connected"] is True


def test_verify_quadrics_only(cli, runner, tmp_path):
    moves = basis_file(cli, runner, tmp_path, 2)
    out = tmp_path / "verify.json"
    result = runner.invoke(cli, ["verify", "--graph", "C4", "--moves", moves, "--dmax", "4", "--out", str(out)])
    assert result.exit_code == 1
    data = json.loads(out.read_text())
    assert data["connected"] is False
    assert data["degrees"][2]["disconnected"] >= 1


def test_verify_single_fiber(cli, runner, tmp_path, write):
    moves = basis_file(cli, runner, tmp_path, 2)
    table = write("start.txt", START)
    result = runner.invoke(cli, ["verify", "--graph", "C4", "--moves", moves, "--table", table])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["fiber"]["size"] == 2
    assert data["fiber"]["status"] == "connected"


def test_verify_needs_exactly_one_mode(cli, runner, tmp_path, write):
    moves = basis_file(cli, runner, tmp_path, 2)
    table = write("start.txt", START)
    both = runner.invoke(cli, ["verify", "--graph", "C4", "--moves", moves, "--dmax", "2", "--table", table])
    neither = runner.invoke(cli, ["verify", "--graph", "C4", "--moves", moves])
    assert both.exit_code == 2
    assert neither.exit_code == 2


def test_sample_is_reproducible(cli, runner, tmp_path, write):
    """ Should give the same walk for the same seed."""
    moves = basis_file(cli, runner, tmp_path, 4)
    start = write("start.txt", START)
    args = ["sample", "--graph", "C4", "--moves", moves, "--start", start, "--steps", "50", "--seed", "7", "--fiber-size"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    data = json.loads(first.stdout)
    assert data["steps"] == 50
    assert data["accepted"] + data["rejected"] == 50
    assert data["fiber_size"] == 2
    assert data["distinct"] <= 2


def test_sample_rejects_invalid_moves(cli, runner, write):
    moves = write("bad.txt", "[0 0 0 0] - [1 1 1 1]\n")
    start = write("start.txt", START)
    result = runner.invoke(cli, ["sample", "--graph", "C4", "--moves", moves, "--start", start])
    assert result.exit_code == 2
