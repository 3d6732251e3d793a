import json

START = "0000 1\n1010 1\n"
END = "0010 1\n1000 1\n"


def test_reduce_then_replay(cli, runner, tmp_path, write):
    """ Should write a certificate that replays on C4."""
    cert = tmp_path / "cert.json"
    result = runner.invoke(cli, [
        "reduce", "--family", "cycle", "--n", "4",
        "--start", write("s.txt", START), "--end", write("e.txt", END), "--out", str(cert),
    ])
    assert result.exit_code == 0
    data = json.loads(cert.read_text())
    assert data["start"] == ["0000", "1010"]
    assert data["end"] == ["0010", "1000"]

    replay = runner.invoke(cli, ["replay", "--graph", "C4", "--certificate", str(cert)])
    assert replay.exit_code == 0
    assert json.loads(replay.stdout)["valid"] is True


def test_reduce_on_k2n(cli, runner, tmp_path, write):
    cert = tmp_path / "cert.json"
    result = runner.invoke(cli, [
        "reduce", "--family", "k2n", "--n", "2",
        "--start", write("s.txt", "1011 1\n0111 1\n"), "--end", write("e.txt", "1111 1\n0011 1\n"),
        "--out", str(cert),
    ])
    assert result.exit_code == 0
    replay = runner.invoke(cli, ["replay", "--graph", "K2,2", "--certificate", str(cert)])
    assert replay.exit_code == 0
    assert json.loads(replay.stdout)["valid"] is True


def test_reduce_rejects_different_fibers(cli, runner, write):
    result = runner.invoke(cli, [
        "reduce", "--family", "cycle", "--n", "4",
        "--start", write("s.txt", "0000 1\n"), "--end", write("e.txt", "1111 1\n"),
    ])
    assert result.exit_code == 2


def test_replay_tampered_certificate(cli, runner, tmp_path, write):
    cert = write("cert.json", json.dumps({
        "n": 4,
        "start": ["0000", "1010"],
        "end": ["0000", "1010"],
        "steps": [{"plus": ["0010", "1000"], "minus": ["0000", "1010"], "sign": 1}],
    }))
    out = tmp_path / "verdict.json"
    result = runner.invoke(cli, ["replay", "--graph", "C4", "--certificate", cert, "--out", str(out)])
    assert result.exit_code == 1
    data = json.loads(out.read_text())
    assert data["valid"] is False
    assert data["length"] == 1


def test_replay_malformed_certificate(cli, runner, write):
    result = runner.invoke(cli, ["replay", "--graph", "C4", "--certificate", write("cert.json", "{")])
    assert result.exit_code == 2


def test_km_witness(cli, runner):
    result = runner.invoke(cli, ["witness", "--family", "km", "--m", "3"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["degree"] == 4
    assert data["plus"] == ["000", "011", "101", "110"]


def test_kmn_witness_text(cli, runner):
    result = runner.invoke(cli, ["witness", "--family", "kmn", "--m", "2", "--format", "text"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["[0 0 1] - [0 1 1]", "[1 1 1]   [1 0 1]"]


def test_kmn_witness_cap(cli, runner):
    result = runner.invoke(cli, ["witness", "--family", "kmn", "--m", "5"])
    assert result.exit_code == 2
