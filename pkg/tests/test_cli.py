from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from hhe6.cli import EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, ConfigError, RunConfig, main, parse_config
from hhe6.demo import dual_numbers
from hhe6.pathalg import quiver_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_resolution_passes(capsys):
    code, out, _ = run(capsys, "verify-resolution", "--s", "2", "--char", "3", "--max-degree", "11")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["summary"] == {"rows": len(data["rows"]), "failures": 0}
    assert out.endswith("}\n")


def test_seam_degrees_included(capsys):
    code, out, _ = run(capsys, "verify-resolution", "--s", "1", "--char", "0", "--max-degree", "22")
    assert code == EXIT_OK
    degrees = {r["degree"] for r in json.loads(out)["rows"] if r["check"] == "d^2=0"}
    assert {10, 11, 21} <= degrees


def test_inject_typo(capsys):
    code, out, _ = run(capsys, "verify-resolution", "--s", "2", "--char", "3", "--max-degree", "11",
                       "--inject-typo", "d3")
    assert code == EXIT_FAIL
    failed = {(r["check"], r["degree"]) for r in json.loads(out)["rows"] if not r["ok"]}
    assert ("d^2=0", 3) in failed and ("exactness", 3) in failed


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--s", "2", "--char", "2", "--max-degree", "21")
    assert code == EXIT_OK
    rows = json.loads(out)["rows"]
    assert len(rows) == 22 and all(r["ok"] for r in rows)
    code, out, _ = run(capsys, "dims", "--s", "1", "--char", "3", "--max-degree", "0")
    assert json.loads(out)["rows"][0]["hh"] == 3


def test_dims_text_grid(capsys):
    code, out, _ = run(capsys, "dims", "--s", "2", "--char", "2", "--format", "text")
    lines = out.splitlines()
    assert lines[0].split() == ["r", "c=0", "c=1", "c=2", "c=3"]
    assert len(lines) == 1 + 11 + 3
    assert lines[-1] == "22 degrees, 0 mismatches"


def test_ring(capsys):
    code, out, _ = run(capsys, "ring", "--s", "1", "--char", "0")
    assert code == EXIT_OK
    data = json.loads(out)
    assert {"generation", "generators"} <= set(data)
    kinds = {r["relation"] for r in data["rows"]}
    assert {"factorization", "worked-example", "X3", "table"} <= kinds


def test_ring_sample_is_seeded(capsys):
    a = run(capsys, "ring", "--s", "1", "--sample", "5", "--seed", "3")[1]
    b = run(capsys, "ring", "--s", "1", "--sample", "5", "--seed", "3")[1]
    c = run(capsys, "ring", "--s", "1", "--sample", "5", "--seed", "4")[1]
    assert a == b != c


def test_ring_guard(capsys):
    code, _, err = run(capsys, "ring", "--s", "3")
    assert code == EXIT_RESOURCE and "resource" in err


def test_oracle_demo(capsys):
    code, out, _ = run(capsys, "oracle", "--demo", "dual-numbers", "--char", "2", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["oracle"] for r in rows] == ["2", "2", "2", "2", "2"]
    assert rows[-1]["t"] == "centre"


@pytest.mark.parametrize("s, char, t_max", [(1, 3, 3), (2, 2, 2)])
def test_oracle_e6(capsys, s, char, t_max):
    code, out, _ = run(capsys, "oracle", "--s", str(s), "--char", str(char), "--t-max", str(t_max))
    assert code == EXIT_OK
    assert len(json.loads(out)["rows"]) == t_max + 2


def test_oracle_quiver_file(capsys, tmp_path):
    alg = dual_numbers(0)
    path = tmp_path / "dual.json"
    path.write_text(json.dumps(quiver_to_json(alg.quiver, [{(0, 0): 1}])))
    code, out, _ = run(capsys, "oracle", "--quiver", str(path), "--nilpotency", "2", "--t-max", "2")
    assert code == EXIT_OK
    rows = json.loads(out)["rows"]
    assert [r["oracle"] for r in rows[:3]] == [2, 1, 1]
    assert rows[0]["resolution"] is None and rows[0]["ok"] is None
    code, _, err = run(capsys, "oracle", "--quiver", str(path))
    assert code == EXIT_USAGE


def test_oracle_resource_limit(capsys, monkeypatch):
    import hhe6.cli

    monkeypatch.setattr(hhe6.cli, "DEFAULT_LIMIT", 100)
    code, _, err = run(capsys, "oracle", "--s", "2", "--t-max", "3")
    assert code == EXIT_RESOURCE and "limit" in err


def test_translates(capsys):
    code, out, _ = run(capsys, "translates", "--s", "1", "--char", "3")
    assert code == EXIT_OK
    # family 23 is not a generator in characteristic 3
    assert {r["family"] for r in json.loads(out)["rows"]} == {1, 2, 3, 4, 5, 24}


@pytest.mark.parametrize("argv", [["dims", "--s", "9"], ["dims", "--char", "4"], ["dims", "--max-degree", "-1"],
                                  ["verify-resolution", "--inject-typo", "d11"]])
def test_config_validation(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err.startswith("hh: error")


def test_bad_typo_flag():
    with pytest.raises(SystemExit):
        parse_config(["verify-resolution", "--inject-typo", "dx"])


def test_run_config():
    cfg = parse_config(["dims", "--s", "2", "--char", "5", "--seed", "9", "-vv"])
    assert (cfg.s, cfg.char, cfg.seed, cfg.verbosity) == (2, 5, 9, 2)
    assert "output" not in cfg.echo()
    with pytest.raises(ConfigError):
        RunConfig("dims", s=0).validate()


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "dims", "--s", "1", "--format", "csv", "--output", str(target))
    assert code == EXIT_OK and out == ""
    raw = target.read_bytes()
    assert raw.endswith(b"\r\n")  # RFC-style record separators
    text = raw.decode()
    assert text.splitlines()[0].startswith("t,ell,r,congruence,hom")
    assert run(capsys, "dims", "--s", "1", "--format", "csv")[1].splitlines() == text.splitlines()


def test_csv_quoting(capsys):
    out = run(capsys, "verify-resolution", "--s", "1", "--max-degree", "3", "--inject-typo", "d1",
              "--format", "csv")[1]
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["check", "degree", "ok", "detail"]
    assert all(len(r) == 4 for r in rows)


@pytest.mark.parametrize("argv", [["dims", "--s", "2", "--char", "3"], ["ring", "--s", "1", "--char", "2"],
                                  ["verify-resolution", "--s", "1", "--max-degree", "22"]])
@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_determinism_across_threads(capsys, monkeypatch, argv, fmt):
    outs = []
    for threads in ("1", "1", "4"):
        monkeypatch.setenv("HH_THREADS", threads)
        outs.append(run(capsys, *argv, "--format", fmt)[1].encode())
    assert outs[0] == outs[1] == outs[2]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "hhe6.cli", "oracle", "--demo", "dual-numbers", "--format", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "5 rows, 0 failures"
