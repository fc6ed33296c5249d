import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from graphwalk import jsonio, signature_nonempty
from graphwalk.cli import run

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def f(name):
    return str(DATA / name)


def call(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin=None: call(capsys, monkeypatch, argv, stdin)


def test_emptiness_signature_with_witness(cli):
    code, out, _ = cli(["emptiness", "signature", "--in", f("sig-line.json")])
    assert code == 0
    assert json.loads(out)["verdict"] == "nonempty"
    assert len(json.loads(out)["witness"]["nodes"]) == 2


def test_verdict_output_is_byte_identical(cli):
    _, out, _ = cli(["emptiness", "signature", "--in", f("sig-line.json")])
    sig = jsonio.signature_from_json(json.loads(Path(f("sig-line.json")).read_text()))
    assert out == jsonio.dumps(jsonio.verdict_to_json(signature_nonempty(sig))) + "\n"


def test_empty_signature(cli):
    code, out, _ = cli(["emptiness", "signature", "--in", f("sig-odd.json")])
    assert code == 1 and json.loads(out) == {"verdict": "empty"}


def test_simulate_loop(cli):
    code, out, _ = cli(["simulate", "--sig", f("sig-line.json"), "--gwa", f("gwa-bounce.json"),
                        "--graph", f("line-path.json")])
    assert code == 1 and json.loads(out)["outcome"] == "loop"


def test_simulate_accept_with_trace(cli):
    code, out, _ = cli(["simulate", "--sig", f("sig-line.json"), "--gwa", f("gwa-right.json"),
                        "--graph", f("line-path.json"), "--trace", "--max-steps", "1"])
    res = json.loads(out)
    assert code == 0 and res["outcome"] == "accept" and len(res["trace"]) == 1


def test_3col_pipeline(cli):
    for name, expected in (("k4.json", 1), ("k3.json", 0)):
        _, sig_json, _ = cli(["gen", "3col", "--graph", f(name)])
        code, _, _ = cli(["emptiness", "signature", "--in", "-"], stdin=sig_json)
        assert code == expected, name


@pytest.mark.parametrize("kind", ["gwa", "star"])
def test_reduce_output_feeds_emptiness(cli, kind):
    extra = ["--gwa", f("gwa-right.json")] if kind == "gwa" else \
        ["--star", f("star-universal-line.json")]
    code, out, _ = cli(["reduce", kind, "--sig", f("sig-line.json"), *extra])
    assert code == 0
    code, _, _ = cli(["emptiness", "signature", "--in", "-"], stdin=out)
    assert code == 0


def test_emptiness_of_automata(cli):
    code, out, _ = cli(["emptiness", "gwa", "--sig", f("sig-line.json"),
                        "--gwa", f("gwa-bounce.json")])
    assert code == 1
    code, out, _ = cli(["emptiness", "star", "--sig", f("sig-line.json"),
                        "--star", f("star-universal-line.json"), "--method", "milp"])
    assert code == 0


def test_validate_subcommands(cli):
    assert cli(["validate", "signature", "--in", f("sig-line.json")])[0] == 0
    assert cli(["validate", "graph", "--sig", f("sig-line.json"),
                "--graph", f("line-path.json")])[0] == 0
    code, out, _ = cli(["validate", "graph", "--sig", f("sig-loop.json"),
                        "--graph", f("line-path.json")])
    assert code == 1 and not json.loads(out)["valid"]
    assert cli(["validate", "gwa", "--sig", f("sig-line.json"),
                "--gwa", f("gwa-right.json")])[0] == 0
    assert cli(["validate", "star", "--sig", f("sig-line.json"),
                "--star", f("star-universal-line.json")])[0] == 0


def test_tile_check_and_find(cli):
    base = ["--sig", f("sig-line.json"), "--star", f("star-universal-line.json"),
            "--graph", f("line-path.json")]
    assert cli(["tile", "check", *base, "--tiling", f("tiling-all-q.json")])[0] == 0
    code, out, _ = cli(["tile", "find", *base])
    assert code == 0 and json.loads(out) == {"state_of": {"u": "q", "v": "q"}}


def test_universal_star_generator(cli):
    code, out, _ = cli(["gen", "universal-star", "--sig", f("sig-line.json")])
    assert code == 0 and len(json.loads(out)["stars"]) == 3


def test_grid_pipeline(cli, tmp_path):
    common = ["--tm", f("tm-two-steps.json"), "--n", "2", "--word", "a"]
    _, sig, _ = cli(["gen", "grid-sig", *common])
    _, gwa, _ = cli(["gen", "grid-gwa", *common, "--bound-ok"])
    _, graph, _ = cli(["gen", "grid-graph", *common, "--computation", f("run-two-steps.json")])
    paths = {}
    for name, text in (("sig", sig), ("gwa", gwa), ("graph", graph)):
        paths[name] = tmp_path / f"{name}.json"
        paths[name].write_text(text)
    code, out, _ = cli(["simulate", "--sig", str(paths["sig"]), "--gwa", str(paths["gwa"]),
                        "--graph", str(paths["graph"])])
    assert code == 0 and json.loads(out)["outcome"] == "accept"


def test_oracle_enumerate(cli):
    code, out, _ = cli(["oracle", "enumerate", "--in", f("sig-line.json"), "--max-nodes", "3"])
    assert code == 0 and json.loads(out)["count"] == 3
    code, out, _ = cli(["oracle", "enumerate", "--in", f("sig-line.json"), "--max-nodes", "3",
                        "--limit", "1"])
    assert json.loads(out)["count"] == 1


@pytest.mark.parametrize("argv", [
    ["emptiness", "signature", "--in", "/nonexistent.json"],
    ["gen", "grid-gwa", "--tm", f("tm-accept.json"), "--n", "1", "--word", "a"],
    ["simulate", "--gwa", "x", "--graph", "y"],
    ["emptiness"],
    ["nonsense"],
])
def test_input_errors_exit_2(cli, argv):
    code, _, err = cli(argv)
    assert code == 2 and err


def test_bad_json_on_stdin_exit_2(cli):
    assert cli(["emptiness", "signature", "--in", "-"], stdin="{")[0] == 2


def test_resource_limit_exit_3(cli):
    assert cli(["reduce", "gwa", "--sig", f("sig-line.json"), "--gwa", f("gwa-right.json"),
                "--max-labels", "1"])[0] == 3


def test_real_shell_pipeline():
    gen = subprocess.run([sys.executable, "-m", "graphwalk", "gen", "3col", "--graph", f("k4.json")],
                         capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "graphwalk", "emptiness", "signature",
                          "--in", "-", "--threads", "1"],
                         input=gen.stdout, capture_output=True, text=True)
    assert res.returncode == 1 and json.loads(res.stdout) == {"verdict": "empty"}
