"""CLI behaviour and golden outputs.

Goldens live in ``tests/golden``; set ``COMALG_REGEN=1`` to rewrite them
after an intentional output change, then review the diff.
"""

import os
import subprocess
import sys
from pathlib import Path

import pytest

from comalg.cli import main
from comalg.fileformat import parse

from conftest import DATA

GOLDEN = Path(__file__).parent / "golden"
EX = "tests/data/examples.adl"
ROOT = Path(__file__).parent.parent

# (golden name, argv, expected exit status)
COMMANDS = [
    ("validate", ["validate", EX], 0),
    ("center_m2", ["center", EX, "M2"], 0),
    ("center_t2", ["center", EX, "T2"], 0),
    ("center_z2", ["center", EX, "Z2"], 0),
    ("commutant_diag", ["commutant", EX, "M2", "Diag"], 0),
    ("opposite_t2", ["opposite", EX, "T2"], 0),
    ("tensor_z2_dual", ["tensor", EX, "Z2", "dual"], 0),
    ("tensor_over_k", ["tensor", EX, "Z2", "Z2", "over", "K", "unitZ", "unitZ"], 0),
    ("fuse_d_e", ["fuse-defects", EX, "D", "E"], 0),
    ("verify_d_n_e", ["verify-fusion", EX, "D", "N", "E"], 0),
    ("verify_dm_n_dt", ["verify-fusion", EX, "DM", "N", "DT"], 0),
    ("sector_s", ["sector-check", EX, "S"], 0),
    ("vfuse_s_s", ["vfuse", EX, "S", "S"], 0),
    ("hfuse_s_se", ["hfuse", EX, "S", "SE"], 0),
    ("net_axioms_d", ["net-axioms", EX, "D", "--config", "tests/data/config.txt"], 0),
    ("coherence_pentagon", ["coherence", "--suite", "pentagon", "--seed", "42", "--cases", "10",
                            "--max-dim", "2"], 0),
    ("coherence_all", ["coherence", "--suite", "all", "--cases", "2", "--max-dim", "2"], 0),
]


def run_cli(argv):
    proc = subprocess.run([sys.executable, "-m", "comalg.cli", *argv], cwd=ROOT,
                          capture_output=True, env={**os.environ, "LC_ALL": "C"})
    return proc.returncode, proc.stdout, proc.stderr


@pytest.mark.parametrize("name,argv,code", COMMANDS, ids=[c[0] for c in COMMANDS])
def test_golden(name, argv, code):
    got_code, out, err = run_cli(argv)
    assert got_code == code, err.decode()
    path = GOLDEN / f"{name}.txt"
    if os.environ.get("COMALG_REGEN"):
        path.write_bytes(out)
    assert out == path.read_bytes()
    assert b"\r" not in out
    # a second invocation is byte-identical
    assert run_cli(argv)[1] == out


def test_center_m2_is_the_scalars():
    assert (GOLDEN / "center_m2.txt").read_text() == "dim 1\nbasis 1,0,0,1\n"


def test_fusion_outputs_parse_back():
    base = (DATA / "examples.adl").read_text()
    for argv in (["vfuse", EX, "S", "S"], ["hfuse", EX, "S", "SE"], ["fuse-defects", EX, "D", "E"]):
        _, out, _ = run_cli(argv)
        parse(base + "\n" + out.decode())


@pytest.mark.parametrize("argv", [
    ["validate", "tests/data/bad.adl"],
    ["validate", "tests/data/missing.adl"],
    ["center", EX, "Nope"],
    ["commutant", EX, "Z2", "Diag"],
    ["tensor", EX, "Z2", "Z2", "under", "K", "unitZ", "unitZ"],
    ["verify-fusion", EX, "D", "A", "E"],
    ["vfuse", EX, "S", "SM"],
    ["coherence", "--suite", "pentagon", "--cases", "0"],
    ["coherence", "--suite", "unknown"],
    ["net-axioms", EX, "D"],
])
def test_input_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == 2


def test_failing_axiom_exits_1(tmp_path, capsys):
    ws = tmp_path / "w.adl"
    ws.write_text((DATA / "examples.adl").read_text()
                  + "\ndefect Aug : A - N { algebra K row 1,1 }\n")
    cfg = tmp_path / "c.txt"
    cfg.write_text("interval W = arc(w:0,w:1,+)\ninterval K = arc(b:-1,w:1,+)\ninclude W K\n")
    assert main(["net-axioms", str(ws), "Aug", "--config", str(cfg)]) == 1
    assert capsys.readouterr().out == "FAIL isotony W K witness=(1,-1)\n"


def test_bad_file_reports_position(capsys):
    assert main(["validate", "tests/data/bad.adl"]) == 2
    assert capsys.readouterr().err == "error: tests/data/bad.adl:2:1: algebra Bad fails associativity (1, 1, 1)\n"
