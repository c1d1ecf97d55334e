import io
import subprocess
import sys

import pytest

from higher_ind.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_verify_cycle():
    code, text = run("verify", "cycle", "--n", "6", "--d", "3")
    assert code == 0 and text.strip() == "PASS: formula wedge[2 x S^1] matches computed 1:Z^2"


@pytest.mark.parametrize("argv", [
    ["verify", "path", "--n", "8", "--d", "4"],
    ["verify", "multipartite", "--parts", "3,2", "--r", "2"],
    ["verify", "complete", "--n", "5", "--r", "3"],
    ["verify", "whiskered", "--gen", "C4", "--r", "6"],
    ["verify", "whiskered", "--n", "3", "--r", "2"],
    ["verify", "leafy", "--gen", "P3", "--counts", "2,1,1", "--r", "4"],
    ["verify", "tree", "--m", "3", "--h", "1", "--r", "2"],
])
def test_verify_all_evaluators(argv):
    code, text = run(*argv)
    assert code == 0 and text.startswith("PASS")


def test_verify_flags_m2():
    code, text = run("verify", "tree", "--m", "2", "--h", "2", "--r", "4")
    assert code == 0 and "outside stated hypothesis" in text


def test_table():
    code, text = run("table", "--rows", "3", "--cols", "3")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 9 and "(2,2): 1:Z^3" in lines and "(3,3): 2:Z^5" in lines


def test_homology_and_formats():
    code, text = run("homology", "--gen", "C4", "--r", "2")
    assert code == 0 and "1: rank=3 torsion=[]" in text
    code, kv = run("homology", "--gen", "C4", "--r", "2", "--format", "kv")
    assert code == 0 and "groups:" in kv and "rank: 3" in kv
    assert run("homology", "--gen", "C4", "--r", "2", "--format", "kv") == (code, kv)


def test_window_enumerates_only_what_it_needs():
    code, text = run("homology", "--gen", "grid:2:6", "--r", "2", "--window", "2", "3")
    assert code == 0 and text.splitlines() == ["2: rank=0 torsion=[]", "3: rank=1 torsion=[]"]


def test_exit_codes(tmp_path):
    assert run("homology", "--gen", "P6", "--r", "2", "--max-dim", "1", "--window", "0", "2")[0] == 4
    assert run("homology", "--gen", "E12", "--r", "1", "--cap", "50")[0] == 3
    assert run("homology", "--gen", "nope:3", "--r", "1")[0] == 2
    assert run("homology", "--r", "1")[0] == 2
    assert run("bogus")[0] == 2
    f = tmp_path / "g.txt"
    f.write_text("2 1\n0 1\n")
    assert run("homology", "--file", str(f), "--gen", "P2", "--r", "1")[0] == 2
    assert run("homology", "--file", str(f), "--r", "1") == (0, "-1: rank=0 torsion=[]\n0: rank=1 torsion=[]\n")


def test_gen_and_complex():
    code, text = run("gen", "--gen", "P3")
    assert code == 0 and text.splitlines()[0] == "3 2"
    code, text = run("complex", "--gen", "K3", "--r", "2")
    assert code == 0 and text.splitlines()[0] == "1 7"


def test_morse_command():
    code, text = run("morse", "path", "--n", "6", "--d", "3")
    assert code == 0 and "acyclic: True" in text and "1,4" in text.splitlines()
    code, text = run("morse", "cycle", "--n", "6", "--d", "3", "--pairs")
    assert code == 0 and " -> " in text
    code, text = run("morse", "element", "--gen", "C4", "--r", "1", "--xs", "0")
    assert code == 0 and "critical_by_dim: 0:2, 1:1" in text
    assert run("morse", "path", "--n", "6")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higher_ind", "verify", "path", "--n", "5", "--d", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("PASS")
