import subprocess
import sys

import pytest

from circlet.cli import main
from circlet.core import serialize
from circlet.subtour import half_one_point


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeffs(capsys):
    code, out, _ = run(capsys, "coeffs", "12")
    assert code == 0
    assert out.splitlines()[:2] == ["c: 1 4 3 2 5 0", "rhs: 10"]
    assert "tt_rhs: 58" in out


@pytest.mark.parametrize("n", [4, 8, 12])
def test_verify(capsys, n):
    code, out, _ = run(capsys, "verify", str(n))
    assert code == 0 and out.strip() == f"min={n - 2} rhs={n - 2} valid=true"


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "8", "--exhaustive")
    assert code == 0 and "exhaustive tours=2520 min=6" in out


def test_facet(capsys):
    code, out, _ = run(capsys, "facet", "8")
    assert code == 0 and "family=20 rank=20" in out and "valid=true" in out


def test_strength(capsys):
    code, out, _ = run(capsys, "strength", "8")
    assert out.strip() == "n=8 circlet=11/10 crown=11/10 circlet_ge_crown=true"


def test_check_tour_and_point(capsys, tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("n 8\ntour 1 2 3 4 8 7 6 5\n")
    code, out, _ = run(capsys, "check", str(f))
    assert code == 0 and "value=6 rhs=6 slack=0 satisfied=true" in out
    f.write_text(serialize(half_one_point(8)))
    code, out, _ = run(capsys, "check", str(f))
    assert code == 1 and "slack=-2" in out


def test_contract(capsys, tmp_path):
    f = tmp_path / "sample.txt"
    f.write_text("n 12\ntour 1 2 8 7 11 5 6 12 9 10 3 4\n")
    code, out, _ = run(capsys, "contract", str(f))
    assert code == 0
    assert out.splitlines()[0].startswith("contract B2 u=1 j=4 k=11 delta=")
    code, out, _ = run(capsys, "contract", "-v", str(f))
    assert "  contracted 1-2-7-3-4-8-5-6" in out


def test_separate(capsys, tmp_path):
    f = tmp_path / "h.txt"
    f.write_text(serialize(half_one_point(8)))
    code, out, _ = run(capsys, "separate", str(f))
    assert code == 1
    assert out.splitlines() == ["mode=exhaustive value=4 rhs=6 violation=2 violated=true",
                                "labeling: 1 2 3 4 5 6 7 8"]
    f.write_text(serialize(half_one_point(16)))
    code, _, err = run(capsys, "separate", str(f))
    assert code == 3 and "heuristic" in err
    code, out, _ = run(capsys, "separate", str(f), "--mode", "heuristic", "--budget", "2", "--seed", "1")
    assert code == 1 and out.startswith("mode=heuristic")


def test_el(capsys):
    code, out, _ = run(capsys, "el", "4")
    assert out.splitlines() == ["t 4 0", "t 2 2", "count=2"]


def test_buratti(capsys):
    code, out, _ = run(capsys, "buratti", "8", *["2"] * 7)
    assert code == 1 and "holds=false q=2" in out and "path feasible=false" in out
    code, out, _ = run(capsys, "buratti", "8", "1", "1", "1", "1", "1", "1", "4", "4", "--kind", "cycle")
    assert code == 0 and "cycle feasible=true" in out


def test_subtour(capsys):
    code, out, _ = run(capsys, "subtour", "8")
    assert code == 0 and "subtour feasible" in out and "satisfied=false" in out
    code, out, _ = run(capsys, "subtour", "8", "--lambda", "1/4")
    assert code == 1 and "infeasible box edge=1-5 weight=3/2" in out
    code, out, _ = run(capsys, "subtour", "12", "--lambda", "5/6")
    assert code == 0 and "circlet value=10 rhs=10 satisfied=true" in out


def test_gap(capsys):
    code, out, _ = run(capsys, "gap", "8")
    assert code == 0
    assert out.splitlines() == ["tour_opt=6 lp_value=4 ratio=3/2", "eulerian cost=4 even=true connected=true"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["bogus"], 2),
        ([], 2),
        (["coeffs", "10"], 2),
        (["check", "/nonexistent/file"], 2),
        (["verify", "24"], 3),
        (["subtour", "8", "--lambda", "x"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_parse_error_reports_line(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("n 8\ntour 1 2 3 3 5 6 7 8\n")
    code, _, err = run(capsys, "check", str(f))
    assert code == 2 and "line 2" in err


def test_threads_flag_and_module_entry(capsys):
    assert run(capsys, "--threads", "4", "coeffs", "8")[0] == 0
    proc = subprocess.run([sys.executable, "-m", "circlet", "coeffs", "8"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("c: 1 2 3 0")


def test_output_is_deterministic(capsys):
    first = run(capsys, "el", "8")
    assert run(capsys, "el", "8") == first
