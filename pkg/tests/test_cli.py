import json
import subprocess
import sys

import pytest

from spinkerov.cli import main
from spinkerov.kerov import KerovPolynomial, spin_kerov


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["spin-kerov", "--k", "3"], "R4 + R2"),
        (["spin-kerov", "--k", "1"], "R2"),
        (["spin-kerov", "--k", "3", "--basis", "symmetrized"], "T4 + 7/4 T2"),
        (["spin-kerov", "--k", "7"], "R8 + 70 R6 + 168 R4 R2 + 56 R2^3 + 469 R4 + 560 R2^2 + 180 R2"),
        (["kerov", "--k", "4"], "R5 + 5 R3"),
        (["kerov", "--k", "2"], "R3"),
        (["kerov", "--k", "3"], "R4 + R2"),
        (["eval", "--function", "spin-char", "--k", "3", "--partition", "2,1"], "-12"),
        (["eval", "--function", "spin-cumulant", "--k", "4", "--partition", "2,1"], "-15"),
        (["eval", "--function", "free-cumulant", "--k", "4", "--partition", "3"], "3"),
        (["eval", "--function", "free-cumulant", "--k", "4", "--partition", "3,3"], "-30"),
        (["eval", "--function", "ordinary-char", "--k", "2", "--partition", "2"], "2"),
        (["eval", "--function", "moment", "--k", "2", "--partition", "1"], "1"),
        (["eval", "--function", "symmetrized-cumulant", "--k", "3", "--partition", "2,1"], "0"),
    ],
)
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["spin-kerov", "--k", "4"],
        ["eval", "--function", "spin-char", "--k", "4", "--partition", "2,1"],
        ["eval", "--function", "spin-char", "--k", "3", "--partition", "2,2"],
        ["eval", "--function", "spin-char", "--k", "3", "--partition", "a,b"],
        ["eval", "--function", "spin-cumulant", "--k", "3", "--partition", "2,1"],
        ["compare", "--k", "4"],
        ["spin-kerov", "--k", "23"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SPINKEROV_MAX_K", "3")
    assert run(capsys, "spin-kerov", "--k", "5")[0] == 2
    assert run(capsys, "spin-kerov", "--k", "5", "--max-k-cap", "5")[0] == 0
    monkeypatch.setenv("SPINKEROV_MAX_K", "many")
    assert run(capsys, "spin-kerov", "--k", "5")[0] == 2


def test_json_roundtrip_and_envelope(capsys):
    code, out, _ = run(capsys, "spin-kerov", "--k", "9", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"command", "parameters", "result", "toolVersion"}
    assert data["parameters"] == {"k": 9, "basis": "frak"}
    assert KerovPolynomial.from_json(data["result"]) == spin_kerov(9)


def test_text_reparses(capsys):
    for k in (5, 7, 9):
        _, out, _ = run(capsys, "spin-kerov", "--k", str(k))
        assert KerovPolynomial.parse(out, "spin") == spin_kerov(k)


def test_latex(capsys):
    _, out, _ = run(capsys, "spin-kerov", "--k", "3", "--format", "latex")
    assert out == r"\mathfrak{R}_{4} + \mathfrak{R}_{2}"


def test_deterministic(capsys):
    first = run(capsys, "compare", "--k", "7", "--format", "json")
    second = run(capsys, "compare", "--k", "7", "--format", "json")
    assert first == second


def test_check_spin(capsys):
    code, out, err = run(capsys, "check", "--family", "spin", "--max-k", "9")
    assert code == 0
    assert "all nonnegative integers" in out
    assert "k=9 done" in err


def test_check_spin_findings_parallel(capsys):
    code, out, _ = run(capsys, "check", "--family", "spin", "--max-k", "13", "--parallel")
    serial = run(capsys, "check", "--family", "spin", "--max-k", "13")
    assert code == 0
    assert (code, out) == serial[:2]
    assert "k=11" in out and "k=13" in out and "finding" in out


def test_check_symmetrized(capsys):
    code, out, _ = run(capsys, "check", "--family", "symmetrized", "--max-k", "3")
    assert code == 0
    assert "7/4" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--max-k", "5", "--format", "json")
    records = json.loads(out)["result"]["records"]
    assert [r["k"] for r in records] == [1, 3, 5]


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--k", "7")
    assert code == 0
    assert "R6: 70 vs 70  match" in out
    assert "R4 R2: 168 / 84 = 2" in out
    assert "R2^3: 56 / 14 = 4" in out
    assert "MISMATCH" not in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["dims"] == {"4": 1, "3,1": 2}


def test_out_file(capsys, tmp_path):
    target = tmp_path / "k5.txt"
    code, out, _ = run(capsys, "spin-kerov", "--k", "5", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "R6 + 15 R4 + 10 R2^2 + 8 R2\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "spinkerov", "kerov", "--k", "4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "R5 + 5 R3"


def test_check_exit_codes_for_finding_and_mismatch(capsys, monkeypatch):
    from fractions import Fraction

    import spinkerov.cli as cli
    from spinkerov.kerov import PositivityRecord

    real = cli._record

    def fake(k, family):
        rec = real(k, family)
        if k == 11:
            poly = KerovPolynomial("spin", {((12, 1),): Fraction(1), ((2, 1),): Fraction(-1)})
            return PositivityRecord(k, family, poly, False, True, [("R2", Fraction(-1))])
        return rec

    monkeypatch.setattr(cli, "_record", fake)
    code, out, _ = run(capsys, "check", "--max-k", "11")
    assert code == 3
    assert "R2 (-1)" in out

    monkeypatch.setitem(cli.SPIN_KEROV, 3, "R4 + 2 R2")
    code, _, err = run(capsys, "check", "--max-k", "3")
    assert code == 1
    assert "disagrees" in err
