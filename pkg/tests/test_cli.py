import json
import subprocess
import sys

import pytest

from golden import GOLDEN
from scheme_spectra import Hamming
from scheme_spectra.cli import SUBCOMMANDS, format_matrix, main, to_jsonable
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_pmatrix_pretty_matches_golden(capsys):
    code, out, _ = run(capsys, "pmatrix", "--scheme", "hamming:d=4,q=3")
    assert code == 0
    assert out.splitlines()[1:6] == format_matrix(GOLDEN[Hamming(4, 3)]).splitlines()


def test_pmatrix_json_is_lossless(capsys):
    code, doc = run_json(capsys, "pmatrix", "--scheme", "johnson:n=27,d=5")
    assert code == 0 and doc["status"] == "ok" and doc["elapsed_ms"] is None
    assert doc["results"]["matrix"][0] == ["1", "110", "2310", "15400", "36575", "26334"]


def test_json_output_is_deterministic(capsys):
    a = run(capsys, "verify", "H-THM-NONBINARY", "--box", "q=3,d=1..6", "--format", "json")
    b = run(capsys, "verify", "H-THM-NONBINARY", "--box", "q=3,d=1..6", "--format", "json")
    assert a == b


def test_timing_flag(capsys):
    _, doc = run_json(capsys, "q0", "--d", "3", "--timing")
    assert isinstance(doc["elapsed_ms"], float)


def test_verify_exit_codes(capsys):
    code, doc = run_json(capsys, "verify", "H-THM-NONBINARY")
    assert code == 0 and doc["status"] == "pass-with-listed-exceptions"
    assert doc["results"]["exceptions"] == [["ii", "3", "4", "3", "3"]]
    code, doc = run_json(capsys, "verify", "A-THM")
    assert code == 1 and doc["status"] == "fail"


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "H-THM-BINARY" in out and "CP-LARGEBETA" in out


def test_dualpolar_half_integer_e(capsys):
    code, doc = run_json(capsys, "pmatrix", "--scheme", "dualpolar:q=4,d=2,e=1/2")
    assert code == 0
    code, _, err = run(capsys, "pmatrix", "--scheme", "dualpolar:q=2,d=2,e=1/2")
    assert code == 2 and "square" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["pmatrix"],
        ["pmatrix", "--scheme", "hamming:d=3"],
        ["pmatrix", "--scheme", "hamming:d=3,q=2", "--bogus"],
        ["verify", "NOPE"],
        ["verify", "H-THM-BINARY", "--box", "q=2..,d=1"],
        ["column", "--scheme", "hamming:d=3,q=2", "--j", "7"],
        ["q0", "--d", "1"],
        ["bounds", "G-LEM-SP", "--params", "q=2,n=24,d=12,i=7,j=5"],
        ["scan", "--family", "nope"],
        ["q0", "--d", "3", "--jobs", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")
    assert out == ""


def test_q0_range_csv(capsys):
    code, out, _ = run(capsys, "q0", "--d", "2..6", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["d,q0", "2,2", "3,3", "4,4", "5,5", "6,7"]


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "--box", "q=3,d=5", "--distinct", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "5,3,3,4,unexplained(P_{13}=P_{43});unexplained(P_{23}=P_{53})"


def test_scan_reports_srg_params(capsys):
    code, doc = run_json(capsys, "scan", "--box", "q=3,d=4", "--distinct", "3")
    assert code == 0
    assert "81" in json.dumps(doc["results"])


def test_zeros_and_bounds(capsys):
    code, out, _ = run(capsys, "zeros", "--d-max", "12")
    assert code == 0 and "part (i): agrees" in out
    code, doc = run_json(capsys, "bounds", "H-LEM-QPOW", "--params", "q=3,d=4,i=1,j=3")
    assert code == 0 and doc["results"][0]["checks"][0]["rhs"] == "32"
    code, doc = run_json(capsys, "bounds", "CHVATAL", "--params", "n=20,d=10")
    assert code == 0 and doc["results"][0]["holds"] is True
    code, out, _ = run(capsys, "bounds", "--list")
    assert code == 0 and "G-LEM-SP" in out


def test_identities_command(capsys):
    code, out, _ = run(capsys, "identities", "--scheme", "hermitian:q=2,d=3")
    assert code == 0 and "all identities hold" in out


def test_column_and_analyze(capsys):
    code, doc = run_json(capsys, "column", "--scheme", "hamming:d=4,q=3", "--j", "3")
    assert code == 0 and doc["results"]["argmin_set"] == ["1", "2", "4"]
    code, out, _ = run(capsys, "analyze", "--scheme", "johnson:n=10,d=5")
    assert code == 0 and "J-COR-KARLOFF" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "p.csv"
    code, out, _ = run(capsys, "pmatrix", "--scheme", "hamming:d=2,q=2", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0].startswith("i,")


def test_to_jsonable():
    assert to_jsonable({"a": [1, Fraction(1, 2), Fraction(4, 2), None, True]}) == {"a": ["1", "1/2", "2", None, True]}


def test_subcommands_have_help():
    for cmd in SUBCOMMANDS:
        proc = subprocess.run([sys.executable, "-m", "scheme_spectra", cmd, "--help"], capture_output=True, text=True)
        assert proc.returncode == 0 and "--format" in proc.stdout
