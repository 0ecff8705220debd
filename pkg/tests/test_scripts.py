import runpy
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize(
    "name,argv,expect",
    [
        ("reproduce_table1.py", ["--box", "q=3,d=4..5"], "(81, 32, 13, 12)"),
        ("q0_table.py", ["--d", "6,10"], "  10     18"),
        ("largebeta_onset.py", ["--d", "5", "--beta", "1..60"], "(n >= 34)"),
    ],
)
def test_script_runs(name, argv, expect, monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", [name, *argv])
    runpy.run_path(str(SCRIPTS / name), run_name="__main__")
    assert expect in capsys.readouterr().out
