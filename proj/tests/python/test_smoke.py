import json
import os
import subprocess

import pytest

import dotbinom


def test_values():
    assert dotbinom.bracket(5, 4) == 60
    assert dotbinom.dot_binom(5, 4, 2) == 450
    assert dotbinom.dot_binom_variant(3, 2, 1, "DL") == 2
    assert dotbinom.pascal_row(5, 4) == [1, 60, 450, 60, 1]
    assert dotbinom.group_order(5, 4) == 28800


def test_big_values_are_python_ints():
    v = dotbinom.dot_binom(1009, 20, 10)
    assert isinstance(v, int)
    assert v > 2**64


def test_poly():
    assert dotbinom.poly(1, 4, 2) == "1/2*q^4 + q^3 + 1/2*q^2"


def test_errors():
    with pytest.raises(ValueError):
        dotbinom.bracket(6, 2)


def test_run_cli_json():
    code, out, err = dotbinom.run_cli(["--format", "json", "triangle", "--q", "3", "--rows", "2"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["command"] == "triangle"
    assert [r["value"] for r in doc["rows"]] == ["1", "1", "1", "1", "2", "1"]


@pytest.mark.skipif("DOTBINOM_CLI" not in os.environ, reason="executable path not provided")
def test_executable():
    res = subprocess.run([os.environ["DOTBINOM_CLI"], "bracket", "--q", "3", "--n", "2", "--compare-paper"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert "status=PaperDiscrepancy" in res.stdout
