#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite for the command-line entry point.
"""

import json
import os
import pytest
from src.platform.calculus.main import (
    EXIT_MODEL, EXIT_OK, EXIT_USAGE, SETTINGS, main, power, resolve_model_path)


def test_power_labels():
    """
    Test the monomial labels of the text output.
    """
    assert power(0, 0) == "1"
    assert power(1, 0) == "t"
    assert power(2, 1) == "t^2 s"
    assert power(0, 3) == "s^3"


def test_expand_json(capsys):
    """
    Test the JSON payload of an expansion.
    """
    assert main(["expand", "--map", "chi", "--order", "2"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["map"] == "chi"
    assert payload["order"] == 2
    assert [[c["t"], c["s"]] for c in payload["coefficients"]] == [[1, 0], [2, 0]]
    assert payload["coefficients"][1]["terms"] == [
        {"coeff": {"num": "-1", "den": "2"}, "lie": "y[y]"}]


def test_expand_text(capsys):
    """
    Test the text rendering of an expansion.
    """
    assert main(["expand", "--map", "beta", "--order", "2", "--format", "text"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "beta to order 2"
    assert "t: y" in lines
    assert "t^2: -1/2 y |> y" in lines


def test_expand_lie_text_uses_triangle(capsys):
    """
    Test that Lie-valued maps print tree letters through the triangle.
    """
    assert main(["expand", "--map", "chi", "--order", "3", "--format", "text"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "chi to order 3"
    assert "t: y" in lines
    assert "t^2: -1/2 y |> y" in lines
    third = next(line for line in lines if line.startswith("t^3: "))
    assert "y |> (y |> y)" in third
    assert "y[" not in third


def test_expand_to_file(tmp_path, capsys):
    """
    Test writing the output to a file.
    """
    target = tmp_path / "kinv.txt"
    code = main(["expand", "--map", "kinv", "--word", "a.b", "--format", "text",
                 "--out", str(target)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    assert "b[a] + a.b" in target.read_text(encoding="utf-8")


@pytest.mark.parametrize("argv", [
    ["expand", "--map", "chi", "--order", "99"],
    ["expand", "--map", "kinv", "--word", "a[b"],
    ["expand", "--map", "unknown"],
    ["expand"],
    ["verify", "--max-degree", "0"],
    ["geom", "--model", "flat2d", "--experiment", "double-exp", "--h", "0.1"],
    [],
])
def test_usage_errors(argv):
    """
    Test that invalid invocations exit with the usage code.
    """
    assert main(argv) == EXIT_USAGE


def test_settings_sections_survive_runs(capsys):
    """
    Test that a run reads the configured sections without changing them.
    """
    assert SETTINGS.section("expand")["format"] == "json"
    assert main(["expand", "--map", "z", "--order", "2"]) == EXIT_OK
    capsys.readouterr()
    assert SETTINGS.section("expand")["format"] == "json"
    assert SETTINGS.section("templates")["expand"] == "expand.txt.j2"
    assert SETTINGS.section("missing") == {}


def test_help():
    """
    Test that help exits successfully.
    """
    assert main(["--help"]) == EXIT_OK


def test_verify_json(capsys):
    """
    Test one suite at low degree.
    """
    code = main(["verify", "--suite", "kmap", "--max-degree", "2", "--format", "json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert [suite["suite"] for suite in payload["suites"]] == ["kmap"]


def test_verify_text(capsys):
    """
    Test the text report of a suite.
    """
    assert main(["verify", "--suite", "framed", "--max-degree", "2"]) == EXIT_OK
    output = capsys.readouterr().out
    assert "[PASS] framed" in output
    assert output.rstrip().endswith("all invariants hold")


def test_resolve_bundled_model(tmp_path):
    """
    Test that bundled names and explicit paths both resolve.
    """
    assert resolve_model_path("sphere").endswith(os.path.join("models", "sphere.json"))
    assert resolve_model_path("so3.json").endswith(os.path.join("models", "so3.json"))
    explicit = tmp_path / "model.json"
    explicit.write_text("{}", encoding="utf-8")
    assert resolve_model_path(str(explicit)) == str(explicit)


def test_geom_bad_model(tmp_path):
    """
    Test that unreadable and invalid models exit with the model code.
    """
    broken = tmp_path / "broken.json"
    broken.write_text('{"kind": "chart", "dim": 2,\n "gamma": [}', encoding="utf-8")
    assert main(["geom", "--model", str(broken), "--experiment", "bianchi"]) == EXIT_MODEL
    assert main(["geom", "--model", str(tmp_path / "missing.json"),
                 "--experiment", "bianchi"]) == EXIT_MODEL


def test_geom_double_exp_on_group(capsys):
    """
    Test that the double exponential on a frame model is a model error.
    """
    assert main(["geom", "--model", "so3", "--experiment", "double-exp"]) == EXIT_MODEL
    assert "[FAIL] double-exp on so3" in capsys.readouterr().out


def test_geom_json(capsys):
    """
    Test a passing experiment with JSON output.
    """
    code = main(["geom", "--model", "so3", "--experiment", "curvature-element",
                 "--format", "json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["model"] == "so3"


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
