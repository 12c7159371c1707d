"""Test command-line interface."""

import json
import pytest
from __init__ import __version__
from config.cli import (BUDGET_ENV_VAR, DEFAULTS, RunConfig, build_config,
                        parse_arguments)
from experiment import MalformedFlagsError
from experiment.spec import Method
from script import main, run

def run_main(capsys, *argv):
    """Run the entry point; return exit code, stdout and stderr."""
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    out, err = capsys.readouterr()
    return excinfo.value.code, out, err

def error_object(err):
    """The machine-readable error is the last line on standard error."""
    return json.loads(err.strip().splitlines()[-1])

def test_common(capsys):
    """Test --debug and --version."""
    experiment = ["--balls", "4", "--pots", "2,2"]
    args = parse_arguments(["--debug", "analyze", *experiment])
    assert args.debug is True
    args = parse_arguments(["analyze", "--debug", *experiment])
    assert args.debug is True
    args = parse_arguments(["analyze", *experiment, "--debug"])
    assert args.debug is True
    args = parse_arguments(["analyze", *experiment])
    assert args.debug is False

    for argv in [["--version"],
                 ["--version", "analyze"],
                 ["analyze", "--version"]]:
        with pytest.raises(SystemExit) as excinfo:
            parse_arguments(argv)
        assert excinfo.value.code == 0
        out, _ = capsys.readouterr()
        assert out == f"{__version__}\n"

def test_build_config_defaults():
    """Unset options fall back to defaults."""
    config = build_config(parse_arguments(["analyze", "--balls", "12",
                                           "--pots", "2,3"]), environ={})
    assert config == RunConfig(command="analyze", ball_count=12,
                               pot_counts=(2, 3),
                               budget=int(DEFAULTS["budget"]))
    assert config.method is None
    assert config.output_format == "json"

def test_build_config_flags():
    """Every flag lands in the run configuration."""
    args = parse_arguments(["simulate", "--balls", "8", "--pots", "2,2,2",
                            "--method", "second", "--seed", "7",
                            "--trials", "50", "--target", "2,1,2",
                            "--format", "csv", "--output", "out.csv"])
    config = build_config(args, environ={BUDGET_ENV_VAR: "5"})
    assert config.method is Method.SECOND_WAY
    assert (config.seed, config.trials, config.budget) == (7, 50, 5)
    assert config.target_label == (2, 1, 2)
    assert (config.output_format, config.output_path) == ("csv", "out.csv")

def test_config_file_precedence(tmp_path):
    """Flags beat the config file, which beats the environment."""
    path = tmp_path / "run.conf"
    path.write_text("balls = 10\npots = 2,2,2\nbudget = 99\n", encoding="utf8")
    args = parse_arguments(["enumerate", "--config", str(path),
                            "--balls", "8"])
    config = build_config(args, environ={BUDGET_ENV_VAR: "5"})
    assert config.ball_count == 8
    assert config.pot_counts == (2, 2, 2)
    assert config.budget == 99
    args = parse_arguments(["enumerate", "--config", str(path),
                            "--budget", "7"])
    assert build_config(args, environ={}).budget == 7

@pytest.mark.parametrize("text", [
    "balls = 8\npots = 2,2\ncolour = red\n",
    "balls = 8\npots = 2,2\nmethod = third\n",
    "balls = 8\npots = 2,2\nformat = xml\n",
    "balls = eight\npots = 2,2\n",
    "pots = 2,2\n",
    "balls = 8\npots = 2,,x\n",
    "no key value pairs here\n",
    ])
def test_bad_config_file(tmp_path, text):
    """Unusable configuration is a flag error."""
    path = tmp_path / "run.conf"
    path.write_text(text, encoding="utf8")
    with pytest.raises(MalformedFlagsError):
        build_config(parse_arguments(["analyze", "--config", str(path)]),
                     environ={})

def test_missing_config_file(tmp_path):
    """A config path that does not exist is a flag error."""
    with pytest.raises(MalformedFlagsError):
        build_config(parse_arguments(["analyze", "--config",
                                      str(tmp_path / "missing.conf")]),
                     environ={})

def test_compare_json(capsys):
    """Exact variances of both methods as reduced num/den strings."""
    code, out, _ = run_main(capsys, "compare", "--balls", "8",
                            "--pots", "2,2,2", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["command"] == "compare"
    first, second = document["reports"]
    assert first["method"] == "FIRST_WAY"
    assert (first["variance_exact"]["num"],
            first["variance_exact"]["den"]) == ("27", "49")
    assert second["method"] == "SECOND_WAY"
    assert (second["variance_exact"]["num"],
            second["variance_exact"]["den"]) == ("1", "3")

def test_compare_ignores_method(capsys):
    """compare always covers both methods."""
    code, out, err = run_main(capsys, "compare", "--balls", "4",
                              "--pots", "2,2", "--method", "first")
    assert code == 0
    assert len(json.loads(out)["reports"]) == 2
    assert "ignored" in err

def test_indivisible(capsys):
    """Validation errors exit with 2."""
    code, out, err = run_main(capsys, "analyze", "--balls", "10",
                              "--pots", "2,3")
    assert code == 2
    assert out == ""
    error = error_object(err)
    assert error["code"] == "INDIVISIBLE"
    assert error["detail"]["modulus"] == "6"

def test_enumerate(capsys):
    """Oracle pmf and moments."""
    code, out, _ = run_main(capsys, "enumerate", "--balls", "4",
                            "--pots", "2,2", "--method", "first")
    assert code == 0
    document = json.loads(out)
    assert {k: (v["num"], v["den"]) for k, v in document["pmf"].items()} \
        == {"0": ("1", "6"), "1": ("2", "3"), "2": ("1", "6")}
    assert (document["mean"]["num"], document["mean"]["den"]) == ("1", "1")
    assert (document["variance"]["num"],
            document["variance"]["den"]) == ("1", "3")
    assert document["diff"] == {}

def test_budget(capsys, monkeypatch):
    """Too many outcomes exit with 3; the environment sets the budget."""
    code, _, err = run_main(capsys, "enumerate", "--balls", "12",
                            "--pots", "2,3", "--method", "first",
                            "--budget", "1000000")
    assert code == 3
    assert error_object(err)["detail"]["outcome_count"] == "32016600"
    monkeypatch.setenv(BUDGET_ENV_VAR, "10")
    code, _, _ = run_main(capsys, "enumerate", "--balls", "4",
                          "--pots", "2,2", "--method", "first")
    assert code == 3
    code, _, _ = run_main(capsys, "enumerate", "--balls", "4",
                          "--pots", "2,2", "--method", "first",
                          "--budget", "36")
    assert code == 0

@pytest.mark.parametrize("argv", [
    ["analyze", "--balls", "x", "--pots", "2"],
    ["analyze", "--pots", "2,2"],
    ["analyze", "--balls", "4"],
    ["analyze", "--balls", "4", "--pots", "2,2", "--method", "third"],
    ["frobnicate"],
    [],
    ["simulate", "--balls", "4", "--pots", "2,2", "--trials", "many"],
    ["analyze", "--balls", "4", "--pots", "2,,2", "--method", "first"],
    ["analyze", "--balls", "4", "--pots", "2,2,", "--method", "first"],
    ["analyze", "--balls", "4", "--pots", ",2,2", "--method", "first"],
    ["analyze", "--balls", "4", "--pots", "2,2", "--target", "1,"],
    ])
def test_malformed_flags(capsys, argv):
    """Unusable flags exit with 4."""
    code, _, err = run_main(capsys, *argv)
    assert code == 4
    assert error_object(err)["code"] == "MALFORMED_FLAGS"

def test_bad_target(capsys):
    """Targets outside the label space are validation errors."""
    code, _, err = run_main(capsys, "analyze", "--balls", "4",
                            "--pots", "2,2", "--target", "3,1")
    assert code == 2
    assert error_object(err)["code"] == "BAD_LABEL"

def test_analyze_csv(capsys):
    """CSV has one row per (method, field)."""
    code, out, _ = run_main(capsys, "analyze", "--balls", "4",
                            "--pots", "2,2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "method,field,num,den,decimal"
    assert "FIRST_WAY,variance_exact,1,3,0.333333333333333" in lines
    assert "SECOND_WAY,variance_exact,0,1,0" in lines

def test_simulate(capsys):
    """One method gives one simulation; both give a paired report."""
    code, out, _ = run_main(capsys, "simulate", "--balls", "60",
                            "--pots", "3,4", "--method", "second",
                            "--trials", "100", "--seed", "3")
    assert code == 0
    document = json.loads(out)
    assert document["empirical_variance"] == 0
    assert (document["trials"], document["seed"]) == ("100", "3")
    assert document["min_count"] == document["max_count"] == "5"
    code, out, _ = run_main(capsys, "simulate", "--balls", "4",
                            "--pots", "2,2", "--trials", "100")
    assert code == 0
    checks = json.loads(out)["checks"]
    assert [check["method"] for check in checks] == ["FIRST_WAY",
                                                     "SECOND_WAY"]
    assert checks[1]["verdict"] == "PASS"

def test_output_file(tmp_path, capsys):
    """Reports go to --output when given."""
    path = tmp_path / "report.json"
    config = build_config(parse_arguments(["analyze", "--balls", "6",
                                           "--pots", "1,1", "--method",
                                           "first", "--output", str(path)]),
                          environ={})
    assert run(config) == 0
    assert capsys.readouterr().out == ""
    document = json.loads(path.read_text(encoding="utf8"))
    assert document["average"]["num"] == "6"
    assert document["variance_exact"]["num"] == "0"
    bad = build_config(parse_arguments(["analyze", "--balls", "6",
                                        "--pots", "1,1", "--output",
                                        str(tmp_path / "no" / "such.json")]),
                       environ={})
    assert run(bad) == 1
