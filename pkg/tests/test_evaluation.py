"""Tests for run records, report writers, the commands and the CLI."""

import json
import math

import pytest
import yaml
from pydantic import ValidationError

from src.core.sampling import RandomStream
from src.evaluation.conjecture import (
    ConjectureSettings,
    draw_resource,
    examine_resource,
)
from src.evaluation.evaluator import BenchmarkEvaluator, CheckSpec
from src.evaluation.records import CheckResult, ConjectureSample, RunConfig
from src.evaluation.reporting import csv_header_line, format_value, summary_path, write_csv
from src.evaluation.scan import load_scan_grids
from src.evaluation.suites import _filter_checks
from src.metrics import closed_forms as cf
from src.states.factory import iso_mixture, named_state
from src.ui.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, CLI, build_parser, main


def make_run(tmp_path, command="scan", **kwargs):
    fields = {
        "command": command,
        "seed": 42,
        "samples": 1,
        "grid_points": 3,
        "tolerance": 1e-9,
        "output_path": str(tmp_path / f"{command}.json"),
    }
    fields.update(kwargs)
    return RunConfig(**fields)


@pytest.fixture
def config_file(config, tmp_path):
    path = tmp_path / "config.yaml"
    with open(path, "w") as f:
        yaml.safe_dump(config, f)
    return str(path)


# Records


def test_run_config_validation(tmp_path):
    run = make_run(tmp_path, family="iso", workers=3)
    assert "workers" not in run.public()
    with pytest.raises(ValidationError):
        make_run(tmp_path, seed=-1)
    with pytest.raises(ValidationError):
        make_run(tmp_path, seed=2**64)
    with pytest.raises(ValidationError):
        make_run(tmp_path, epsilon=2.0)
    with pytest.raises(ValidationError):
        make_run(tmp_path, command="teleport")


def test_check_result_rules():
    ok = CheckResult.compare("c", 1.0, 1.0 + 1e-11, 1e-10, "anchor")
    assert ok.passed
    assert not CheckResult.compare("c", 1.0, float("nan"), 1e-10, "anchor").passed
    with pytest.raises(ValidationError):
        CheckResult(
            check_id="c",
            expected=0.0,
            computed=1.0,
            tolerance=0.1,
            passed=True,
            paper_anchor="a",
        )
    errored = CheckResult.errored("c", 0.0, 0.1, "anchor", RuntimeError("boom"))
    assert not errored.passed
    assert errored.computed is None
    assert "boom" in errored.note


def test_conjecture_sample_requires_gsf_max_above_gsf():
    with pytest.raises(ValidationError):
        ConjectureSample(
            sample_index=1,
            resource_descriptor="x",
            stream_id=1,
            gsf=0.3,
            gsf_max=0.2,
            max_output_negativity=0.0,
            epsilon_at_max=0.0,
            below_threshold=True,
        )


# Reporting


def test_format_value():
    assert format_value(None) == ""
    assert format_value(True) == "true"
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(3) == "3"


def test_csv_is_byte_stable(tmp_path):
    rows = [{"a": 0.1, "b": None}, {"a": 2.0, "b": False}]
    first, second = tmp_path / "one.csv", tmp_path / "two.csv"
    write_csv(first, ["a", "b"], rows, seed=7)
    write_csv(second, ["a", "b"], rows, seed=7)
    assert first.read_bytes() == second.read_bytes()
    lines = first.read_text().splitlines()
    assert lines[0] == csv_header_line(7)
    assert lines[0].startswith("# qteleport-lab v0.1.0 rng=")
    assert lines[1:] == ["a,b", "0.10000000000000001,", "2,false"]


def test_summary_path(tmp_path):
    assert summary_path(tmp_path / "scan_iso.csv").name == "scan_iso_summary.txt"


# Evaluator


def test_run_checks_records_errors(config, tmp_path):
    evaluator = BenchmarkEvaluator(config, make_run(tmp_path))

    def broken() -> float:
        raise RuntimeError("no value")

    results = evaluator.run_checks(
        [
            CheckSpec("good", 1.0, 1e-12, "one", lambda: 1.0),
            CheckSpec("bad", 1.0, 1e-12, "one", broken),
            CheckSpec("info", 1.0, 1e-12, "one", lambda: 2.0, informational=True),
        ]
    )
    assert [r.passed for r in results] == [True, False, False]
    assert evaluator.exit_status() == EXIT_CHECK_FAILED


def test_informational_checks_do_not_fail_a_run(config, tmp_path):
    evaluator = BenchmarkEvaluator(config, make_run(tmp_path))
    evaluator.run_checks([CheckSpec("info", 1.0, 1e-12, "one", lambda: 2.0, informational=True)])
    assert evaluator.exit_status() == EXIT_OK


def test_map_tasks_keeps_order(config, tmp_path):
    evaluator = BenchmarkEvaluator(config, make_run(tmp_path, workers=4))
    assert evaluator.map_tasks(lambda x: x * x, range(10)) == [x * x for x in range(10)]


# Scan


def test_iso_scan_matches_closed_form(config, tmp_path):
    run = make_run(tmp_path, family="iso", grid_points=6, epsilon=math.pi / 4)
    evaluator = BenchmarkEvaluator(config, run)
    report = evaluator.evaluate()

    assert evaluator.exit_status() == EXIT_OK
    assert report["summary"]["rows"] == 6
    for row in report["rows"]:
        assert row["negativity"] == pytest.approx(
            cf.iso_negativity(row["parameter_value"], math.pi / 4), abs=1e-10
        )
        assert row["vanishing_threshold"] == pytest.approx(1 / 3)
    assert summary_path(tmp_path / "scan.json").exists()


def test_ghz_scan_reports_range_of_printed_form(config, tmp_path):
    run = make_run(tmp_path, family="ghz", grid_points=5, output_path=str(tmp_path / "g.csv"), format="csv")
    evaluator = BenchmarkEvaluator(config, run)
    report = evaluator.evaluate()

    assert evaluator.exit_status() == EXIT_OK
    ids = {c["check_id"]: c for c in report["checks"]}
    assert ids["scan_ghz_residual"]["passed"]
    assert ids["scan_ghz_residual_outside_range"]["informational"]
    text = (tmp_path / "g.csv").read_text().splitlines()
    assert text[0] == csv_header_line(42)
    assert text[1].startswith(
        "family,parameter_value,epsilon,gsf,fidelity,negativity,analytic_negativity,residual,"
    )


def test_scan_rejects_invalid_range(config, tmp_path):
    config["scan"]["families"] = {"iso": {"range": [0.5, 1.5]}}
    evaluator = BenchmarkEvaluator(config, make_run(tmp_path, family="iso"))
    with pytest.raises(ValueError, match="q range"):
        evaluator.evaluate()


def test_scan_grid_overrides(config):
    config["scan"]["epsilons"] = [0.5]
    config["scan"]["families"] = {"w": {"theta": 0.1}}
    grids = load_scan_grids(config)
    assert grids["epsilons"] == [0.5]
    assert grids["families"]["w"]["theta"] == 0.1
    assert grids["families"]["w"]["parameter"] == "phi"


def test_scan_output_does_not_depend_on_workers(config, tmp_path):
    reports = []
    out = tmp_path / "w.json"
    for workers in (1, 3):
        run = make_run(tmp_path, family="w", grid_points=4, workers=workers, output_path=str(out))
        BenchmarkEvaluator(config, run).evaluate()
        reports.append(out.read_bytes())
    assert reports[0] == reports[1]


# Conjecture


def test_smolin_is_the_boundary_case(fast_settings):
    sample = examine_resource(
        named_state("Smolin"),
        "smolin(0, 0)",
        0,
        RandomStream(seed=42),
        fast_settings,
        ConjectureSettings(epsilon_points=7),
        1e-8,
    )
    assert sample.gsf == pytest.approx(0.25, abs=1e-9)
    assert sample.boundary
    assert not sample.counterexample
    assert sample.max_output_negativity == pytest.approx(1.0, abs=1e-10)
    assert sample.epsilon_at_max == pytest.approx(math.pi / 4)


def test_weak_iso_mixture_teleports_no_entanglement(fast_settings):
    sample = examine_resource(
        iso_mixture(0.3, -0.2, 0.1),
        "iso(q=0.1)",
        1,
        RandomStream(seed=42, stream_id=1),
        fast_settings,
        ConjectureSettings(epsilon_points=7, unitary_maxfev=300),
        1e-8,
    )
    assert sample.gsf == pytest.approx(cf.iso_gsf(0.1), abs=1e-9)
    assert sample.below_threshold
    assert not sample.boundary
    assert sample.max_output_negativity == pytest.approx(0.0, abs=1e-12)
    assert sample.min_entangled_input is None
    assert not sample.counterexample


@pytest.mark.parametrize("sampler", ["ginibre", "ups_mixture", "smolin_mixture"])
def test_draw_resource_is_reproducible(sampler):
    first, label = draw_resource(sampler, RandomStream(seed=1, stream_id=5))
    second, _ = draw_resource(sampler, RandomStream(seed=1, stream_id=5))
    assert (first == second).all()
    assert label.startswith(sampler)
    with pytest.raises(ValueError):
        draw_resource("uniform", RandomStream(seed=1))


def test_conjecture_run(config, tmp_path):
    run = make_run(tmp_path, command="conjecture", sampler="smolin_mixture", samples=2, tolerance=1e-8)
    evaluator = BenchmarkEvaluator(config, run)
    report = evaluator.evaluate()

    assert len(report["samples"]) == 3
    assert report["samples"][0]["resource_descriptor"] == "smolin(0, 0)"
    assert report["summary"]["samples"] == 2
    ids = {c["check_id"]: c for c in report["checks"]}
    assert ids["smolin_boundary_tagged"]["passed"]
    assert ids["counterexamples"]["informational"]


# Oracle check


def test_oracle_check_passes(config, tmp_path):
    run = make_run(tmp_path, command="oracle-check", samples=3, tolerance=1e-10)
    evaluator = BenchmarkEvaluator(config, run)
    report = evaluator.evaluate()

    assert evaluator.exit_status() == EXIT_OK, report["summary"]
    assert report["summary"]["failing_streams"] == ""
    ids = {c["check_id"] for c in report["checks"]}
    assert "oracle_vs_bichannel[2]" in ids
    assert "trace_identity_printed_daggers" in ids


@pytest.mark.slow
def test_reproduce_passes(config, tmp_path):
    run = make_run(tmp_path, command="reproduce", samples=4000, grid_points=5, tolerance=1e-10)
    evaluator = BenchmarkEvaluator(config, run)
    report = evaluator.evaluate()
    failed = [c["check_id"] for c in report["checks"] if not c["passed"] and not c["informational"]]
    assert failed == []


def test_filter_checks_grade_the_derived_f3(config, tmp_path):
    evaluator = BenchmarkEvaluator(config, make_run(tmp_path, command="reproduce"))
    results = {r.check_id: r for r in evaluator.run_checks(_filter_checks())}
    graded = [r for r in results.values() if not r.informational]
    assert all(r.passed for r in graded), [r.check_id for r in graded if not r.passed]
    assert results["filter_f3_closed_form"].passed
    assert results["filter_f3_off_origin"].computed == pytest.approx(5 / 16, abs=1e-12)
    printed = results["filter_f3_printed_form"]
    assert printed.informational
    assert not printed.passed
    assert printed.paper_anchor


# CLI


def test_cli_scan_exit_ok(config_file, tmp_path):
    out = tmp_path / "cli_scan.csv"
    status = main(
        [
            "scan", "--config", config_file, "--family", "iso", "--grid", "3",
            "--epsilon", "0.7853981633974483", "--format", "csv", "--out", str(out),
        ]
    )
    assert status == EXIT_OK
    assert out.exists()
    assert (tmp_path / "cli_scan_summary.txt").read_text().startswith("SCAN SUMMARY")


def test_cli_usage_errors(config_file):
    assert main(["scan", "--config", config_file, "--family", "iso", "--seed", "-3"]) == EXIT_USAGE
    assert main(["scan", "--config", config_file, "--family", "iso", "--epsilon", "3.0"]) == EXIT_USAGE
    assert main(["reproduce", "--config", "missing.yaml"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["scan", "--config", config_file, "--family", "bell"])
    assert info.value.code == EXIT_USAGE


def test_cli_seed_precedence(config_file, monkeypatch):
    cli = CLI(config_path=config_file)
    parser = build_parser()

    assert cli.build_run_config(parser.parse_args(["reproduce"])).seed == 42
    monkeypatch.setenv("QTELEPORT_SEED", "7")
    assert cli.build_run_config(parser.parse_args(["reproduce"])).seed == 7
    assert cli.build_run_config(parser.parse_args(["reproduce", "--seed", "9"])).seed == 9


def test_cli_default_output_path(config_file, config):
    cli = CLI(config_path=config_file)
    args = build_parser().parse_args(["conjecture", "--sampler", "ups_mixture"])
    run = cli.build_run_config(args)
    assert run.output_path.endswith("conjecture_ups_mixture.json")
    assert run.output_path.startswith(config["outputs"]["directory"])
    assert run.samples == config["runs"]["conjecture"]["samples"]


def test_reports_are_valid_json(config, tmp_path):
    run = make_run(tmp_path, family="gs", grid_points=3)
    BenchmarkEvaluator(config, run).evaluate()
    with open(tmp_path / "scan.json") as f:
        report = json.load(f)
    assert report["config"]["family"] == "gs"
    assert set(report) == {"config", "checks", "summary", "rows"}
    assert "paper_anchor" in report["checks"][0]
    assert all(c["paper_anchor"] for c in report["checks"])
