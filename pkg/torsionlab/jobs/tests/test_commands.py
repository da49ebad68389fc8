import importlib
import json
import os
import sys
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import CommandError, call_command

import torsionlab
from torsionlab.__main__ import main
from torsionlab.jobs.parser import parse_job_file
from torsionlab.jobs.reports import parse_report
from torsionlab.jobs.runner import JobRunner
from torsionlab.ring.laurent import unit_equivalent

FIXTURES = Path(torsionlab.__file__).parent / "fixtures"


def compute(name, *args) -> str:
    out = StringIO()
    call_command("compute", str(FIXTURES / name), *args, stdout=out)
    return out.getvalue()


class TestComputeCommand:
    def test_figure_eight_text(self):
        output = compute("fig8.tors", "--task", "wada")

        assert output.startswith("[wada] wada: ok\n")
        assert "(t - 1)·(t^2 - 5t + 1)  [up to ± t^m]" in output

    def test_whitehead_derivative(self):
        output = compute("whitehead_point.tors", "--task", "derivative")

        assert "  T_lambda = 8 - 8i  [up to sign]" in output

    def test_repeated_task_option(self):
        output = compute("trefoil.tors", "--task", "abelian_check", "--task", "alexander")

        assert output.index("[abelian_check]") < output.index("[alexander]")
        assert "Δ_K = t^2 - t + 1" in output

    def test_json(self):
        output = compute("fig8.tors", "--task", "wada", "--task", "covering", "--format", "json", "--seed", "4")
        job = parse_job_file(FIXTURES / "fig8.tors")
        expected = JobRunner(job).run(["wada", "covering"])

        report = parse_report(output)

        assert report["seed"] == 4
        assert [task["value"] for task in report["tasks"]] == [result.value for result in expected]

    def test_whole_job_runs_the_triple_cover(self):
        report = parse_report(compute("fig8.tors", "--format", "json"))
        tasks = {task["task"]: task for task in report["tasks"]}

        assert [task["status"] for task in report["tasks"]] == ["ok"] * 8
        value = tasks["triple_cover"]["value"]
        s = value.ring.gen("s")
        assert unit_equivalent(value, -(s - 1) * (s**2 - 110 * s + 1)) is not None

    def test_json_is_reproducible(self):
        assert compute("torus.tors", "--format", "json") == compute("torus.tors", "--format", "json")

    def test_format_from_settings(self, settings):
        settings.TORSIONLAB = dict(settings.TORSIONLAB, FORMAT="json", SEED=9)

        document = json.loads(compute("trefoil.tors", "--task", "alexander"))

        assert document["seed"] == 9
        assert document["tasks"][0]["kind"] == "alexander"

    def test_unfactored_reports(self, settings):
        settings.TORSIONLAB = dict(settings.TORSIONLAB, FACTOR_REPORTS=False)

        output = compute("fig8_fibered.tors", "--task", "fibered")

        assert "Δ = -t^3 + 6t^2 - 6t + 1  [exact]" in output

    def test_output_file(self, tmp_path):
        target = tmp_path / "report.txt"

        output = compute("trefoil.tors", "--task", "alexander", "--output", str(target))

        assert output == ""
        assert target.read_text(encoding="utf-8").startswith("[alexander] alexander: ok")

    def test_check_invariants(self):
        output = compute("fig8.tors", "--task", "derivative", "--check-invariants", "--format", "json")

        checks = json.loads(output)["tasks"][0]["details"]["checks"]
        assert [check["holds"] for check in checks] == [True]

    def test_empty_job(self, tmp_path):
        path = tmp_path / "empty.tors"
        path.write_text("# no tasks\nvars t ;\n", encoding="utf-8")
        out = StringIO()

        call_command("compute", str(path), stdout=out)

        assert out.getvalue() == ""


class TestComputeErrors:
    def test_unknown_task(self):
        with pytest.raises(CommandError, match="unknown task 'nosuch'"):
            compute("fig8.tors", "--task", "nosuch")

    def test_missing_file(self, tmp_path):
        with pytest.raises(CommandError, match="cannot read"):
            call_command("compute", str(tmp_path / "missing.tors"), stdout=StringIO())

    def test_parse_error(self, tmp_path):
        path = tmp_path / "broken.tors"
        path.write_text("vars t ;\ngens a ;\nphi a = 2*t ;\n", encoding="utf-8")

        with pytest.raises(CommandError, match="line 3, column 1: "):
            call_command("compute", str(path), stdout=StringIO())

    def test_failed_task_is_reported_then_raised(self):
        out = StringIO()

        with pytest.raises(CommandError, match=r"1 task\(s\) did not succeed: wada"):
            call_command("compute", str(FIXTURES / "trefoil.tors"), "--task", "wada", stdout=out)

        assert "[wada] wada: error" in out.getvalue()

    def test_unexpected_error_is_reported(self, monkeypatch):
        def explode(runner, spec):
            raise ZeroDivisionError("division by zero")

        monkeypatch.setattr(JobRunner, "run_alexander", explode)
        out = StringIO()

        with pytest.raises(CommandError, match=r"did not succeed: alexander"):
            call_command("compute", str(FIXTURES / "trefoil.tors"), stdout=out)

        assert "  error: task alexander: ZeroDivisionError: division by zero" in out.getvalue()
        assert "[abelian_check] abelian_check: error" not in out.getvalue()
        assert "[abelian_check]" in out.getvalue()

    def test_unwritable_output(self, tmp_path):
        with pytest.raises(CommandError, match="cannot write"):
            compute("trefoil.tors", "--task", "alexander", "--output", str(tmp_path / "no" / "report.txt"))


class TestEntryPoint:
    def test_defaults_to_runtime_settings(self, monkeypatch):
        calls = []
        monkeypatch.delenv("DJANGO_SETTINGS_MODULE", raising=False)
        monkeypatch.setattr("django.core.management.execute_from_command_line", calls.append)

        main()

        assert os.environ["DJANGO_SETTINGS_MODULE"] == "config.settings.cli"
        assert calls == [sys.argv]

    def test_runtime_settings_need_no_development_apps(self):
        cli = importlib.import_module("config.settings.cli")

        assert "django_extensions" not in cli.INSTALLED_APPS
        assert "torsionlab.jobs.apps.JobsConfig" in cli.INSTALLED_APPS
        assert cli.SECRET_KEY
