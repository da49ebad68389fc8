from pathlib import Path

import pytest

import torsionlab
from torsionlab.complex.chain import Ambiguity
from torsionlab.exceptions import JobError
from torsionlab.jobs.parser import TaskSpec, parse_job, parse_job_file
from torsionlab.jobs.runner import SIGN_ONLY, JobRunner, TaskResult, parse_ints
from torsionlab.ring.laurent import LaurentPoly, LaurentRing, unit_equivalent
from torsionlab.ring.tests.factories import GAUSSIAN
from torsionlab.torsion.checks import CheckReport

FIXTURES = Path(torsionlab.__file__).parent / "fixtures"


def runner_for(name: str, **kwargs) -> JobRunner:
    return JobRunner(parse_job_file(FIXTURES / name), **kwargs)


def figure_eight_adjoint(ring: LaurentRing) -> LaurentPoly:
    t = ring.gen("t")
    return -(t - 1) * (t**2 - 5 * t + 1)


class TestSelection:
    def test_all_tasks_in_order(self):
        runner = runner_for("trefoil.tors")

        assert [spec.name for spec in runner.select()] == ["alexander", "abelian_check"]

    def test_named_tasks(self):
        runner = runner_for("fig8.tors")

        assert [spec.name for spec in runner.select(["covering", "wada"])] == ["covering", "wada"]

    def test_undeclared_kind_runs_with_defaults(self):
        runner = runner_for("fig8.tors")

        assert runner.select(["columns"]) == [TaskSpec("columns", "columns")]

    def test_unknown_task(self):
        with pytest.raises(JobError, match="unknown task 'nosuch'"):
            runner_for("fig8.tors").select(["nosuch"])


class TestFigureEight:
    def test_wada(self):
        result = runner_for("fig8.tors").run(["wada"])[0]

        assert result.ok
        assert result.label == "Δ"
        assert result.ambiguity == Ambiguity.unit()
        assert unit_equivalent(result.value, figure_eight_adjoint(result.value.ring)) is not None

    def test_alexander(self):
        result = runner_for("fig8.tors").run(["alexander"])[0]
        t = result.value.ring.gen("t")

        assert result.value == t**2 - 3 * t + 1

    def test_validate(self):
        result = runner_for("fig8.tors").run(["validate"])[0]

        assert result.ok
        assert result.details["failures"] == []

    def test_reciprocity(self):
        result = runner_for("fig8.tors").run(["reciprocity"])[0]

        assert result.ok
        assert result.details["observed_sign"] == -1
        assert result.details["sign_matches"] is True
        assert "sign mismatch" not in result.notes

    def test_derivative(self):
        result = runner_for("fig8.tors").run(["derivative"])[0]

        assert result.value in (3, -3)
        assert result.ambiguity == SIGN_ONLY
        assert result.details["a_exponents"] == [1]

    def test_double_cover(self):
        result = runner_for("fig8.tors").run(["covering"])[0]
        s = result.value.ring.gen("s")

        assert unit_equivalent(result.value, -(s - 1) * (s**2 - 23 * s + 1)) is not None
        assert result.details["order"] == 2

    def test_torsion_is_computed_once(self):
        runner = runner_for("fig8.tors")

        runner.run(["covering", "derivative", "reciprocity"])

        assert runner._torsion is not None
        assert set(runner.results) == {"covering", "derivative", "reciprocity"}

    def test_abelian_check(self):
        result = runner_for("fig8.tors").run(["abelian"])[0]

        assert result.ok
        assert result.details["holds"] is True

    def test_check_invariants(self):
        result = runner_for("fig8.tors", check_invariants=True).run(["wada"])[0]

        assert result.ok
        assert len(result.details["checks"]) == 2


class TestFibered:
    def test_fibered_value(self):
        result = runner_for("fig8_fibered.tors").run(["fibered"])[0]

        assert result.value == figure_eight_adjoint(result.value.ring)
        assert result.ambiguity == Ambiguity.exact()

    def test_cover_reads_its_source(self):
        runner = runner_for("fig8_fibered.tors")

        result = runner.run(["fibered_double_cover"])[0]
        s = result.value.ring.gen("s")

        assert "fibered" in runner.results
        assert unit_equivalent(result.value, -(s - 1) * (s**2 - 23 * s + 1)) is not None

    def test_alexander_agrees_with_the_knot_diagram(self):
        result = runner_for("fig8_fibered.tors").run(["alexander"])[0]
        t = result.value.ring.gen("t")

        assert result.value == t**2 - 3 * t + 1


class TestWhitehead:
    def test_point(self):
        results = runner_for("whitehead_point.tors").run()

        assert [result.status for result in results] == ["ok"] * 4
        derivative = results[-1]
        expected = GAUSSIAN.scalar("8 - 8*i")
        assert derivative.value in (expected, -expected)

    def test_reciprocity_mismatch_is_reported(self):
        result = runner_for("whitehead_point.tors").run(["reciprocity"])[0]

        assert result.ok
        assert result.details["observed_sign"] == 1
        assert result.details["expected_sign"] == -1
        assert "sign mismatch" in result.notes

    def test_second_point(self):
        result = runner_for("whitehead_point2.tors").run(["derivative"])[0]

        assert result.value in (16, -16)

    def test_parameters(self):
        result = runner_for("whitehead_param.tors").run()[0]

        assert result.ok
        assert result.value is not None


class TestTorus:
    def test_wada_is_a_unit(self):
        result = runner_for("torus.tors").run(["wada"])[0]

        assert result.value.is_monomial

    def test_complex_torsion_records_the_complex(self):
        result = runner_for("torus.tors").run(["complex_torsion"])[0]

        assert result.ok
        assert result.details["dims"] == [3, 6, 3]
        assert [len(d) for d in result.details["boundaries"]] == [6, 3]

    def test_multiplicativity(self):
        result = runner_for("torus.tors", seed=3).run(["multiplicativity"])[0]

        assert result.ok
        assert result.details == {"trials": 10, "failures": [], "seed": 3}


class TestErrors:
    def test_missing_representation(self):
        result = runner_for("trefoil.tors").run(["wada"])[0]

        assert result.status == "error"
        assert result.error.startswith("task wada: ")
        assert "rho" in result.error

    def test_derivative_of_a_polynomial_off_the_job(self):
        job = parse_job("vars t ;\ntask derivative { poly = t^2 - 3*t + 1 ; }")

        result = JobRunner(job).run()[0]

        assert result.status == "error"
        assert "does not divide" in result.error

    def test_unexpected_errors_stay_inside_their_task(self, monkeypatch):
        def explode(runner, spec):
            raise ValueError("bad generator")

        monkeypatch.setattr(JobRunner, "run_alexander", explode)

        alexander, abelian = runner_for("trefoil.tors").run()

        assert alexander.status == "error"
        assert alexander.error == "task alexander: ValueError: bad generator"
        assert abelian.error is None

    def test_naturality_needs_exponents(self):
        job = parse_job("vars t1 t2 ;\ntask naturality { poly = t1 - t2 ; }")

        result = JobRunner(job).run()[0]

        assert result.status == "error"
        assert "exponents" in result.error

    def test_naturality_substitutes(self):
        job = parse_job("vars t1 t2 ;\ntask naturality { poly = t1 - t2 ; exponents = 1 2 ; }")

        result = JobRunner(job).run()[0]
        t = result.value.ring.gen("t")

        assert result.ok
        assert unit_equivalent(result.value, t - t**2) is not None


def test_attach_fails_the_task():
    result = TaskResult("x", "columns")

    result.attach(CheckReport("columns", True), CheckReport("conjugation", False))

    assert result.status == "failed"
    assert [check["check"] for check in result.details["checks"]] == ["columns", "conjugation"]


def test_parse_ints():
    assert parse_ints(["1", "-2"]) == (1, -2)
    with pytest.raises(JobError):
        parse_ints(["x"])
