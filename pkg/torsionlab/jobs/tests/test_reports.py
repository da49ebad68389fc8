from pathlib import Path

import pytest

import torsionlab
from torsionlab.complex.chain import Ambiguity
from torsionlab.exceptions import JobError
from torsionlab.jobs.parser import parse_job_file
from torsionlab.jobs.reports import (
    REPORT_FORMAT,
    build_document,
    decode_value,
    encode_value,
    format_polynomial,
    format_value,
    parse_report,
    positive_representative,
    render_json,
    render_text,
    tidy,
)
from torsionlab.jobs.runner import SIGN_ONLY, JobRunner, TaskResult
from torsionlab.ring.laurent import LaurentRing
from torsionlab.ring.tests.factories import GAUSSIAN
from torsionlab.torsion.tests.factories import QQ

FIXTURES = Path(torsionlab.__file__).parent / "fixtures"
QT = LaurentRing(("t",), QQ)


@pytest.fixture
def t():
    return QT.gen("t")


class TestFormatting:
    def test_tidy(self):
        assert tidy("t**2 - 5*t + 1") == "t^2 - 5t + 1"

    def test_factored(self, t):
        assert format_polynomial(-(t - 1) * (t**2 - 5 * t + 1)) == "-(t - 1)·(t^2 - 5t + 1)"

    def test_repeated_factor(self, t):
        assert format_polynomial(2 * (t - 1) ** 2) == "2·(t - 1)^2"

    def test_unfactored(self, t):
        assert format_polynomial(t**2 - 5 * t + 1, factor=False) == "t^2 - 5t + 1"

    def test_shift_is_kept_when_known(self, t):
        assert format_polynomial(t**-1 * (t - 1)) == "t^-1·(t - 1)"

    def test_shift_is_dropped_up_to_units(self, t):
        assert format_value(t**-3 * (t - 1), Ambiguity.unit()) == "t - 1"

    def test_zero(self):
        assert format_polynomial(QT.zero) == "0"

    def test_constant(self):
        assert format_polynomial(QT.constant(-3)) == "-3"

    def test_rational_function(self, t):
        value = QT.fraction_field.new(t + 1, t - 1)

        assert format_value(value) == "(t + 1) / (t - 1)"

    def test_irrational_coefficients_are_not_factored(self):
        ring = LaurentRing(("t",), GAUSSIAN)

        assert format_polynomial(ring.parse("t - i")) == "t - i"

    @pytest.mark.parametrize("text", ["8 - 8*i", "-8 + 8*i", "-8*i", "8*i"])
    def test_positive_representative(self, text):
        value = positive_representative(GAUSSIAN.scalar(text))

        assert value in (GAUSSIAN.scalar("8 - 8*i"), GAUSSIAN.scalar("8*i"))

    def test_scalar_up_to_sign(self):
        assert format_value(GAUSSIAN.scalar("-8 + 8*i"), SIGN_ONLY) == "8 - 8i"

    def test_exact_scalar_keeps_its_sign(self):
        assert format_value(QQ.scalar(-3), Ambiguity.exact()) == "-3"


class TestText:
    def test_sections(self, t):
        results = [
            TaskResult("wada", "wada", value=-(t - 1), label="Δ", ambiguity=Ambiguity.unit()),
            TaskResult("derivative", "derivative", value=QQ.scalar(-3), label="T_lambda", ambiguity=SIGN_ONLY),
            TaskResult("validate", "validate", "failed", details={"checks": 2, "failures": ["relator 1"]}),
            TaskResult("columns", "columns", "error", error="task columns: the job declares no rho"),
        ]

        assert render_text(results).splitlines() == [
            "[wada] wada: ok",
            "  Δ = -(t - 1)  [up to ± t^m]",
            "[derivative] derivative: ok",
            "  T_lambda = 3  [up to sign]",
            "[validate] validate: failed",
            "  checks: 2",
            "[columns] columns: error",
            "  error: task columns: the job declares no rho",
        ]

    def test_notes(self):
        result = TaskResult("reciprocity", "reciprocity", notes=("observed sign -1", "expected sign -1"))

        assert render_text([result]) == "[reciprocity] reciprocity: ok\n  observed sign -1\n  expected sign -1\n"

    def test_nothing_to_report(self):
        assert render_text([]) == ""


class TestJson:
    def test_encode_polynomial(self, t):
        encoded = encode_value(t**2 - 3)

        assert encoded["type"] == "polynomial"
        assert encoded["vars"] == ["t"]
        assert [(exponents, str(c)) for exponents, c in encoded["terms"]] == [((2,), "1"), ((0,), "-3")]

    def test_encode_scalar(self):
        assert encode_value(GAUSSIAN.scalar("8 - 8*i")) == {"type": "scalar", "scalar": "8 - 8*i"}

    def test_encode_unknown(self):
        with pytest.raises(JobError):
            encode_value(object())

    def test_decode_rational(self, t):
        value = QT.fraction_field.new(t + 1, t - 1)

        assert decode_value(encode_value(value), QQ) == value

    def test_document(self):
        job = parse_job_file(FIXTURES / "fig8.tors")
        results = JobRunner(job).run(["wada", "derivative"])

        document = build_document(job, results, seed=7)

        assert document["format"] == REPORT_FORMAT
        assert document["seed"] == 7
        assert document["vars"] == ["t"]
        assert document["field"]["extensions"] == [{"name": "w", "minpoly": "w**2 - w + 1"}]
        assert [task["task"] for task in document["tasks"]] == ["wada", "derivative"]
        assert document["tasks"][0]["ambiguity"] == "up to ± t^m"
        assert document["tasks"][1]["ambiguity"] == "up to sign"

    @pytest.mark.parametrize(
        "fixture, tasks",
        [
            ("fig8.tors", ["wada", "covering", "derivative"]),
            ("whitehead_point.tors", ["wada", "derivative"]),
            ("fig8_fibered.tors", ["fibered", "fibered_double_cover"]),
        ],
    )
    def test_values_survive_the_round_trip(self, fixture, tasks):
        job = parse_job_file(FIXTURES / fixture)
        results = JobRunner(job).run(tasks)

        report = parse_report(render_json(job, results))

        assert report["field"] == job.tower
        assert report["ring"] == job.ring
        assert [task["value"] for task in report["tasks"]] == [result.value for result in results]
        assert [task["status"] for task in report["tasks"]] == ["ok"] * len(tasks)

    def test_output_is_deterministic(self):
        job = parse_job_file(FIXTURES / "torus.tors")

        first = render_json(job, JobRunner(job, seed=5).run())
        second = render_json(job, JobRunner(job, seed=5).run())

        assert first == second

    def test_not_json(self):
        with pytest.raises(JobError, match="not a JSON report"):
            parse_report("{")

    def test_malformed(self):
        with pytest.raises(JobError, match="malformed report"):
            parse_report({"format": REPORT_FORMAT})

    def test_wrong_format(self):
        job = parse_job_file(FIXTURES / "trefoil.tors")
        document = dict(build_document(job, []), format="other")

        with pytest.raises(JobError, match="not a torsionlab report"):
            parse_report(document)

    def test_value_needs_its_fields(self):
        job = parse_job_file(FIXTURES / "trefoil.tors")
        document = build_document(job, [TaskResult("x", "alexander", value=QT.gen("t"))])
        document["tasks"][0]["value"] = {"type": "polynomial", "vars": ["t"]}

        with pytest.raises(JobError, match="malformed report"):
            parse_report(document)
