"""Runs the tasks of a parsed job in declaration order."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from torsionlab.analysis import (
    SignContext,
    covering_formula,
    derivative_formula,
    fibered_torsion,
    reciprocity,
)
from torsionlab.complex.chain import Ambiguity, torsion_of_complex
from torsionlab.complex.exact import multiplicativity_check
from torsionlab.complex.randomized import random_exact_sequence
from torsionlab.exceptions import JobError, TorsionlabError
from torsionlab.jobs.parser import TASK_KINDS, Job, TaskSpec, parse_matrix
from torsionlab.rep.sl2 import SL2Rep
from torsionlab.rep.twisted import validate_representation
from torsionlab.ring.laurent import LaurentPoly
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.ratfunc import RatFunc
from torsionlab.torsion import (
    CheckReport,
    abelian_factorization,
    build_complex_from_presentation,
    classical_alexander,
    column_independence,
    complex_agreement,
    conjugation_check,
    naturality_cross_check,
    naturality_substitute,
    sign_determined_torsion,
    wada_torsion,
)
from torsionlab.torsion.wada import TorsionValue, simplest

logger = logging.getLogger(__name__)

STATUSES = ("ok", "failed", "error")
SIGN_ONLY = Ambiguity(False, True)


@dataclass
class TaskResult:
    name: str
    kind: str
    status: str = "ok"
    value: Any = None
    label: Optional[str] = None
    ambiguity: Optional[Ambiguity] = None
    notes: tuple[str, ...] = ()
    details: dict = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def attach(self, *reports: CheckReport):
        """Record invariant checks; any failure fails the task."""
        checks = self.details.setdefault("checks", [])
        for report in reports:
            checks.append(report.as_dict())
            if not report.holds:
                self.status = "failed"


class JobRunner:
    def __init__(
        self,
        job: Job,
        seed: int = 0,
        check_invariants: bool = False,
        random_trials: int = 100,
        conjugators: int = 20,
    ):
        self.job = job
        self.seed = seed
        self.check_invariants = check_invariants
        self.random_trials = random_trials
        self.conjugators = conjugators
        self.results: dict[str, TaskResult] = {}
        self._torsion: Optional[TorsionValue] = None

    def select(self, names: Optional[Iterable[str]] = None) -> list[TaskSpec]:
        """The named tasks; a task kind the job does not declare runs with default options."""
        if not names:
            return list(self.job.tasks)
        specs = []
        for name in names:
            spec = self.job.task(name)
            if spec is None:
                if name not in TASK_KINDS:
                    raise JobError(f"unknown task {name!r}")
                spec = TaskSpec(name, name)
            specs.append(spec)
        return specs

    def run(self, names: Optional[Iterable[str]] = None) -> list[TaskResult]:
        return [self.run_task(spec) for spec in self.select(names)]

    def run_task(self, spec: TaskSpec) -> TaskResult:
        if spec.name in self.results:
            return self.results[spec.name]
        logger.info("task %s (%s) started", spec.name, spec.kind)
        handler = getattr(self, f"run_{spec.kind}")
        try:
            result = handler(spec)
        except TorsionlabError as exc:
            logger.warning("task %s failed: %s", spec.name, exc)
            result = TaskResult(spec.name, spec.kind, "error", error=f"task {spec.name}: {exc}")
        except Exception as exc:
            logger.exception("task %s raised %s", spec.name, type(exc).__name__)
            message = f"task {spec.name}: {type(exc).__name__}: {exc}"
            result = TaskResult(spec.name, spec.kind, "error", error=message)
        logger.info("task %s finished: %s", spec.name, result.status)
        self.results[spec.name] = result
        return result

    # polynomial sources
    # --------------------------------------------------------------------------
    def polynomial(self, spec: TaskSpec) -> TorsionValue:
        if spec.has("poly"):
            return self.job.ring.parse(spec.required("poly"))
        if spec.has("source"):
            source = self.job.task(spec.required("source"))
            result = self.run_task(source)
            if not isinstance(result.value, (LaurentPoly, RatFunc)):
                raise JobError(f"task {spec.name}: source {source.name} produced no polynomial")
            return result.value
        if self._torsion is None:
            self._torsion = wada_torsion(self.job.torsion_input()).value
        return self._torsion

    def laurent(self, spec: TaskSpec) -> LaurentPoly:
        value = self.polynomial(spec)
        if isinstance(value, RatFunc):
            value = simplest(value)
        if not isinstance(value, LaurentPoly):
            raise JobError(f"task {spec.name} needs a Laurent polynomial, got {value}")
        return value

    def _from_job(self, spec: TaskSpec) -> bool:
        return not spec.has("poly") and not spec.has("source")

    # tasks
    # --------------------------------------------------------------------------
    def run_wada(self, spec: TaskSpec) -> TaskResult:
        removed = self.job.generator_index(spec.required("remove")) if spec.has("remove") else None
        job_input = self.job.torsion_input(removed, spec.flag("validate", True))
        torsion = wada_torsion(job_input)
        result = TaskResult(spec.name, spec.kind, value=torsion.value, label="Δ", ambiguity=torsion.ambiguity)
        result.notes = torsion.notes
        if self.check_invariants:
            result.attach(column_independence(job_input.with_tau0(None)), complex_agreement(job_input))
        return result

    def run_alexander(self, spec: TaskSpec) -> TaskResult:
        job = self.job
        if job.presentation is None or job.phi is None:
            raise JobError("the Alexander polynomial needs 'gens' and 'phi'")
        removed = job.generator_index(spec.required("remove")) if spec.has("remove") else None
        value = classical_alexander(job.presentation, job.phi, job.tower, removed)
        return TaskResult(spec.name, spec.kind, value=value, label="Δ_K", ambiguity=Ambiguity.unit())

    def run_complex_torsion(self, spec: TaskSpec) -> TaskResult:
        job_input = self.job.torsion_input(validate=spec.flag("validate", True))
        C = build_complex_from_presentation(job_input.twisted_map())
        if job_input.tau0 is not None:
            torsion = sign_determined_torsion(job_input)
        else:
            torsion = torsion_of_complex(C)
        result = TaskResult(
            spec.name,
            spec.kind,
            value=simplest(torsion.value) if isinstance(torsion.value, RatFunc) else torsion.value,
            label="tau",
            ambiguity=torsion.ambiguity,
            notes=torsion.notes,
            details={"dims": list(C.dims), "boundaries": [_matrix_strings(d) for d in C.boundaries]},
        )
        if self.check_invariants:
            result.attach(complex_agreement(job_input))
        return result

    def run_validate(self, spec: TaskSpec) -> TaskResult:
        job = self.job
        if job.presentation is None or job.phi is None or job.rep is None:
            raise JobError("validation needs 'gens', 'phi' and 'rho'")
        report = validate_representation(job.rep, job.phi, job.presentation)
        return TaskResult(
            spec.name,
            spec.kind,
            "ok" if report.ok else "failed",
            details={"checks": report.checks, "failures": list(report.failures)},
        )

    def run_reciprocity(self, spec: TaskSpec) -> TaskResult:
        delta = self.laurent(spec)
        ctx = SignContext(spec.integer("b", delta.ring.nvars), spec.option("manifold", "generic"))
        report = reciprocity(delta, ctx, check_involution=self.check_invariants)
        status = "failed" if report.involution is False else "ok"
        notes = [f"observed sign {report.observed_sign:+d}"]
        if report.expected_sign is not None:
            notes.append(f"expected sign {report.expected_sign:+d}")
            if not report.sign_matches:
                notes.append("sign mismatch")
        return TaskResult(spec.name, spec.kind, status, notes=tuple(notes), details=report.as_dict())

    def run_derivative(self, spec: TaskSpec) -> TaskResult:
        delta = self.polynomial(spec)
        nvars = (delta.ring if isinstance(delta, LaurentPoly) else delta.field.ring).nvars
        a_exponents = spec.integers("a_exponents", (1,) * nvars)
        reduce = spec.integers("reduce")
        value = derivative_formula(delta, a_exponents, reduce)
        result = TaskResult(spec.name, spec.kind, value=value, label="T_lambda", ambiguity=SIGN_ONLY)
        result.details = {"a_exponents": list(a_exponents), "reduce": None if reduce is None else list(reduce)}
        if self.check_invariants and self._from_job(spec):
            result.attach(naturality_cross_check(self.job.torsion_input(), reduce or (1,) * nvars))
        return result

    def run_covering(self, spec: TaskSpec) -> TaskResult:
        delta = self.laurent(spec)
        characters = [parse_ints(row) for row in spec.matrix("characters")] if spec.has("characters") else None
        report = covering_formula(
            delta,
            m=spec.integer("m"),
            characters=characters,
            modulus=spec.integer("modulus"),
            variable=spec.option("variable", "s"),
        )
        return TaskResult(
            spec.name,
            spec.kind,
            value=report.value,
            label="Δ_cover",
            ambiguity=Ambiguity.unit(),
            notes=report.notes,
            details={"order": report.order, "modulus": report.modulus},
        )

    def run_fibered(self, spec: TaskSpec) -> TaskResult:
        tower = self.job.tower
        A = Matrix(tower, spec.matrix("matrix"))
        phi1 = [parse_ints(row) for row in spec.matrix("phi1")]
        variable = self.job.variables[0] if len(self.job.variables) == 1 else "t"
        torsion = fibered_torsion(A, phi1, variable)
        return TaskResult(
            spec.name, spec.kind, value=torsion.value, label="Δ", ambiguity=torsion.ambiguity, notes=torsion.notes
        )

    def run_abelian_check(self, spec: TaskSpec) -> TaskResult:
        job = self.job
        if job.presentation is None or job.phi is None:
            raise JobError("the abelian check needs 'gens' and 'phi'")
        xi = job.tower.scalar(spec.required("xi"))
        overrides = spec.overrides()
        rep = None
        if overrides:
            entries = {name: parse_matrix(text) for name, text in overrides.items()}
            rep = SL2Rep.from_entries(job.tower, job.presentation.generators, entries)
        report = abelian_factorization(job.presentation, job.phi, xi, job.tower, rep)
        return TaskResult(
            spec.name,
            spec.kind,
            "ok" if report.holds else "failed",
            value=report.lhs,
            label="Δ_xi",
            ambiguity=Ambiguity.unit(),
            details=report.as_dict(),
        )

    def run_naturality(self, spec: TaskSpec) -> TaskResult:
        exponents = spec.integers("exponents")
        if exponents is None:
            raise JobError(f"task {spec.name} needs the option 'exponents'")
        if not self._from_job(spec):
            value = naturality_substitute(self.polynomial(spec), exponents)
            return TaskResult(spec.name, spec.kind, value=value, label="Δ", ambiguity=Ambiguity.unit())
        report = naturality_cross_check(self.job.torsion_input(), exponents)
        result = TaskResult(
            spec.name, spec.kind, value=report.details["substituted"], label="Δ", ambiguity=Ambiguity.unit()
        )
        result.attach(report)
        return result

    def run_multiplicativity(self, spec: TaskSpec) -> TaskResult:
        count = spec.integer("count", self.random_trials)
        max_dim = spec.integer("max_dim", 4)
        rng = random.Random(self.seed)
        failures = []
        for trial in range(count):
            report = multiplicativity_check(random_exact_sequence(rng, max_dim))
            if not report.holds:
                logger.warning("multiplicativity fails in trial %d: %s", trial, report.as_dict())
                failures.append(trial)
        return TaskResult(
            spec.name,
            spec.kind,
            "failed" if failures else "ok",
            details={"trials": count, "failures": failures, "seed": self.seed},
        )

    def run_columns(self, spec: TaskSpec) -> TaskResult:
        return self._check_task(spec, column_independence(self.job.torsion_input().with_tau0(None)))

    def run_conjugation(self, spec: TaskSpec) -> TaskResult:
        count = spec.integer("count", self.conjugators)
        report = conjugation_check(self.job.torsion_input(), random.Random(self.seed), count)
        return self._check_task(spec, report)

    def _check_task(self, spec: TaskSpec, report: CheckReport) -> TaskResult:
        return TaskResult(
            spec.name,
            spec.kind,
            "ok" if report.holds else "failed",
            details=report.as_dict()["details"],
        )


def parse_ints(row: Sequence[str]) -> tuple[int, ...]:
    try:
        return tuple(int(entry) for entry in row)
    except ValueError as exc:
        raise JobError(f"expected integer entries, got {list(row)}") from exc


def _matrix_strings(M: Matrix) -> list[list[str]]:
    return [[str(entry) for entry in row] for row in M.rows]
