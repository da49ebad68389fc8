"""
Job files: field, presentation and representation declarations followed by tasks::

    vars t ;
    extend w : cyclotomic 6 ;
    gens g1 g2 ; rel g2 g1 g2^-1 g1 g2 g1^-1 g2^-1 g1 g2^-1 g1^-1 ;
    phi g1 = t ; phi g2 = t ;
    rho g1 = [[1, 1], [0, 1]] ; rho g2 = [[1, 0], [w, 1]] ;
    task wada { }
    task double_cover { kind = covering ; m = 2 ; }

Every symbol must be declared before it is used.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from torsionlab.exceptions import (
    ExpressionError,
    ExtensionError,
    JobError,
    JobParseError,
    RepresentationError,
)
from torsionlab.group.presentation import Presentation, PresentationBuilder
from torsionlab.rep.abelian import AbelianizationMap
from torsionlab.rep.sl2 import SL2Rep
from torsionlab.ring.expressions import check_name
from torsionlab.ring.laurent import LaurentRing
from torsionlab.ring.tower import FieldTower
from torsionlab.torsion.inputs import TorsionJobInput
from torsionlab.utils.statements import Statement, split_statements

logger = logging.getLogger(__name__)

POLYNOMIAL_OPTIONS = frozenset({"source", "poly"})
TASK_OPTIONS: dict[str, frozenset] = {
    "wada": frozenset({"remove", "validate"}),
    "alexander": frozenset({"remove"}),
    "complex_torsion": frozenset({"validate"}),
    "validate": frozenset(),
    "reciprocity": POLYNOMIAL_OPTIONS | {"b", "manifold"},
    "derivative": POLYNOMIAL_OPTIONS | {"a_exponents", "reduce"},
    "covering": POLYNOMIAL_OPTIONS | {"m", "characters", "modulus", "variable"},
    "fibered": frozenset({"matrix", "phi1"}),
    "abelian_check": frozenset({"xi"}),
    "naturality": POLYNOMIAL_OPTIONS | {"exponents"},
    "multiplicativity": frozenset({"count", "max_dim"}),
    "columns": frozenset(),
    "conjugation": frozenset({"count"}),
}
TASK_KINDS = tuple(TASK_OPTIONS)

TASK = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)\s*\{(.*)\}$", re.S)
ASSIGNMENT = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.+)$", re.S)
CYCLOTOMIC = re.compile(r"^cyclotomic\s+(\d+)$")
TRUE = ("true", "yes", "on", "1")
FALSE = ("false", "no", "off", "0")


def split_top_level(text: str, separator: str = ",") -> list[str]:
    pieces, depth, current = [], 0, []
    for char in text:
        if char in "([":
            depth += 1
        elif char in ")]":
            depth -= 1
        if char == separator and depth == 0:
            pieces.append("".join(current).strip())
            current = []
        else:
            current.append(char)
    pieces.append("".join(current).strip())
    return pieces


def parse_matrix(text: str) -> list[list[str]]:
    """``[[a, b], [c, d]]`` as rows of entry texts."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise JobError(f"expected a matrix [[...], ...], got {text!r}")
    rows = []
    for row in split_top_level(text[1:-1]):
        if not (row.startswith("[") and row.endswith("]")):
            raise JobError(f"expected a matrix row [...], got {row!r}")
        rows.append(split_top_level(row[1:-1]))
    if not rows or any(len(row) != len(rows[0]) for row in rows) or not rows[0][0]:
        raise JobError(f"matrix rows of unequal or zero length in {text!r}")
    return rows


def parse_integers(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in re.split(r"[\s,]+", text.strip()) if piece)
    except ValueError as exc:
        raise JobError(f"expected integers, got {text!r}") from exc


@dataclass(frozen=True)
class TaskSpec:
    name: str
    kind: str
    options: tuple[tuple[str, str], ...] = ()
    line: Optional[int] = None

    def has(self, key: str) -> bool:
        return any(k == key for k, _ in self.options)

    def option(self, key: str, default: Optional[str] = None) -> Optional[str]:
        for k, value in self.options:
            if k == key:
                return value
        return default

    def required(self, key: str) -> str:
        value = self.option(key)
        if value is None:
            raise JobError(f"task {self.name} needs the option {key!r}")
        return value

    def integer(self, key: str, default: Optional[int] = None) -> Optional[int]:
        if not self.has(key):
            return default
        values = parse_integers(self.required(key))
        if len(values) != 1:
            raise JobError(f"task {self.name}: {key} must be a single integer")
        return values[0]

    def integers(self, key: str, default: Optional[Sequence[int]] = None) -> Optional[tuple[int, ...]]:
        if not self.has(key):
            return None if default is None else tuple(default)
        return parse_integers(self.required(key))

    def matrix(self, key: str) -> list[list[str]]:
        return parse_matrix(self.required(key))

    def flag(self, key: str, default: bool) -> bool:
        value = self.option(key)
        if value is None:
            return default
        if value.lower() in TRUE:
            return True
        if value.lower() in FALSE:
            return False
        raise JobError(f"task {self.name}: {key} must be true or false, got {value!r}")

    def overrides(self) -> dict[str, str]:
        """``rho NAME = [[...]]`` options, keyed by generator."""
        return {key.split()[1]: value for key, value in self.options if key.startswith("rho ")}


@dataclass
class Job:
    tower: FieldTower
    variables: tuple[str, ...]
    presentation: Optional[Presentation] = None
    phi: Optional[AbelianizationMap] = None
    rep: Optional[SL2Rep] = None
    tau0: Optional[int] = None
    tasks: tuple[TaskSpec, ...] = field(default_factory=tuple)
    source: Optional[str] = None

    @property
    def ring(self) -> LaurentRing:
        return LaurentRing(self.variables, self.tower)

    def task(self, name: str) -> Optional[TaskSpec]:
        for spec in self.tasks:
            if spec.name == name:
                return spec
        return None

    def generator_index(self, name: str) -> int:
        if self.presentation is None or name not in self.presentation.generators:
            raise JobError(f"unknown generator {name!r}")
        return self.presentation.index(name)

    def torsion_input(self, removed: Optional[int] = None, validate: bool = True) -> TorsionJobInput:
        missing = [
            what
            for what, value in (("gens", self.presentation), ("phi", self.phi), ("rho", self.rep))
            if value is None
        ]
        if missing:
            raise JobError(f"the job declares no {', '.join(missing)}")
        return TorsionJobInput(self.presentation, self.rep, self.phi, removed, self.tau0, validate)


class JobParser:
    """Consumes job statements one at a time, in file order."""

    def __init__(self, source: Optional[str] = None):
        self.source = source
        self.tower = FieldTower()
        self.variables: Optional[tuple[str, ...]] = None
        self.presentation = PresentationBuilder()
        self.images: dict[str, tuple[int, ...]] = {}
        self.entries: dict[str, list[list]] = {}
        self.tau0: Optional[int] = None
        self.tasks: list[TaskSpec] = []

    def feed(self, statement: Statement):
        if self.presentation.accepts(statement):
            self.presentation.feed(statement)
            return
        handler = getattr(self, f"feed_{statement.keyword}", None)
        if handler is None:
            raise JobParseError(f"unknown statement {statement.keyword!r}", statement.line, statement.column)
        try:
            handler(statement)
        except (JobError, ExpressionError, ExtensionError, RepresentationError) as exc:
            if isinstance(exc, JobParseError):
                raise
            raise JobParseError(str(exc), statement.line, statement.column) from exc

    # declarations
    # --------------------------------------------------------------------------
    def feed_vars(self, statement: Statement):
        if self.images:
            raise JobError("'vars' after 'phi'")
        if self.variables is not None:
            raise JobError("torsion variables declared twice")
        names = tuple(check_name(name) for name in statement.body.split())
        if not names:
            raise JobError("'vars' needs at least one name")
        self.variables = names

    def feed_extend(self, statement: Statement):
        name, colon, spec = statement.body.partition(":")
        name, spec = name.strip(), spec.strip()
        if not colon or not name or not spec:
            raise JobError("expected 'extend NAME : POLYNOMIAL' or 'extend NAME : cyclotomic N'")
        cyclotomic = CYCLOTOMIC.match(spec)
        if cyclotomic:
            self.tower = self.tower.adjoin_cyclotomic(name, int(cyclotomic.group(1)))
        else:
            self.tower = self.tower.adjoin(name, spec)

    def feed_params(self, statement: Statement):
        names = tuple(check_name(name) for name in statement.body.split())
        self.tower = self.tower.with_params(*names)

    def feed_phi(self, statement: Statement):
        name, image = self._assignment(statement)
        if name in self.images:
            raise JobError(f"phi({name}) assigned twice")
        if self.variables is None:
            self.variables = ("t",)
        monomial = LaurentRing(self.variables, FieldTower()).parse(image)
        if not monomial.is_monomial or not monomial.leading_coefficient().is_one:
            raise JobError(f"phi({name}) must be a monomial in {', '.join(self.variables)}, got {image!r}")
        self.images[name] = monomial.leading_term()[0]

    def feed_rho(self, statement: Statement):
        name, text = self._assignment(statement)
        if name in self.entries:
            raise JobError(f"rho({name}) assigned twice")
        rows = parse_matrix(text)
        if len(rows) != 2 or len(rows[0]) != 2:
            raise JobError(f"rho({name}) must be a 2x2 matrix")
        self.entries[name] = [[self.tower.scalar(entry) for entry in row] for row in rows]

    def feed_tau0(self, statement: Statement):
        value = statement.body.lstrip("=").strip()
        if value not in ("1", "+1", "-1"):
            raise JobError(f"tau0 must be +1 or -1, got {value!r}")
        self.tau0 = int(value)

    def feed_task(self, statement: Statement):
        match = TASK.match(statement.body.strip())
        if not match:
            raise JobError("expected 'task NAME { OPTION = VALUE ; ... }'")
        name, body = match.groups()
        if any(spec.name == name for spec in self.tasks):
            raise JobError(f"task {name} declared twice")

        def error(message, line, column):
            return JobParseError(f"task {name}: {message}", statement.line, statement.column)

        options = []
        for option in split_statements(body, error):
            key, equals, value = option.text.partition("=")
            key, value = " ".join(key.split()), value.strip()
            if not equals or not key or not value:
                raise JobError(f"task {name}: expected 'OPTION = VALUE', got {option.text!r}")
            options.append((key, value))
        kind = dict(options).get("kind", name)
        if kind not in TASK_OPTIONS:
            raise JobError(f"unknown task kind {kind!r}, expected one of {', '.join(TASK_KINDS)}")
        allowed = TASK_OPTIONS[kind] | {"kind"}
        for key, value in options:
            if kind == "abelian_check" and key.startswith("rho "):
                continue
            if key not in allowed:
                raise JobError(f"task {name}: unknown option {key!r} for {kind}")
        source = dict(options).get("source")
        if source is not None and not any(spec.name == source for spec in self.tasks):
            raise JobError(f"task {name}: source {source!r} is not an earlier task")
        self.tasks.append(TaskSpec(name, kind, tuple(options), statement.line))

    def _assignment(self, statement: Statement) -> tuple[str, str]:
        match = ASSIGNMENT.match(statement.body.strip())
        if not match:
            raise JobError(f"expected '{statement.keyword} GENERATOR = VALUE'")
        name, value = match.groups()
        generators = self.presentation.generators
        if generators is None:
            raise JobError(f"'{statement.keyword}' before 'gens'")
        if name not in generators:
            raise JobError(f"undeclared generator {name!r}")
        return name, value

    # result
    # --------------------------------------------------------------------------
    def build(self) -> Job:
        variables = self.variables or ("t",)
        presentation = self.presentation.build() if self.presentation.generators is not None else None
        try:
            LaurentRing(variables, self.tower)
            phi = rep = None
            if self.images:
                phi = AbelianizationMap.from_mapping(presentation.generators, self.images, variables)
            if self.entries:
                rep = SL2Rep.from_entries(self.tower, presentation.generators, self.entries)
        except (ExpressionError, RepresentationError) as exc:
            raise JobParseError(str(exc)) from exc
        logger.debug("job with %d task(s) over %s", len(self.tasks), self.tower)
        return Job(self.tower, variables, presentation, phi, rep, self.tau0, tuple(self.tasks), self.source)


def parse_job(text: str, source: Optional[str] = None) -> Job:
    parser = JobParser(source)
    for statement in split_statements(text, JobParseError):
        parser.feed(statement)
    return parser.build()


def parse_job_file(path) -> Job:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise JobError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_job(text, str(path))
