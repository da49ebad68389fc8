"""
Text and JSON reports.

Text reports print one section per task. Polynomials are shifted to minimum
degree zero when their monomial factor is not determined, and factored over Q
when every coefficient is rational. The JSON document keeps every term, so that
:func:`parse_report` rebuilds the exact values.
"""
from __future__ import annotations

import json
import logging
import re
from typing import Optional, Sequence, Union

from rest_framework.exceptions import ValidationError
from sympy import Symbol, factor_list, sstr

from torsionlab.exceptions import JobError, TorsionlabError
from torsionlab.jobs.api.serializers import ReportSerializer
from torsionlab.jobs.parser import Job
from torsionlab.jobs.runner import TaskResult
from torsionlab.ring.laurent import LaurentPoly, LaurentRing
from torsionlab.ring.ratfunc import RatFunc
from torsionlab.ring.tower import FieldScalar, FieldTower

logger = logging.getLogger(__name__)

REPORT_FORMAT = "torsionlab-report"
REPORT_VERSION = 1
COEFFICIENT_PRODUCT = re.compile(r"(\d)\*(?=[A-Za-z(])")


def tidy(text: str) -> str:
    """``5*t`` as ``5t`` and ``x**2`` as ``x^2``."""
    return COEFFICIENT_PRODUCT.sub(r"\1", text.replace("**", "^"))


def _monomial_text(ring: LaurentRing, exponents) -> str:
    return "·".join(var if e == 1 else f"{var}^{e}" for var, e in zip(ring.vars, exponents) if e)


def format_polynomial(p: LaurentPoly, factor: bool = True, keep_shift: bool = True) -> str:
    if p.is_zero:
        return "0"
    shifted, shift = p.normalized()
    prefix = _monomial_text(p.ring, shift) if keep_shift else ""
    if not keep_shift:
        p = shifted
    if not factor or not all(c.is_rational for _, c in shifted):
        return tidy(str(p))
    symbols = [Symbol(var) for var in p.ring.vars]
    content, factors = factor_list(shifted.as_expr(), *symbols)
    pieces = [prefix] if prefix else []
    for expr, multiplicity in factors:
        piece = p.ring.from_expr(expr)
        text = tidy(str(piece))
        if len(piece) > 1 and (len(factors) > 1 or multiplicity > 1 or content != 1 or prefix):
            text = f"({text})"
        if multiplicity > 1:
            text = f"{text}^{multiplicity}"
        pieces.append(text)
    body = "·".join(pieces)
    if not body:
        return tidy(sstr(content))
    if content == 1:
        return body
    if content == -1:
        return f"-{body}"
    return f"{tidy(sstr(content))}·{body}"


def positive_representative(value: FieldScalar) -> FieldScalar:
    """``value`` or ``-value``, whichever has a positive rational part (or leading coefficient)."""
    constant, rest = value.as_expr().as_coeff_Add()
    lead = constant if constant else rest.as_ordered_terms()[0].as_coeff_Mul()[0]
    return -value if lead < 0 else value


def format_value(value, ambiguity=None, factor: bool = True) -> str:
    keep_shift = ambiguity is None or ambiguity.monomial_known
    if isinstance(value, LaurentPoly):
        return format_polynomial(value, factor, keep_shift)
    if isinstance(value, RatFunc):
        num, den = value.num, value.den
        if not keep_shift:
            num, den = num.normalized()[0], den.normalized()[0]
        return f"({format_polynomial(num, factor)}) / ({format_polynomial(den, factor)})"
    if isinstance(value, FieldScalar):
        if ambiguity is not None and not ambiguity.sign_known:
            value = positive_representative(value)
        return tidy(str(value))
    return str(value)


def ambiguity_label(result: TaskResult) -> Optional[str]:
    if result.ambiguity is None:
        return None
    if isinstance(result.value, FieldScalar):
        return "exact" if result.ambiguity.sign_known else "up to sign"
    return str(result.ambiguity)


def render_text(results: Sequence[TaskResult], factor: bool = True) -> str:
    lines: list[str] = []
    for result in results:
        lines.append(f"[{result.name}] {result.kind}: {result.status}")
        if result.value is not None:
            text = f"  {result.label or 'value'} = {format_value(result.value, result.ambiguity, factor)}"
            label = ambiguity_label(result)
            lines.append(f"{text}  [{label}]" if label else text)
        lines.extend(f"  {note}" for note in result.notes)
        for key, value in result.details.items():
            if isinstance(value, (str, int, bool)) or value is None:
                lines.append(f"  {key}: {value}")
        if result.error:
            lines.append(f"  error: {result.error}")
    return "\n".join(lines) + "\n" if lines else ""


# JSON
# ------------------------------------------------------------------------------
def encode_value(value) -> Optional[dict]:
    if value is None:
        return None
    if isinstance(value, LaurentPoly):
        return {"type": "polynomial", "vars": list(value.ring.vars), "terms": list(value)}
    if isinstance(value, RatFunc):
        return {
            "type": "rational",
            "vars": list(value.field.vars),
            "numerator": {"terms": list(value.num)},
            "denominator": {"terms": list(value.den)},
        }
    if isinstance(value, FieldScalar):
        return {"type": "scalar", "scalar": str(value)}
    raise JobError(f"cannot encode {value!r}")


def build_document(job: Job, results: Sequence[TaskResult], seed: int = 0) -> dict:
    tower = job.tower
    document = {
        "format": REPORT_FORMAT,
        "version": REPORT_VERSION,
        "source": job.source,
        "seed": seed,
        "field": {
            "params": list(tower.params),
            "extensions": [{"name": level.name, "minpoly": sstr(level.minpoly)} for level in tower.levels],
        },
        "vars": list(job.variables),
        "tasks": [
            {
                "task": result.name,
                "kind": result.kind,
                "status": result.status,
                "value": encode_value(result.value),
                "label": result.label,
                "ambiguity": ambiguity_label(result),
                "notes": list(result.notes),
                "details": result.details,
                "error": result.error,
            }
            for result in results
        ],
    }
    return ReportSerializer(document).data


def render_json(job: Job, results: Sequence[TaskResult], seed: int = 0) -> str:
    return json.dumps(build_document(job, results, seed), indent=2, ensure_ascii=False) + "\n"


def _tower(data: dict) -> FieldTower:
    tower = FieldTower(tuple(data["params"]))
    for extension in data["extensions"]:
        tower = tower.adjoin(extension["name"], extension["minpoly"])
    return tower


def decode_value(data: Optional[dict], tower: FieldTower):
    if data is None:
        return None
    if data["type"] == "scalar":
        return tower.scalar(data["scalar"])
    ring = LaurentRing(tuple(data["vars"]), tower)
    if data["type"] == "polynomial":
        return ring.from_terms(data["terms"])
    if data["type"] == "rational":
        num = ring.from_terms(data["numerator"]["terms"])
        den = ring.from_terms(data["denominator"]["terms"])
        return ring.fraction_field.new(num, den)
    raise JobError(f"unknown value type {data['type']!r}")


def parse_report(document: Union[str, bytes, dict]) -> dict:
    """Read a JSON report back; values come back as polynomials over the recorded field."""
    if not isinstance(document, dict):
        try:
            document = json.loads(document)
        except ValueError as exc:
            raise JobError(f"not a JSON report: {exc}") from exc
    serializer = ReportSerializer(data=document)
    try:
        serializer.is_valid(raise_exception=True)
    except ValidationError as exc:
        raise JobError(f"malformed report: {exc.detail}") from exc
    data = serializer.validated_data
    if data["format"] != REPORT_FORMAT:
        raise JobError(f"not a torsionlab report: format {data['format']!r}")
    try:
        tower = _tower(data["field"])
        ring = LaurentRing(tuple(data["vars"]), tower)
        tasks = []
        for task in data["tasks"]:
            task = dict(task)
            task["value"] = decode_value(task["value"], tower)
            tasks.append(task)
    except TorsionlabError as exc:
        raise JobError(f"cannot rebuild the report values: {exc}") from exc
    logger.debug("read report with %d task(s) over %s", len(tasks), tower)
    return {"source": data["source"], "seed": data["seed"], "field": tower, "ring": ring, "tasks": tasks}
