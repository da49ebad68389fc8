"""Cross-checks of the polynomial torsion: independence of choices, naturality and the abelian case."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from torsionlab.complex.chain import torsion_of_complex
from torsionlab.exceptions import SubstitutionError, TorsionlabError
from torsionlab.group.presentation import Presentation
from torsionlab.rep.abelian import AbelianizationMap, abelian_rep_build
from torsionlab.rep.sl2 import SL2Rep, random_sl2
from torsionlab.rep.twisted import TwistedMap
from torsionlab.ring.laurent import LaurentPoly, LaurentRing, UnitClass, laurent_substitute
from torsionlab.ring.ratfunc import RatFunc
from torsionlab.ring.tower import FieldTower
from torsionlab.torsion.inputs import TorsionJobInput
from torsionlab.torsion.presentation_complex import build_complex_from_presentation, fox_jacobian_image
from torsionlab.torsion.wada import (
    TorsionValue,
    classical_alexander,
    removal_order,
    simplest,
    twisted_wada,
    unit_between,
    wada_for_each_generator,
    wada_ratio,
    wada_torsion,
)

logger = logging.getLogger(__name__)


@dataclass
class CheckReport:
    name: str
    holds: bool
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "holds": self.holds,
            "details": {key: _plain(value) for key, value in self.details.items()},
        }


def _unit_text(unit: Optional[UnitClass], variables: Sequence[str]) -> Optional[str]:
    return None if unit is None else unit.format(variables)


def _plain(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


def column_independence(job: TorsionJobInput) -> CheckReport:
    """Drop each generator in turn; every non-degenerate ratio must agree up to ``± t^m``."""
    values = wada_for_each_generator(job)
    names = [name for name, value in values.items() if value is not None]
    if not names:
        raise TorsionlabError("every removable generator has a vanishing denominator")
    reference = values[names[0]]
    units = {}
    for name in names[1:]:
        units[name] = unit_between(values[name], reference)
    holds = all(unit is not None for unit in units.values())
    variables = job.phi.variables
    if not holds:
        logger.warning("column independence fails: %s", units)
    return CheckReport(
        "column_independence",
        holds,
        {
            "reference": names[0],
            "values": values,
            "units": {name: _unit_text(unit, variables) for name, unit in units.items()},
            "skipped": [name for name, value in values.items() if value is None],
        },
    )


def conjugation_check(job: TorsionJobInput, rng: random.Random, count: int = 20) -> CheckReport:
    """Conjugate the representation by ``count`` random elements of ``SL(2, Q)``."""
    base = wada_torsion(job.with_tau0(None)).value
    failures = []
    for trial in range(count):
        P = random_sl2(rng, job.rep.tower)
        value = wada_torsion(job.with_rep(job.rep.conjugate(P)).with_tau0(None)).value
        if unit_between(value, base) is None:
            failures.append({"trial": trial, "conjugator": str(P), "value": str(value)})
    holds = not failures
    if not holds:
        logger.warning("conjugation invariance fails in %d of %d trials", len(failures), count)
    return CheckReport("conjugation", holds, {"base": base, "trials": count, "failures": failures})


def complex_agreement(job: TorsionJobInput) -> CheckReport:
    """The torsion of the presentation complex against the determinant ratio."""
    Phi = job.twisted_map()
    complex_value = simplest(torsion_of_complex(build_complex_from_presentation(Phi)).value)
    wada = twisted_wada(Phi, job.removed).value
    unit = unit_between(complex_value, wada)
    return CheckReport(
        "complex_agreement",
        unit is not None,
        {"complex": complex_value, "wada": wada, "unit": _unit_text(unit, job.phi.variables)},
    )


def naturality_substitute(
    value: Union[LaurentPoly, RatFunc], exponents: Sequence[int], variable: str = "t"
) -> TorsionValue:
    """``t_i -> t^(a_i)`` for every torsion variable."""
    source = value.ring if isinstance(value, LaurentPoly) else value.field.ring
    if len(exponents) != source.nvars:
        raise SubstitutionError(f"expected {source.nvars} exponents, got {len(exponents)}")
    if any(a < 1 for a in exponents):
        raise SubstitutionError(f"exponents must be positive, got {tuple(exponents)}")
    target = LaurentRing((variable,), source.tower)
    mapping = {var: target.monomial((a,)) for var, a in zip(source.vars, exponents)}
    if isinstance(value, LaurentPoly):
        return laurent_substitute(value, mapping, target)
    return simplest(value.substitute(mapping, target))


def naturality_cross_check(job: TorsionJobInput, exponents: Sequence[int], variable: str = "t") -> CheckReport:
    """Substituting into the torsion must equal the torsion of the composed map, exactly.

    Both sides drop the same generator, so they agree as rational functions and
    not only up to a unit.
    """
    Phi = job.twisted_map()
    composed_phi = job.phi.compose(exponents, variable)
    composed = TwistedMap(job.presentation, job.rep, composed_phi)
    jacobian = fox_jacobian_image(Phi)
    composed_jacobian = fox_jacobian_image(composed)
    for k in removal_order(job.presentation.rank, job.removed):
        original = wada_ratio(Phi, k, jacobian)
        recomputed = wada_ratio(composed, k, composed_jacobian)
        if original is None or recomputed is None:
            continue
        substituted = naturality_substitute(original, exponents, variable)
        recomputed_value = simplest(recomputed)
        holds = _as_field(substituted, recomputed.field) == recomputed
        if not holds:
            logger.warning("naturality fails for exponents %s", tuple(exponents))
        return CheckReport(
            "naturality",
            holds,
            {
                "exponents": tuple(exponents),
                "removed": job.presentation.generators[k],
                "substituted": substituted,
                "recomputed": recomputed_value,
            },
        )
    raise TorsionlabError("no generator has a non-vanishing denominator before and after substitution")


def _as_field(value: TorsionValue, field) -> RatFunc:
    return value if isinstance(value, RatFunc) else field.convert(value)


@dataclass
class AbelianFactorization:
    holds: bool
    lhs: TorsionValue
    rhs: RatFunc
    alexander: LaurentPoly
    unit: Optional[UnitClass] = None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "alexander": str(self.alexander),
            "unit": _unit_text(self.unit, self.alexander.ring.vars),
        }


def abelian_factorization(
    presentation: Presentation,
    phi: AbelianizationMap,
    xi,
    tower: Optional[FieldTower] = None,
    rep: Optional[SL2Rep] = None,
) -> AbelianFactorization:
    """Compare the torsion at ``rho_xi`` with ``Delta(xi^2 t) Delta(t) Delta(xi^-2 t)`` over its poles.

    ``rep`` replaces the diagonal representation, e.g. by a reducible upper
    triangular one with the same diagonal.
    """
    tower = tower or FieldTower()
    xi = tower.scalar(xi)
    if rep is None:
        rep = abelian_rep_build(phi, xi, tower)
    lhs = wada_torsion(TorsionJobInput(presentation, rep, phi)).value
    alexander = classical_alexander(presentation, phi, tower)
    ring = LaurentRing(phi.variables, tower)
    alexander = ring.convert(alexander)
    t = ring.gen(0)
    numerator = ring.one
    denominator = ring.one
    for scale in (xi**2, tower.one, xi ** (-2)):
        numerator = numerator * laurent_substitute(alexander, {phi.variables[0]: ring.monomial((1,), scale)}, ring)
        denominator = denominator * (t - ring.constant(scale))
    rhs = ring.fraction_field.new(numerator, denominator)
    unit = unit_between(lhs, rhs)
    if unit is None:
        logger.warning("abelian factorization fails at xi = %s", xi)
    return AbelianFactorization(unit is not None, lhs, rhs, alexander, unit)
