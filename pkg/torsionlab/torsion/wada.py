"""
Polynomial torsion of a deficiency-one presentation as a ratio of determinants::

    det [Phi(dr_j/dx_i)]_{i != k}  /  det Phi(x_k - 1)

The value is defined up to ``± t^m``; a sign is only attached through
:func:`sign_determined_torsion`, which needs ``tau0``.
"""
from __future__ import annotations

import logging
from typing import Optional, Union

from torsionlab.complex.chain import Ambiguity, TorsionResult, torsion_of_complex
from torsionlab.exceptions import DegenerateDenominator, TorsionlabError, WrongDeficiency
from torsionlab.group.presentation import Presentation
from torsionlab.rep.abelian import AbelianizationMap, abelian_rep_build
from torsionlab.rep.twisted import AbelianTwist, TwistedMap
from torsionlab.ring.laurent import LaurentPoly, divide_exact, unit_equivalent
from torsionlab.ring.linalg import determinant
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.ratfunc import RatFunc
from torsionlab.ring.tower import FieldTower
from torsionlab.torsion.inputs import TorsionJobInput
from torsionlab.torsion.presentation_complex import (
    build_complex_from_presentation,
    fox_jacobian_image,
    generator_block,
)

logger = logging.getLogger(__name__)

TorsionValue = Union[LaurentPoly, RatFunc]


def is_polynomial(r: RatFunc) -> tuple[bool, Optional[LaurentPoly]]:
    return r.is_polynomial()


def simplest(r: RatFunc) -> TorsionValue:
    """``r`` as a Laurent polynomial when it is one."""
    exact, quotient = r.is_polynomial()
    return quotient if exact else r


def removal_order(rank: int, removed: Optional[int]) -> list[int]:
    """The generator to drop first (default: the last), then the others in order."""
    first = rank - 1 if removed is None else removed
    return [first] + [k for k in range(rank) if k != first]


def wada_ratio(Phi: TwistedMap, k: int, jacobian: Optional[list[list[Matrix]]] = None) -> Optional[RatFunc]:
    """The determinant ratio with generator ``k`` removed, or ``None`` when its denominator vanishes."""
    denominator = determinant(generator_block(Phi, k))
    if not denominator:
        logger.debug("det Phi(%s - 1) vanishes", Phi.presentation.generators[k])
        return None
    jacobian = fox_jacobian_image(Phi) if jacobian is None else jacobian
    columns = [i for i in range(Phi.presentation.rank) if i != k]
    size = Phi.size
    if jacobian:
        numerator_matrix = Matrix.block(Phi.ring, [[row[i] for i in columns] for row in jacobian])
    else:
        numerator_matrix = Matrix.zeros(Phi.ring, 0, size * len(columns))
    return determinant(numerator_matrix) / denominator


def twisted_wada(Phi: TwistedMap, removed: Optional[int] = None) -> TorsionResult:
    """Wada torsion of any twist; tries every generator before giving up."""
    presentation = Phi.presentation
    if presentation.deficiency != 1:
        raise WrongDeficiency(
            f"{presentation.rank} generators and {len(presentation.relators)} relators: "
            "the determinant ratio needs deficiency one"
        )
    jacobian = fox_jacobian_image(Phi)
    tried = []
    for k in removal_order(presentation.rank, removed):
        name = presentation.generators[k]
        value = wada_ratio(Phi, k, jacobian)
        if value is None:
            tried.append(name)
            continue
        notes = [f"removed generator {name}"]
        if tried:
            notes.append(f"det Phi(x - 1) vanished for {', '.join(tried)}")
            logger.info("Wada denominator vanished for %s, used %s", ", ".join(tried), name)
        return TorsionResult(simplest(value), Ambiguity.unit(), tuple(notes))
    raise DegenerateDenominator(tried)


def wada_torsion(job: TorsionJobInput) -> TorsionResult:
    if job.tau0 is not None:
        return sign_determined_torsion(job)
    return twisted_wada(job.twisted_map(), job.removed)


def sign_determined_torsion(job: TorsionJobInput) -> TorsionResult:
    """``tau0`` times the torsion of the presentation complex, checked against the Wada ratio.

    The complex carries no natural basis choice beyond the generators and relators,
    so only the monomial factor stays free.
    """
    if job.tau0 is None:
        raise TorsionlabError("a sign-determined torsion needs tau0")
    Phi = job.twisted_map()
    complex_value = torsion_of_complex(build_complex_from_presentation(Phi)).value * job.tau0
    wada = twisted_wada(Phi, job.removed)
    value = simplest(complex_value)
    notes = list(wada.notes) + [f"tau0 = {job.tau0:+d}"]
    if not agree_up_to_unit(value, wada.value):
        raise TorsionlabError(f"complex torsion {value} and determinant ratio {wada.value} disagree")
    return TorsionResult(value, Ambiguity.monomial(), tuple(notes))


def agree_up_to_unit(first: TorsionValue, second: TorsionValue) -> bool:
    return unit_between(first, second) is not None


def unit_between(first: TorsionValue, second: TorsionValue):
    """The unit ``u`` with ``first = u * second`` as a :class:`UnitClass`, or ``None``."""
    if isinstance(first, LaurentPoly) and isinstance(second, LaurentPoly):
        return unit_equivalent(first, second)
    first = _as_ratfunc(first, second)
    second = _as_ratfunc(second, first)
    return unit_equivalent(first.num * second.den, second.num * first.den)


def _as_ratfunc(value: TorsionValue, other: TorsionValue) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    field = other.field if isinstance(other, RatFunc) else value.ring.fraction_field
    return field.convert(value)


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Shift to minimum degree 0; negate when the leading coefficient is a negative rational."""
    p, _ = p.normalized()
    lead = p.leading_coefficient().as_rational()
    if lead is not None and lead < 0:
        p = -p
    return p


def classical_alexander(
    presentation: Presentation,
    phi: AbelianizationMap,
    tower: Optional[FieldTower] = None,
    removed: Optional[int] = None,
) -> LaurentPoly:
    """Alexander polynomial from the one-dimensional torsion ``Delta(t) / (t - 1)``."""
    if phi.nvars != 1:
        raise TorsionlabError("the Alexander polynomial needs a map onto a single variable")
    Phi = AbelianTwist(presentation, phi, tower or FieldTower())
    Phi.ensure_valid()
    torsion = twisted_wada(Phi, removed).value
    t = Phi.ring.gen(0)
    product = torsion * (t - 1)
    if isinstance(product, RatFunc):
        product = divide_exact(product.num, product.den)
    return normalize_alexander(product)


def abelian_input(
    presentation: Presentation, phi: AbelianizationMap, xi, tower: FieldTower, removed: Optional[int] = None
) -> TorsionJobInput:
    return TorsionJobInput(presentation, abelian_rep_build(phi, xi, tower), phi, removed)


def wada_for_each_generator(job: TorsionJobInput) -> dict[str, Optional[TorsionValue]]:
    """Every removable generator's ratio; ``None`` where the denominator vanishes."""
    Phi = job.twisted_map()
    if Phi.presentation.deficiency != 1:
        raise WrongDeficiency("the determinant ratio needs deficiency one")
    jacobian = fox_jacobian_image(Phi)
    values: dict[str, Optional[TorsionValue]] = {}
    for k, name in enumerate(Phi.presentation.generators):
        value = wada_ratio(Phi, k, jacobian)
        values[name] = None if value is None else simplest(value)
    return values
