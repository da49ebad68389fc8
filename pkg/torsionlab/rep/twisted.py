"""
The twisted ring map ``Z[pi] -> M_3(F[t_1^+-1 ... t_n^+-1])``.

A word ``w`` goes to ``t^phi(w)`` times the adjoint action of ``rho(w)^-1`` on
row vectors, i.e. the transpose of :func:`~torsionlab.rep.sl2.adjoint`, so that
``Phi(uv) = Phi(u) Phi(v)``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Union

from torsionlab.exceptions import InvalidRepresentation
from torsionlab.group.presentation import Presentation
from torsionlab.group.ring import GroupRingElement
from torsionlab.group.words import Word
from torsionlab.rep.abelian import AbelianizationMap
from torsionlab.rep.sl2 import SL2Rep, adjoint, det2, inverse2
from torsionlab.ring.laurent import LaurentRing
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tower import FieldTower

logger = logging.getLogger(__name__)


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, failure: str):
        self.checks += 1
        if not condition:
            self.failures.append(failure)


def validate_representation(rep: SL2Rep, phi: AbelianizationMap, presentation: Presentation) -> ValidationReport:
    """Check ``det rho(g) = 1``, ``rho(r) = I`` and ``phi(r) = 0``; every failure is listed."""
    report = ValidationReport()
    names = presentation.generators
    report.check(rep.rank == presentation.rank, f"{rep.rank} matrices for {presentation.rank} generators")
    report.check(phi.rank == presentation.rank, f"{phi.rank} images for {presentation.rank} generators")
    if not report.ok:
        return report
    identity = Matrix.identity(rep.tower, 2)
    for name, matrix in zip(names, rep.matrices):
        det = det2(matrix)
        report.check(det == 1, f"det rho({name}) = {det}, not 1")
    if not report.ok:
        return report
    for number, relator in enumerate(presentation.relators, start=1):
        text = presentation.format_word(relator)
        report.check(rep.evaluate(relator) == identity, f"rho does not kill relator {number} ({text})")
        report.check(phi.kills(relator), f"phi({text}) = {phi.evaluate(relator)}, not 0")
    logger.debug("validated representation: %d checks, %d failures", report.checks, len(report.failures))
    return report


class TwistedMap:
    """``w -> t^phi(w) Ad(rho(w)^-1)`` on row vectors of sl(2)."""

    size = 3

    def __init__(
        self,
        presentation: Presentation,
        rep: SL2Rep,
        phi: AbelianizationMap,
        ring: Optional[LaurentRing] = None,
    ):
        self.presentation = presentation
        self.rep = rep
        self.phi = phi
        self.ring = ring or LaurentRing(phi.variables, rep.tower)
        self._letters: dict[tuple[int, int], Matrix] = {}

    @property
    def field(self):
        return self.ring.fraction_field

    def validate(self) -> ValidationReport:
        return validate_representation(self.rep, self.phi, self.presentation)

    def ensure_valid(self) -> "TwistedMap":
        report = self.validate()
        if not report.ok:
            raise InvalidRepresentation(report)
        return self

    def letter(self, index: int, exponent: int) -> Matrix:
        key = (index, exponent)
        if key not in self._letters:
            matrix = self.rep.matrices[index]
            action = adjoint(inverse2(matrix) if exponent > 0 else matrix).T
            shift = tuple(exponent * e for e in self.phi.images[index])
            self._letters[key] = action.map(lambda s: self.ring.monomial(shift, s), self.ring)
        return self._letters[key]

    def word(self, word: Word) -> Matrix:
        result = Matrix.identity(self.ring, self.size)
        for index, exponent in word:
            result = result @ self.letter(index, exponent)
        return result

    def apply(self, x: GroupRingElement) -> Matrix:
        total = Matrix.zeros(self.ring, self.size, self.size)
        for word, coefficient in x:
            total = total + self.word(word).scale(coefficient)
        return total

    def __call__(self, x: Union[Word, GroupRingElement, int]) -> Matrix:
        if isinstance(x, Word):
            return self.word(x)
        if isinstance(x, int):
            return Matrix.identity(self.ring, self.size).scale(x)
        return self.apply(x)


def twisted_map_apply(Phi: TwistedMap, x: Union[Word, GroupRingElement]) -> Matrix:
    return Phi(x)


class AbelianTwist(TwistedMap):
    """The one-dimensional twist ``w -> t^phi(w)`` behind the classical Alexander polynomial."""

    size = 1

    def __init__(
        self,
        presentation: Presentation,
        phi: AbelianizationMap,
        tower: FieldTower,
        ring: Optional[LaurentRing] = None,
    ):
        self.presentation = presentation
        self.rep = None  # type: ignore[assignment]
        self.phi = phi
        self.ring = ring or LaurentRing(phi.variables, tower)
        self._letters = {}

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        report.check(
            self.phi.rank == self.presentation.rank,
            f"{self.phi.rank} images for {self.presentation.rank} generators",
        )
        if not report.ok:
            return report
        for relator in self.presentation.relators:
            text = self.presentation.format_word(relator)
            report.check(self.phi.kills(relator), f"phi({text}) = {self.phi.evaluate(relator)}, not 0")
        return report

    def letter(self, index: int, exponent: int) -> Matrix:
        key = (index, exponent)
        if key not in self._letters:
            shift = tuple(exponent * e for e in self.phi.images[index])
            self._letters[key] = Matrix(self.ring, [[self.ring.monomial(shift)]])
        return self._letters[key]
