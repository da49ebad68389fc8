"""Homomorphisms from a presented group to the free abelian group on ``t_1 ... t_n``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from torsionlab.exceptions import RepresentationError
from torsionlab.group.words import Word
from torsionlab.rep.sl2 import SL2Rep
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tower import FieldTower


@dataclass(frozen=True)
class AbelianizationMap:
    """``images[g]`` is the exponent vector of the image of generator ``g``."""

    images: tuple[tuple[int, ...], ...]
    variables: tuple[str, ...] = ("t",)

    def __post_init__(self):
        images = tuple(tuple(int(e) for e in image) for image in self.images)
        for image in images:
            if len(image) != len(self.variables):
                raise RepresentationError(
                    f"image {image} does not have one exponent per variable {self.variables}"
                )
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "variables", tuple(self.variables))

    @classmethod
    def from_mapping(
        cls, generators: Sequence[str], images: Mapping[str, Sequence[int]], variables: Sequence[str]
    ) -> "AbelianizationMap":
        missing = [name for name in generators if name not in images]
        if missing:
            raise RepresentationError(f"no image for generator(s) {', '.join(missing)}")
        return cls(tuple(tuple(images[name]) for name in generators), tuple(variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def rank(self) -> int:
        return len(self.images)

    def evaluate(self, word: Word) -> tuple[int, ...]:
        total = [0] * self.nvars
        for index, exponent in word:
            for i, e in enumerate(self.images[index]):
                total[i] += exponent * e
        return tuple(total)

    def kills(self, word: Word) -> bool:
        return not any(self.evaluate(word))

    def compose(self, exponents: Sequence[int], variable: str = "t") -> "AbelianizationMap":
        """Follow with ``t_i -> t^(a_i)``."""
        if len(exponents) != self.nvars:
            raise RepresentationError(f"expected {self.nvars} exponents, got {len(exponents)}")
        return AbelianizationMap(
            tuple((sum(a * e for a, e in zip(exponents, image)),) for image in self.images), (variable,)
        )

    def format(self, names: Sequence[str]) -> dict[str, str]:
        def monomial(image):
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, image) if e]
            return "*".join(factors) or "1"

        return {name: monomial(image) for name, image in zip(names, self.images)}


def abelian_rep_build(phi: AbelianizationMap, xi, tower: Optional[FieldTower] = None) -> SL2Rep:
    """``rho_xi(g) = diag(xi^phi(g), xi^-phi(g))`` for a map to a single variable."""
    if phi.nvars != 1:
        raise RepresentationError("the diagonal representation needs a map onto a single variable")
    tower = tower or xi.tower
    xi = tower.scalar(xi)
    if not xi:
        raise RepresentationError("xi must be nonzero")
    return SL2Rep(
        tower,
        tuple(Matrix.diag(tower, [xi ** image[0], xi ** (-image[0])]) for image in phi.images),
    )
