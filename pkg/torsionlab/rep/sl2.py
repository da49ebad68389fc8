"""
Representations into SL(2) over a :class:`~torsionlab.ring.tower.FieldTower` and
the adjoint action on sl(2) in the ordered basis ``E, H, F``::

    E = [[0, 1], [0, 0]]    H = [[1, 0], [0, -1]]    F = [[0, 0], [1, 0]]
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from torsionlab.exceptions import RepresentationError
from torsionlab.group.words import Word
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tower import FieldTower

logger = logging.getLogger(__name__)


def det2(A: Matrix):
    return A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]


def inverse2(A: Matrix) -> Matrix:
    det = det2(A)
    if not det:
        raise RepresentationError(f"{A} is not invertible")
    return Matrix(A.domain, [[A[1, 1] / det, -A[0, 1] / det], [-A[1, 0] / det, A[0, 0] / det]])


def adjoint(A: Matrix) -> Matrix:
    """Matrix of ``X -> A X A^-1`` acting on the coordinate columns of ``E, H, F``."""
    if A.shape != (2, 2):
        raise RepresentationError(f"expected a 2x2 matrix, got {A.shape}")
    if det2(A) != 1:
        raise RepresentationError(f"{A} has determinant {det2(A)}, not 1")
    a, b, c, d = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
    return Matrix(
        A.domain,
        [
            [a * a, -2 * a * b, -b * b],
            [-a * c, a * d + b * c, b * d],
            [-c * c, 2 * c * d, d * d],
        ],
    )


def trace_form(X: Matrix, Y: Matrix):
    """``tr(XY)`` for 2x2 matrices."""
    return (X @ Y)[0, 0] + (X @ Y)[1, 1]


def from_coordinates(domain, coordinates: Sequence) -> Matrix:
    """The element ``e E + h H + f F`` of sl(2)."""
    e, h, f = (domain.convert(c) for c in coordinates)
    return Matrix(domain, [[h, e], [f, -h]])


def to_coordinates(X: Matrix) -> tuple:
    return (X[0, 1], X[0, 0], X[1, 0])


@dataclass(frozen=True)
class SL2Rep:
    """A 2x2 matrix per generator; ``det = 1`` is checked by validation, not here."""

    tower: FieldTower
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        converted = []
        for matrix in self.matrices:
            if matrix.shape != (2, 2):
                raise RepresentationError(f"expected a 2x2 matrix, got {matrix.shape}")
            converted.append(matrix.convert_to(self.tower))
        object.__setattr__(self, "matrices", tuple(converted))

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_entries(
        cls, tower: FieldTower, generators: Sequence[str], entries: Mapping[str, Sequence[Sequence]]
    ) -> "SL2Rep":
        """Build from ``{generator: [[a, b], [c, d]]}``; entries are anything ``tower.scalar`` accepts."""
        missing = [name for name in generators if name not in entries]
        if missing:
            raise RepresentationError(f"no matrix for generator(s) {', '.join(missing)}")
        unknown = sorted(set(entries) - set(generators))
        if unknown:
            raise RepresentationError(f"matrix given for undeclared generator(s) {', '.join(unknown)}")
        return cls(tower, tuple(Matrix(tower, entries[name]) for name in generators))

    @property
    def rank(self) -> int:
        return len(self.matrices)

    def generator(self, index: int, exponent: int = 1) -> Matrix:
        matrix = self.matrices[index]
        return matrix if exponent > 0 else inverse2(matrix)

    def evaluate(self, word: Word) -> Matrix:
        result = Matrix.identity(self.tower, 2)
        for index, exponent in word:
            result = result @ self.generator(index, exponent)
        return result

    def conjugate(self, P: Matrix) -> "SL2Rep":
        """``g -> P rho(g) P^-1``."""
        P = P.convert_to(self.tower)
        P_inv = inverse2(P)
        return SL2Rep(self.tower, tuple(P @ A @ P_inv for A in self.matrices))

    def with_tower(self, tower: FieldTower) -> "SL2Rep":
        return SL2Rep(tower, tuple(A.map(tower.embed, tower) for A in self.matrices))

    def format(self, names: Sequence[str]) -> dict[str, str]:
        return {name: str(A) for name, A in zip(names, self.matrices)}


def random_sl2(rng: random.Random, tower: FieldTower, bound: int = 3) -> Matrix:
    """Upper unipotent times lower unipotent times a diagonal, with small rational entries."""
    x, y = rng.randint(-bound, bound), rng.randint(-bound, bound)
    u = Fraction(rng.choice((1, -1)) * rng.randint(1, bound), rng.randint(1, bound))
    upper = Matrix(tower, [[1, x], [0, 1]])
    lower = Matrix(tower, [[1, 0], [y, 1]])
    return upper @ lower @ Matrix.diag(tower, [u, 1 / u])
