"""
Based chain complexes over a field and their sign-determined torsion.

Chains are row vectors. ``d(i)`` is the ``dims[i] x dims[i-1]`` matrix whose row
``r`` is the boundary of the ``r``-th basis vector of ``C_i``, so
``d(i+1) @ d(i) == 0``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from torsionlab.exceptions import InvalidComplex, InvalidHomologyBasis, NotAcyclicWithoutBases
from torsionlab.ring.linalg import Strategy, determinant, independent_rows, rank
from torsionlab.ring.matrices import Matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ambiguity:
    """Which part of the unit ``± t^m`` a torsion value is determined up to."""

    sign_known: bool = True
    monomial_known: bool = True

    @classmethod
    def exact(cls) -> "Ambiguity":
        return cls(True, True)

    @classmethod
    def unit(cls) -> "Ambiguity":
        return cls(False, False)

    @classmethod
    def monomial(cls) -> "Ambiguity":
        return cls(True, False)

    def __str__(self) -> str:
        if self.sign_known and self.monomial_known:
            return "exact"
        if self.sign_known:
            return "up to t^m"
        if self.monomial_known:
            return "up to ±1"
        return "up to ± t^m"


@dataclass(frozen=True)
class TorsionResult:
    value: object
    ambiguity: Ambiguity = field(default_factory=Ambiguity.exact)
    notes: tuple[str, ...] = ()

    def with_notes(self, *notes: str) -> "TorsionResult":
        return TorsionResult(self.value, self.ambiguity, self.notes + notes)

    def with_ambiguity(self, ambiguity: Ambiguity) -> "TorsionResult":
        return TorsionResult(self.value, ambiguity, self.notes)


class BasedChainComplex:
    """``0 -> C_n -> ... -> C_0 -> 0`` with the standard bases and optional homology bases."""

    def __init__(
        self,
        field,
        dims: Sequence[int],
        boundaries: Sequence[Matrix],
        homology_bases: Optional[Sequence[Optional[Matrix]]] = None,
    ):
        self.field = field.fraction_field
        self.dims = tuple(int(d) for d in dims)
        if not self.dims or any(d < 0 for d in self.dims):
            raise InvalidComplex(f"invalid dimensions {dims}")
        if len(boundaries) != len(self.dims) - 1:
            raise InvalidComplex(
                f"{len(self.dims)} chain groups need {len(self.dims) - 1} boundary maps, got {len(boundaries)}"
            )
        self.boundaries = tuple(d.convert_to(self.field) for d in boundaries)
        for i, d in enumerate(self.boundaries, start=1):
            if d.shape != (self.dims[i], self.dims[i - 1]):
                raise InvalidComplex(
                    f"d_{i} has shape {d.shape}, expected {(self.dims[i], self.dims[i - 1])}"
                )
        for i in range(1, self.length):
            if not (self.d(i + 1) @ self.d(i)).is_zero:
                raise InvalidComplex(f"d_{i} d_{i + 1} is not zero")
        self.homology_bases: Optional[tuple[Matrix, ...]] = None
        if homology_bases is not None:
            if len(homology_bases) != len(self.dims):
                raise InvalidComplex("one homology basis per degree is needed")
            self.homology_bases = tuple(
                Matrix.zeros(self.field, 0, self.dims[i]) if h is None else h.convert_to(self.field)
                for i, h in enumerate(homology_bases)
            )

    @property
    def length(self) -> int:
        return len(self.dims) - 1

    def dim(self, i: int) -> int:
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def d(self, i: int) -> Matrix:
        """Boundary ``C_i -> C_{i-1}``; zero maps outside ``1..length``."""
        if 1 <= i <= self.length:
            return self.boundaries[i - 1]
        return Matrix.zeros(self.field, self.dim(i), self.dim(i - 1))

    def homology_basis(self, i: int) -> Matrix:
        if self.homology_bases is None or not 0 <= i < len(self.dims):
            return Matrix.zeros(self.field, 0, self.dim(i))
        return self.homology_bases[i]

    def padded(self, length: int) -> "BasedChainComplex":
        """The same complex viewed as having ``length + 1`` chain groups."""
        if length < self.length:
            raise InvalidComplex(f"cannot shorten a complex of length {self.length} to {length}")
        dims = self.dims + (0,) * (length - self.length)
        boundaries = [self.d(i) for i in range(1, length + 1)]
        homology = None
        if self.homology_bases is not None:
            homology = [self.homology_basis(i) for i in range(length + 1)]
        return BasedChainComplex(self.field, dims, boundaries, homology)

    def with_homology_bases(self, bases: Sequence[Optional[Matrix]]) -> "BasedChainComplex":
        return BasedChainComplex(self.field, self.dims, self.boundaries, bases)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def __repr__(self) -> str:
        return f"BasedChainComplex(dims={self.dims}, field={self.field})"


def homology_rank(C: BasedChainComplex) -> tuple[int, ...]:
    """``dim H_i = dim C_i - rank d_i - rank d_{i+1}``."""
    ranks = [rank(C.d(i)) for i in range(C.length + 2)]
    return tuple(C.dims[i] - ranks[i] - ranks[i + 1] for i in range(len(C.dims)))


def validate_homology_bases(C: BasedChainComplex, betti: Sequence[int]):
    for i, expected in enumerate(betti):
        h = C.homology_basis(i)
        if h.nrows != expected:
            raise InvalidHomologyBasis(i, f"{h.nrows} chains given, homology has rank {expected}")
        if h.nrows == 0:
            continue
        if h.ncols != C.dims[i]:
            raise InvalidHomologyBasis(i, f"chains have length {h.ncols}, C_{i} has dimension {C.dims[i]}")
        if not (h @ C.d(i)).is_zero:
            raise InvalidHomologyBasis(i, "a chain is not a cycle")
        boundaries = C.d(i + 1)
        stacked = Matrix.vstack(C.field, C.dims[i], boundaries, h)
        if rank(stacked) != rank(boundaries) + expected:
            raise InvalidHomologyBasis(i, "classes are dependent modulo boundaries")


def sign_exponent(dims: Sequence[int], betti: Sequence[int]) -> int:
    """``|C| = sum_k alpha_k beta_k`` with ``alpha_k``, ``beta_k`` the partial sums up to ``k``, mod 2."""
    alpha = beta = total = 0
    for dim, b in zip(dims, betti):
        alpha += dim
        beta += b
        total += alpha * beta
    return total % 2


def torsion_of_complex(C: BasedChainComplex, strategy: Strategy = "leftmost") -> TorsionResult:
    """Sign-determined torsion ``(-1)^|C| prod_i [d(b_{i+1}) h_i b_i / c_i]^((-1)^(i+1))``."""
    betti = homology_rank(C)
    if C.homology_bases is not None:
        validate_homology_bases(C, betti)
    elif any(betti):
        raise NotAcyclicWithoutBases(betti)
    chosen = [independent_rows(C.d(i), strategy) for i in range(C.length + 2)]
    value = C.field.one
    for i in range(len(C.dims)):
        identity = Matrix.identity(C.field, C.dims[i])
        transition = Matrix.vstack(
            C.field,
            C.dims[i],
            C.d(i + 1).select_rows(chosen[i + 1]),
            C.homology_basis(i),
            identity.select_rows(chosen[i]),
        )
        factor = determinant(transition)
        logger.debug("degree %d: b = %s, determinant %s", i, chosen[i], factor)
        value = value / factor if i % 2 == 0 else value * factor
    if sign_exponent(C.dims, betti):
        value = -value
    return TorsionResult(value, Ambiguity.exact(), (f"pivot strategy {strategy}",))
