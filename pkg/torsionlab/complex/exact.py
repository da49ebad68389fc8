"""
Short exact sequences ``0 -> C' -> C -> C'' -> 0`` of based complexes and the
multiplicativity of torsion along them.

Chain maps follow the row-vector convention of :mod:`torsionlab.complex.chain`:
the inclusion in degree ``k`` is a ``dim C'_k x dim C_k`` matrix and the
projection a ``dim C_k x dim C''_k`` matrix.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from torsionlab.complex.chain import BasedChainComplex, homology_rank, torsion_of_complex
from torsionlab.exceptions import IncompatibleBases, NotExact
from torsionlab.ring.linalg import determinant, rank, solve_left
from torsionlab.ring.matrices import Matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShortExactSequence:
    sub: BasedChainComplex
    total: BasedChainComplex
    quotient: BasedChainComplex
    inclusions: tuple[Matrix, ...]
    projections: tuple[Matrix, ...]


@dataclass(frozen=True)
class MultiplicativityReport:
    holds: bool
    lhs: object
    rhs: object
    sub_torsion: object
    quotient_torsion: object
    homology_torsion: object
    alpha: int
    epsilon: int
    homology_dims: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "sub_torsion": str(self.sub_torsion),
            "quotient_torsion": str(self.quotient_torsion),
            "homology_torsion": str(self.homology_torsion),
            "alpha": self.alpha,
            "epsilon": self.epsilon,
        }


def _partial_sums(values: Sequence[int]) -> list[int]:
    sums, total = [], 0
    for value in values:
        total += value
        sums.append(total)
    return sums


def alpha_sign(sub_dims: Sequence[int], quotient_dims: Sequence[int]) -> int:
    """``sum_i alpha_{i-1}(C') alpha_i(C'')`` mod 2."""
    a1, a2 = _partial_sums(sub_dims), _partial_sums(quotient_dims)
    return sum(a1[i - 1] * a2[i] for i in range(1, len(a2))) % 2


def epsilon_sign(sub_betti: Sequence[int], betti: Sequence[int], quotient_betti: Sequence[int]) -> int:
    """``sum_i (beta_i(C) + 1)(beta_i(C') + beta_i(C'')) + beta_{i-1}(C') beta_i(C'')`` mod 2."""
    b1, b, b2 = _partial_sums(sub_betti), _partial_sums(betti), _partial_sums(quotient_betti)
    total = 0
    for i in range(len(b)):
        total += (b[i] + 1) * (b1[i] + b2[i])
        if i:
            total += b1[i - 1] * b2[i]
    return total % 2


def _padded_maps(maps: Sequence[Matrix], field, rows: Sequence[int], cols: Sequence[int]) -> list[Matrix]:
    padded = []
    for k in range(len(rows)):
        if k < len(maps) and maps[k] is not None:
            padded.append(maps[k].convert_to(field))
        else:
            padded.append(Matrix.zeros(field, rows[k], cols[k]))
    return padded


def check_exactness(sequence: ShortExactSequence) -> ShortExactSequence:
    """Pad the three complexes to a common length and verify exactness and compatible bases."""
    length = max(sequence.sub.length, sequence.total.length, sequence.quotient.length)
    sub = sequence.sub.padded(length)
    total = sequence.total.padded(length)
    quotient = sequence.quotient.padded(length)
    field = total.field
    inclusions = _padded_maps(sequence.inclusions, field, sub.dims, total.dims)
    projections = _padded_maps(sequence.projections, field, total.dims, quotient.dims)

    for k in range(length + 1):
        i_k, p_k = inclusions[k], projections[k]
        if i_k.shape != (sub.dims[k], total.dims[k]) or p_k.shape != (total.dims[k], quotient.dims[k]):
            raise NotExact(k, "maps do not match the chain group dimensions")
        if total.dims[k] != sub.dims[k] + quotient.dims[k]:
            raise NotExact(
                k, "dimensions do not add up", sub=sub.dims[k], total=total.dims[k], quotient=quotient.dims[k]
            )
        injective = rank(i_k)
        if injective != sub.dims[k]:
            raise NotExact(k, "inclusion is not injective", rank=injective, expected=sub.dims[k])
        surjective = rank(p_k)
        if surjective != quotient.dims[k]:
            raise NotExact(k, "projection is not onto", rank=surjective, expected=quotient.dims[k])
        if not (i_k @ p_k).is_zero:
            raise NotExact(k, "projection does not vanish on the image of the inclusion")
        if k:
            if not (sub.d(k) @ inclusions[k - 1] - i_k @ total.d(k)).is_zero:
                raise NotExact(k, "inclusion is not a chain map")
            if not (total.d(k) @ projections[k - 1] - p_k @ quotient.d(k)).is_zero:
                raise NotExact(k, "projection is not a chain map")
        lifts = [solve_left(p_k, row) for row in Matrix.identity(field, quotient.dims[k]).rows]
        frame = Matrix.vstack(field, total.dims[k], i_k, Matrix(field, lifts, (len(lifts), total.dims[k])))
        value = determinant(frame)
        if value != 1:
            raise IncompatibleBases(k, value)
    return ShortExactSequence(sub, total, quotient, tuple(inclusions), tuple(projections))


def homology_coordinates(C: BasedChainComplex, degree: int, cycle: Sequence) -> tuple:
    """Coordinates of the class of ``cycle`` in the homology basis of ``C`` in ``degree``."""
    h = C.homology_basis(degree)
    frame = Matrix.vstack(C.field, C.dim(degree), h, C.d(degree + 1))
    return solve_left(frame, cycle)[: h.nrows]


def homology_sequence(sequence: ShortExactSequence) -> BasedChainComplex:
    """The long exact homology sequence as an acyclic complex based by the homology bases.

    ``H_{3i+2} = H_i(C')``, ``H_{3i+1} = H_i(C)`` and ``H_{3i} = H_i(C'')``.
    """
    sub, total, quotient = sequence.sub, sequence.total, sequence.quotient
    field = total.field
    length = total.length
    dims = []
    for k in range(length + 1):
        dims.extend([
            quotient.homology_basis(k).nrows,
            total.homology_basis(k).nrows,
            sub.homology_basis(k).nrows,
        ])
    boundaries = []
    for j in range(1, 3 * length + 3):
        k, position = divmod(j, 3)
        if position == 1:
            # p_*: H_k(C) -> H_k(C'')
            rows = [
                homology_coordinates(quotient, k, sequence.projections[k].convert_to(field).apply_left(h))
                for h in total.homology_basis(k).rows
            ]
        elif position == 2:
            # i_*: H_k(C') -> H_k(C)
            rows = [
                homology_coordinates(total, k, sequence.inclusions[k].apply_left(h))
                for h in sub.homology_basis(k).rows
            ]
        else:
            # connecting map H_k(C'') -> H_{k-1}(C')
            rows = []
            for h in quotient.homology_basis(k).rows:
                lift = solve_left(sequence.projections[k], h)
                image = total.d(k).apply_left(lift)
                preimage = solve_left(sequence.inclusions[k - 1], image)
                rows.append(homology_coordinates(sub, k - 1, preimage))
        boundaries.append(Matrix(field, rows, (dims[j], dims[j - 1])))
    return BasedChainComplex(field, dims, boundaries)


def multiplicativity_check(sequence: ShortExactSequence) -> MultiplicativityReport:
    """Compare ``Tor(C)`` with ``(-1)^(alpha + epsilon) Tor(C') Tor(C'') Tor(H)``."""
    sequence = check_exactness(sequence)
    sub, total, quotient = sequence.sub, sequence.total, sequence.quotient
    lhs = torsion_of_complex(total).value
    sub_torsion = torsion_of_complex(sub).value
    quotient_torsion = torsion_of_complex(quotient).value
    homology = homology_sequence(sequence)
    homology_torsion = torsion_of_complex(homology).value
    alpha = alpha_sign(sub.dims, quotient.dims)
    epsilon = epsilon_sign(homology_rank(sub), homology_rank(total), homology_rank(quotient))
    rhs = sub_torsion * quotient_torsion * homology_torsion
    if (alpha + epsilon) % 2:
        rhs = -rhs
    holds = lhs == rhs
    logger.debug("multiplicativity: %s against %s (alpha %d, epsilon %d)", lhs, rhs, alpha, epsilon)
    return MultiplicativityReport(
        holds, lhs, rhs, sub_torsion, quotient_torsion, homology_torsion, alpha, epsilon, homology.dims
    )


def direct_sum_sequence(first: BasedChainComplex, second: BasedChainComplex) -> ShortExactSequence:
    """``0 -> first -> first + second -> second -> 0`` with block diagonal boundaries."""
    length = max(first.length, second.length)
    first, second = first.padded(length), second.padded(length)
    field = first.field
    dims = [a + b for a, b in zip(first.dims, second.dims)]
    boundaries = [
        Matrix.block(
            field,
            [
                [first.d(k), Matrix.zeros(field, first.dims[k], second.dims[k - 1])],
                [Matrix.zeros(field, second.dims[k], first.dims[k - 1]), second.d(k)],
            ],
        )
        for k in range(1, length + 1)
    ]
    homology = None
    if first.homology_bases is not None or second.homology_bases is not None:
        homology = [
            Matrix.block(
                field,
                [
                    [first.homology_basis(k), Matrix.zeros(field, first.homology_basis(k).nrows, second.dims[k])],
                    [Matrix.zeros(field, second.homology_basis(k).nrows, first.dims[k]), second.homology_basis(k)],
                ],
            )
            for k in range(length + 1)
        ]
    total = BasedChainComplex(field, dims, boundaries, homology)
    inclusions, projections = canonical_maps(field, first.dims, second.dims)
    return ShortExactSequence(first, total, second, inclusions, projections)


def canonical_maps(field, sub_dims: Sequence[int], quotient_dims: Sequence[int]):
    """``[I 0]`` inclusions and ``[0; I]`` projections for ``C_k = C'_k + C''_k``."""
    inclusions = tuple(
        Matrix.hstack(field, a, Matrix.identity(field, a), Matrix.zeros(field, a, b))
        for a, b in zip(sub_dims, quotient_dims)
    )
    projections = tuple(
        Matrix.vstack(field, b, Matrix.zeros(field, a, b), Matrix.identity(field, b))
        for a, b in zip(sub_dims, quotient_dims)
    )
    return inclusions, projections
