"""
Seeded random complexes and short exact sequences over ``Q(t)``.

Sequences are direct sums of elementary pieces (an acyclic pair in ``C'`` or
``C''``, a homology class in ``C'`` or ``C''``, and a pair joined by the
connecting map), hidden behind random changes of basis that keep the bases
compatible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from torsionlab.complex.chain import BasedChainComplex
from torsionlab.complex.exact import ShortExactSequence, canonical_maps
from torsionlab.ring.laurent import LaurentRing
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tower import FieldTower

DEFAULT_FIELD = LaurentRing(("t",), FieldTower()).fraction_field

PIECES = ("sub_pair", "quotient_pair", "sub_class", "quotient_class", "connecting")


def random_entry(rng: random.Random, field, bound: int = 2):
    """A small Laurent polynomial, possibly zero."""
    ring = field.ring
    terms = [
        (tuple(rng.randint(-1, 1) for _ in ring.vars), rng.randint(-bound, bound))
        for _ in range(rng.randint(1, 2))
    ]
    return field.convert(ring.from_terms(terms))


def random_nonzero(rng: random.Random, field, bound: int = 3):
    while True:
        value = random_entry(rng, field, bound)
        if value:
            return value


def random_unit(rng: random.Random, field):
    """A nonzero rational times a monomial, so that its inverse stays a Laurent polynomial."""
    ring = field.ring
    coefficient = rng.choice((1, -1, 2, -2, 3))
    return field.convert(ring.monomial(tuple(rng.randint(-1, 1) for _ in ring.vars), coefficient))


def random_base_change(rng: random.Random, field, n: int) -> tuple[Matrix, Matrix]:
    """A random invertible ``n x n`` matrix and its inverse, built from elementary operations."""
    P = [list(row) for row in Matrix.identity(field, n).rows]
    inverse = [list(row) for row in Matrix.identity(field, n).rows]
    if n > 1:
        for _ in range(n):
            i, j = rng.sample(range(n), 2)
            c = random_entry(rng, field)
            P[i] = [a + c * b for a, b in zip(P[i], P[j])]
            for row in inverse:
                row[j] = row[j] - c * row[i]
    for i in range(n):
        s = random_unit(rng, field)
        P[i] = [a * s for a in P[i]]
        for row in inverse:
            row[i] = row[i] / s
    return Matrix(field, P, (n, n)), Matrix(field, inverse, (n, n))


@dataclass
class _Draft:
    """Sparse description of a complex while pieces are being added."""

    length: int
    dims: list[int] = dataclass_field(default_factory=list)
    entries: list[dict] = dataclass_field(default_factory=list)
    homology: list[list[dict]] = dataclass_field(default_factory=list)

    def __post_init__(self):
        self.dims = [0] * (self.length + 1)
        self.entries = [{} for _ in range(self.length + 1)]
        self.homology = [[] for _ in range(self.length + 1)]

    def add(self, degree: int) -> int:
        self.dims[degree] += 1
        return self.dims[degree] - 1

    def boundary(self, field, k: int) -> Matrix:
        return _dense(field, self.entries[k], self.dims[k], self.dims[k - 1])

    def homology_basis(self, field, k: int) -> Matrix:
        return Matrix(
            field,
            [[row.get(j, field.zero) for j in range(self.dims[k])] for row in self.homology[k]],
            (len(self.homology[k]), self.dims[k]),
        )


def _dense(field, entries: dict, nrows: int, ncols: int) -> Matrix:
    return Matrix(
        field, [[entries.get((i, j), field.zero) for j in range(ncols)] for i in range(nrows)], (nrows, ncols)
    )


def _randomize_homology(rng: random.Random, field, h: Matrix, boundaries: Matrix) -> Matrix:
    """Move each representative by a random boundary."""
    if not h.nrows or not boundaries.nrows:
        return h
    shift = Matrix(
        field,
        [[random_entry(rng, field) for _ in range(boundaries.nrows)] for _ in range(h.nrows)],
        (h.nrows, boundaries.nrows),
    )
    return h + shift @ boundaries


def random_acyclic_complex(
    rng: random.Random, max_dim: int = 4, length: Optional[int] = None, field=DEFAULT_FIELD
) -> BasedChainComplex:
    """A random acyclic complex: a sum of pairs ``K -[u]-> K`` in a random basis."""
    length = rng.randint(1, 3) if length is None else length
    draft = _Draft(length)
    for _ in range(rng.randint(1, 2 * length + 1)):
        k = rng.randint(1, length)
        if draft.dims[k] >= max_dim or draft.dims[k - 1] >= max_dim:
            continue
        draft.entries[k][(draft.add(k), draft.add(k - 1))] = random_nonzero(rng, field)
    changes = [random_base_change(rng, field, n) for n in draft.dims]
    boundaries = [
        changes[k][0] @ draft.boundary(field, k) @ changes[k - 1][1] for k in range(1, length + 1)
    ]
    return BasedChainComplex(field, draft.dims, boundaries)


def random_exact_sequence(
    rng: random.Random, max_dim: int = 4, length: Optional[int] = None, field=DEFAULT_FIELD
) -> ShortExactSequence:
    """A random ``0 -> C' -> C -> C'' -> 0`` with homology bases and compatible bases."""
    length = rng.randint(1, 3) if length is None else length
    sub, quotient = _Draft(length), _Draft(length)
    connecting: list[dict] = [{} for _ in range(length + 1)]
    # (degree, "sub" or "quotient", index, scalar) for the classes of C
    total_classes: list[tuple[int, str, int, object]] = []

    def room(*degrees: int) -> bool:
        return all(sub.dims[k] + quotient.dims[k] < max_dim for k in degrees)

    for _ in range(rng.randint(1, 3 * (length + 1))):
        piece = rng.choice(PIECES)
        if piece in ("sub_pair", "quotient_pair", "connecting"):
            k = rng.randint(1, length)
            if not room(k, k - 1):
                continue
            if piece == "connecting":
                b, a = quotient.add(k), sub.add(k - 1)
                quotient.homology[k].append({b: random_nonzero(rng, field)})
                sub.homology[k - 1].append({a: random_nonzero(rng, field)})
                connecting[k][(b, a)] = random_nonzero(rng, field)
            else:
                draft = sub if piece == "sub_pair" else quotient
                draft.entries[k][(draft.add(k), draft.add(k - 1))] = random_nonzero(rng, field)
        else:
            k = rng.randint(0, length)
            if not room(k):
                continue
            draft = sub if piece == "sub_class" else quotient
            index = draft.add(k)
            draft.homology[k].append({index: random_nonzero(rng, field)})
            side = "sub" if draft is sub else "quotient"
            total_classes.append((k, side, index, random_nonzero(rng, field)))

    dims = [a + b for a, b in zip(sub.dims, quotient.dims)]
    boundaries = []
    for k in range(1, length + 1):
        boundaries.append(
            Matrix.block(
                field,
                [
                    [sub.boundary(field, k), Matrix.zeros(field, sub.dims[k], quotient.dims[k - 1])],
                    [
                        _dense(field, connecting[k], quotient.dims[k], sub.dims[k - 1]),
                        quotient.boundary(field, k),
                    ],
                ],
            )
        )
    total_homology = []
    for k in range(length + 1):
        rows = []
        for degree, side, index, scalar in total_classes:
            if degree != k:
                continue
            row = [field.zero] * dims[k]
            row[index if side == "sub" else sub.dims[k] + index] = scalar
            rows.append(row)
        total_homology.append(Matrix(field, rows, (len(rows), dims[k])))

    sub_changes = [random_base_change(rng, field, n) for n in sub.dims]
    quotient_changes = [random_base_change(rng, field, n) for n in quotient.dims]
    total_changes = []
    for k in range(length + 1):
        (P1, P1_inv), (P2, P2_inv) = sub_changes[k], quotient_changes[k]
        T = Matrix(
            field,
            [[random_entry(rng, field) for _ in range(sub.dims[k])] for _ in range(quotient.dims[k])],
            (quotient.dims[k], sub.dims[k]),
        )
        Q = Matrix.block(field, [[P1, Matrix.zeros(field, sub.dims[k], quotient.dims[k])], [T, P2]])
        Q_inv = Matrix.block(
            field,
            [
                [P1_inv, Matrix.zeros(field, sub.dims[k], quotient.dims[k])],
                [-(P2_inv @ T @ P1_inv), P2_inv],
            ],
        )
        total_changes.append((Q, Q_inv))

    def rebased(draft_dims, raw_boundaries, raw_homology, changes) -> BasedChainComplex:
        new_boundaries = [
            changes[k][0] @ raw_boundaries[k - 1] @ changes[k - 1][1] for k in range(1, length + 1)
        ]
        homology = []
        for k in range(length + 1):
            h = raw_homology[k] @ changes[k][1]
            following = new_boundaries[k] if k < length else Matrix.zeros(field, 0, draft_dims[k])
            homology.append(_randomize_homology(rng, field, h, following))
        return BasedChainComplex(field, draft_dims, new_boundaries, homology)

    C1 = rebased(
        sub.dims,
        [sub.boundary(field, k) for k in range(1, length + 1)],
        [sub.homology_basis(field, k) for k in range(length + 1)],
        sub_changes,
    )
    C2 = rebased(
        quotient.dims,
        [quotient.boundary(field, k) for k in range(1, length + 1)],
        [quotient.homology_basis(field, k) for k in range(length + 1)],
        quotient_changes,
    )
    C = rebased(dims, boundaries, total_homology, total_changes)
    inclusions, projections = canonical_maps(field, sub.dims, quotient.dims)
    return ShortExactSequence(C1, C, C2, inclusions, projections)
