"""
Exact, fraction-free linear algebra.

Elimination is Bareiss style: every intermediate entry is a minor of the input,
so the division by the previous pivot is exact in the entry domain
(``FieldTower``, ``LaurentRing``). Matrices over ``RatFuncField`` have their row
denominators cleared first and are processed over the Laurent ring.
"""
from __future__ import annotations

import logging
from typing import Literal, Sequence

from torsionlab.exceptions import LinearAlgebraError, NotInRowSpace
from torsionlab.ring.laurent import LaurentPoly, divide_exact
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.ratfunc import RatFuncField

logger = logging.getLogger(__name__)

Strategy = Literal["leftmost", "rightmost"]


def clear_denominators(M: Matrix) -> tuple[Matrix, tuple[LaurentPoly, ...]]:
    """Return ``(N, m)`` with ``N`` over the Laurent ring and ``N[i] = m[i] * M[i]`` row by row."""
    if not isinstance(M.domain, RatFuncField):
        raise LinearAlgebraError(f"{M.domain} has no denominators to clear")
    ring = M.domain.ring
    rows = []
    multipliers = []
    for row in M.rows:
        multiplier = ring.one
        seen: list[LaurentPoly] = []
        for entry in row:
            if entry.den != ring.one and entry.den not in seen:
                seen.append(entry.den)
                multiplier = multiplier * entry.den
        rows.append([entry.num * divide_exact(multiplier, entry.den) for entry in row])
        multipliers.append(multiplier)
    return Matrix._trusted(ring, rows, M.shape), tuple(multipliers)


def _integral(M: Matrix) -> Matrix:
    if isinstance(M.domain, RatFuncField):
        return clear_denominators(M)[0]
    return M


def determinant(M: Matrix):
    """Exact determinant, an element of ``M.domain.fraction_field``; a 0x0 matrix has determinant 1."""
    if not M.is_square:
        raise LinearAlgebraError(f"determinant of a non-square {M.shape} matrix")
    target = M.domain.fraction_field
    if isinstance(M.domain, RatFuncField):
        cleared, multipliers = clear_denominators(M)
        value = target.convert(_bareiss_determinant(cleared))
        denominator = M.domain.ring.one
        for multiplier in multipliers:
            denominator = denominator * multiplier
        return value / target.convert(denominator)
    return target.convert(_bareiss_determinant(M))


def _bareiss_determinant(M: Matrix):
    domain = M.domain
    n = M.nrows
    if n == 0:
        return domain.one
    A = [list(row) for row in M.rows]
    sign = 1
    previous = domain.one
    for k in range(n - 1):
        if not A[k][k]:
            pivot = next((i for i in range(k + 1, n) if A[i][k]), None)
            if pivot is None:
                return domain.zero
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = domain.exquo(A[i][j] * A[k][k] - A[i][k] * A[k][j], previous)
            A[i][k] = domain.zero
        previous = A[k][k]
    result = A[n - 1][n - 1]
    return -result if sign < 0 else result


def pivot_columns(M: Matrix) -> tuple[int, ...]:
    """Columns that are not combinations of earlier columns (greedy from the left)."""
    A = _integral(M)
    domain = A.domain
    rows = [list(row) for row in A.rows]
    nrows = len(rows)
    pivots: list[int] = []
    previous = domain.one
    r = 0
    for j in range(A.ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][j]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r][j]
        for i in range(r + 1, nrows):
            factor = rows[i][j]
            for c in range(j + 1, A.ncols):
                rows[i][c] = domain.exquo(head * rows[i][c] - factor * rows[r][c], previous)
            rows[i][j] = domain.zero
        previous = head
        pivots.append(j)
        r += 1
    logger.debug("pivot columns of a %sx%s matrix: %s", M.nrows, M.ncols, pivots)
    return tuple(pivots)


def rank(M: Matrix) -> int:
    return len(pivot_columns(M))


def independent_rows(M: Matrix, strategy: Strategy = "leftmost") -> tuple[int, ...]:
    """Indices of a maximal independent set of rows, chosen greedily from the top or the bottom."""
    if strategy == "leftmost":
        return pivot_columns(M.T)
    if strategy == "rightmost":
        last = M.nrows - 1
        reversed_rows = M.select_rows(list(range(last, -1, -1)))
        return tuple(sorted(last - i for i in pivot_columns(reversed_rows.T)))
    raise ValueError(f"unknown pivot strategy {strategy!r}")


def solve_left(M: Matrix, vector: Sequence, strategy: Strategy = "leftmost") -> tuple:
    """Return ``x`` with ``x @ M = vector`` over the fraction field; raises ``NotInRowSpace``."""
    if len(vector) != M.ncols:
        raise LinearAlgebraError(f"vector of length {len(vector)} against a {M.shape} matrix")
    field = M.domain.fraction_field
    M = M.convert_to(field)
    target = tuple(field.convert(v) for v in vector)
    solution = [field.zero] * M.nrows
    rows = independent_rows(M, strategy)
    if rows:
        independent = M.select_rows(rows)
        columns = pivot_columns(independent)
        square = independent.select_cols(columns)
        denominator = determinant(square)
        projected = [target[j] for j in columns]
        for k, i in enumerate(rows):
            solution[i] = determinant(square.replace_row(k, projected)) / denominator
    if M.apply_left(solution) != target:
        raise NotInRowSpace(f"vector is not in the row space of the {M.shape} matrix")
    return tuple(solution)
