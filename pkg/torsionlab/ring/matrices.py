"""
Immutable dense matrices over the library's domains.

A domain is a :class:`~torsionlab.ring.tower.FieldTower`, a
:class:`~torsionlab.ring.laurent.LaurentRing` or a
:class:`~torsionlab.ring.ratfunc.RatFuncField`; each provides ``zero``,
``one``, ``convert``, ``exquo``, ``is_field`` and ``fraction_field``.
"""
from __future__ import annotations

from typing import Any, Callable, Iterable, Optional, Sequence


class Matrix:
    __slots__ = ("domain", "rows", "shape")

    def __init__(self, domain, rows: Iterable[Iterable[Any]], shape: Optional[tuple[int, int]] = None):
        self.domain = domain
        self.rows = tuple(tuple(domain.convert(entry) for entry in row) for row in rows)
        if shape is None:
            if not self.rows:
                raise ValueError("the shape of a matrix without rows must be given")
            shape = (len(self.rows), len(self.rows[0]))
        self.shape = shape
        if len(self.rows) != shape[0] or any(len(row) != shape[1] for row in self.rows):
            raise ValueError(f"rows do not match the shape {shape}")

    @classmethod
    def _trusted(cls, domain, rows, shape) -> "Matrix":
        matrix = cls.__new__(cls)
        matrix.domain = domain
        matrix.rows = tuple(tuple(row) for row in rows)
        matrix.shape = shape
        return matrix

    # constructors
    @classmethod
    def zeros(cls, domain, nrows: int, ncols: int) -> "Matrix":
        return cls._trusted(domain, [[domain.zero] * ncols for _ in range(nrows)], (nrows, ncols))

    @classmethod
    def identity(cls, domain, n: int) -> "Matrix":
        return cls.diag(domain, [domain.one] * n)

    @classmethod
    def diag(cls, domain, entries: Sequence[Any]) -> "Matrix":
        n = len(entries)
        rows = [[domain.zero] * n for _ in range(n)]
        for i, entry in enumerate(entries):
            rows[i][i] = domain.convert(entry)
        return cls._trusted(domain, rows, (n, n))

    @classmethod
    def vstack(cls, domain, ncols: int, *blocks: "Matrix") -> "Matrix":
        rows: list = []
        for block in blocks:
            if block.ncols != ncols:
                raise ValueError(f"cannot stack a {block.shape} matrix under {ncols} columns")
            rows.extend(block.convert_to(domain).rows)
        return cls._trusted(domain, rows, (len(rows), ncols))

    @classmethod
    def hstack(cls, domain, nrows: int, *blocks: "Matrix") -> "Matrix":
        for block in blocks:
            if block.nrows != nrows:
                raise ValueError(f"cannot place a {block.shape} matrix beside {nrows} rows")
        converted = [block.convert_to(domain) for block in blocks]
        rows = [sum((block.rows[i] for block in converted), ()) for i in range(nrows)]
        return cls._trusted(domain, rows, (nrows, sum(block.ncols for block in blocks)))

    @classmethod
    def block(cls, domain, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix; every block row must share its row count."""
        if not blocks:
            return cls.zeros(domain, 0, 0)
        ncols = sum(block.ncols for block in blocks[0])
        rows = [cls.hstack(domain, row[0].nrows, *row) for row in blocks]
        return cls.vstack(domain, ncols, *rows)

    # shape
    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, index: tuple[int, int]):
        i, j = index
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    # algebra
    def convert_to(self, domain) -> "Matrix":
        if domain is self.domain or domain == self.domain:
            return self
        return Matrix(domain, self.rows, self.shape)

    def map(self, function: Callable, domain=None) -> "Matrix":
        domain = domain or self.domain
        return Matrix(domain, [[function(entry) for entry in row] for row in self.rows], self.shape)

    @property
    def T(self) -> "Matrix":
        if not self.nrows:
            return Matrix.zeros(self.domain, self.ncols, 0)
        return Matrix._trusted(self.domain, zip(*self.rows), (self.ncols, self.nrows))

    def transpose(self) -> "Matrix":
        return self.T

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        other = other.convert_to(self.domain)
        zero = self.domain.zero
        columns = other.T.rows
        rows = []
        for row in self.rows:
            new_row = []
            for column in columns:
                total = zero
                for a, b in zip(row, column):
                    if a and b:
                        total = total + a * b
                new_row.append(total)
            rows.append(new_row)
        return Matrix._trusted(self.domain, rows, (self.nrows, other.ncols))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        other = other.convert_to(self.domain)
        rows = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        return Matrix._trusted(self.domain, rows, self.shape)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(self.domain, [[-a for a in row] for row in self.rows], self.shape)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, factor) -> "Matrix":
        factor = self.domain.convert(factor)
        return Matrix._trusted(self.domain, [[a * factor for a in row] for row in self.rows], self.shape)

    def apply_left(self, vector: Sequence) -> tuple:
        """Row vector times matrix."""
        if len(vector) != self.nrows:
            raise ValueError(f"vector of length {len(vector)} against {self.shape}")
        zero = self.domain.zero
        result = []
        for j in range(self.ncols):
            total = zero
            for i, coefficient in enumerate(vector):
                if coefficient and self.rows[i][j]:
                    total = total + coefficient * self.rows[i][j]
            result.append(total)
        return tuple(result)

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix._trusted(self.domain, [self.rows[i] for i in indices], (len(indices), self.ncols))

    def select_cols(self, indices: Sequence[int]) -> "Matrix":
        rows = [[row[j] for j in indices] for row in self.rows]
        return Matrix._trusted(self.domain, rows, (self.nrows, len(indices)))

    def replace_row(self, i: int, values: Sequence) -> "Matrix":
        rows = list(self.rows)
        rows[i] = tuple(self.domain.convert(v) for v in values)
        return Matrix._trusted(self.domain, rows, self.shape)

    @property
    def is_zero(self) -> bool:
        return all(not entry for row in self.rows for entry in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return False
        return all(a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows) + "]"

    def __repr__(self) -> str:
        return f"Matrix({self.shape[0]}x{self.shape[1]}, {self})"
