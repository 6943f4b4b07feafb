"""Dense exact linear algebra over a coefficient field.

Matrices are small here (tens of rows), so plain row reduction with exact
arithmetic is enough.  Pivots are chosen as the first nonzero entry, never
by magnitude: there is no rounding to stabilize.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InternalInvariantError
from .fields import QQ

__all__ = ["Mat"]


class Mat:
    """An nrows x ncols matrix acting on column vectors."""

    __slots__ = ("nrows", "ncols", "rows", "field")

    def __init__(self, nrows: int, ncols: int, rows=None, field=QQ):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        if rows is None:
            self.rows = [[field.zero] * ncols for _ in range(nrows)]
        else:
            rows = [list(r) for r in rows]
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise InternalInvariantError("matrix shape mismatch")
            self.rows = [[field.element(x) for x in r] for r in rows]

    @classmethod
    def identity(cls, n: int, field=QQ) -> "Mat":
        out = cls(n, n, field=field)
        for i in range(n):
            out.rows[i][i] = field.one
        return out

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int, field=QQ) -> "Mat":
        out = cls(nrows, len(columns), field=field)
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise InternalInvariantError("column length mismatch")
            for i, x in enumerate(col):
                out.rows[i][j] = field.element(x)
        return out

    def column(self, j: int) -> list:
        return [self.rows[i][j] for i in range(self.nrows)]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.ncols)]

    def hstack(self, other: "Mat") -> "Mat":
        if other.nrows != self.nrows:
            raise InternalInvariantError("hstack with differing row counts")
        return Mat(
            self.nrows,
            self.ncols + other.ncols,
            [self.rows[i] + other.rows[i] for i in range(self.nrows)],
            field=self.field,
        )

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise InternalInvariantError("matmul shape mismatch")
        zero = self.field.zero
        out = Mat(self.nrows, other.ncols, field=self.field)
        for i in range(self.nrows):
            row = self.rows[i]
            acc = out.rows[i]
            for k in range(self.ncols):
                x = row[k]
                if x == zero:
                    continue
                other_row = other.rows[k]
                for j in range(other.ncols):
                    y = other_row[j]
                    if y != zero:
                        acc[j] = acc[j] + x * y
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"Mat({self.nrows}x{self.ncols})"

    def is_zero(self) -> bool:
        zero = self.field.zero
        return all(x == zero for row in self.rows for x in row)

    def copy_rows(self) -> list[list]:
        return [list(r) for r in self.rows]

    def _eliminate(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form of a copy; returns (rows, pivot columns)."""
        rows = self.copy_rows()
        zero = self.field.zero
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, self.nrows) if rows[i][c] != zero), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = self.field.one / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != zero:
                    factor = rows[i][c]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self._eliminate()[1])

    def rref(self) -> tuple["Mat", tuple[int, ...]]:
        rows, pivots = self._eliminate()
        out = Mat(self.nrows, self.ncols, rows, field=self.field)
        return out, tuple(pivots)

    def kernel_basis(self) -> "Mat":
        """Columns spanning the null space, one per free column of the rref."""
        rows, pivots = self._eliminate()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        zero, one = self.field.zero, self.field.one
        columns = []
        for c in free:
            vec = [zero] * self.ncols
            vec[c] = one
            for r, pc in enumerate(pivots):
                vec[pc] = -rows[r][c]
            columns.append(vec)
        return Mat.from_columns(columns, self.ncols, field=self.field)

    def solve(self, rhs: "Mat") -> "Mat":
        """X with self @ X = rhs; raises if the system is inconsistent."""
        if rhs.nrows != self.nrows:
            raise InternalInvariantError("solve shape mismatch")
        aug = self.hstack(rhs)
        rows, pivots = aug._eliminate()
        zero = self.field.zero
        for r in range(len(pivots)):
            if pivots[r] >= self.ncols:
                raise InternalInvariantError("inconsistent linear system")
        for r in range(len(pivots), self.nrows):
            if any(x != zero for x in rows[r][self.ncols:]):
                raise InternalInvariantError("inconsistent linear system")
        out = Mat(self.ncols, rhs.ncols, field=self.field)
        for r, pc in enumerate(pivots):
            for j in range(rhs.ncols):
                out.rows[pc][j] = rows[r][self.ncols + j]
        return out
