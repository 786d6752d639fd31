"""Exact linear algebra over the base field (coordinates, shifts, Gram
matrices, nullspaces).  Plain dense grids of field scalars; zero-row and
zero-column shapes are legal so that trivial modules need no special
cases downstream."""

from __future__ import annotations

from .errors import ShapeError, SingularMatrixError, FieldMismatchError
from .fields import Field


class FieldMatrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries, cols: int | None = None):
        grid = tuple(tuple(row) for row in entries)
        rows = len(grid)
        if rows:
            cols = len(grid[0])
            if any(len(row) != cols for row in grid):
                raise ShapeError("ragged rows")
        elif cols is None:
            raise ShapeError("empty matrix needs an explicit column count")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)]
                           for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, [[field.zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def column(cls, field, values):
        return cls(field, [[v] for v in values], cols=1)

    def entry(self, i, j):
        return self.entries[i][j]

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_zero(self):
        z = self.field.zero
        return all(e == z for row in self.entries for e in row)

    def column_values(self, j):
        return [row[j] for row in self.entries]

    def transpose(self):
        if self.rows == 0 or self.cols == 0:
            return FieldMatrix.zeros(self.field, self.cols, self.rows)
        return FieldMatrix(self.field, zip(*self.entries), cols=self.rows)

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._check_same_shape(other)
        F = self.field
        return FieldMatrix(F, [[F.add(a, b) for a, b in zip(ra, rb)]
                               for ra, rb in zip(self.entries, other.entries)], cols=self.cols)

    def __neg__(self):
        F = self.field
        return FieldMatrix(F, [[F.neg(e) for e in row] for row in self.entries], cols=self.cols)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.field != other.field:
            raise FieldMismatchError("mixed fields")
        if self.cols != other.rows:
            raise ShapeError(f"inner dimensions {self.cols} and {other.rows} disagree")
        F = self.field
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = F.zero
                for k in range(self.cols):
                    acc = F.add(acc, F.mul(self.entries[i][k], other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return FieldMatrix(F, out, cols=other.cols)

    def scale(self, c):
        F = self.field
        return FieldMatrix(F, [[F.mul(c, e) for e in row] for row in self.entries], cols=self.cols)

    def power(self, k: int):
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        acc = FieldMatrix.identity(self.field, self.rows)
        for _ in range(k):
            acc = acc * self
        return acc

    # -- elimination ---------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (grid rows, pivot column list)."""
        F = self.field
        grid = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if grid[i][c] != F.zero), None)
            if pivot_row is None:
                continue
            grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
            inv = F.inv(grid[r][c])
            grid[r] = [F.mul(inv, e) for e in grid[r]]
            for i in range(self.rows):
                if i != r and grid[i][c] != F.zero:
                    m = grid[i][c]
                    grid[i] = [F.sub(e, F.mul(m, p)) for e, p in zip(grid[i], grid[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return grid, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self):
        """Deterministic basis of the right kernel, one column per free
        variable in column order."""
        F = self.field
        grid, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [F.zero] * self.cols
            vec[fc] = F.one
            for r, pc in enumerate(pivots):
                vec[pc] = F.neg(grid[r][fc])
            basis.append(vec)
        return basis

    def solve(self, rhs: "FieldMatrix"):
        """Solve self * X = rhs exactly; None if inconsistent."""
        if rhs.rows != self.rows:
            raise ShapeError("right-hand side has wrong height")
        F = self.field
        aug = FieldMatrix(F, [ra + rb for ra, rb in zip(self.entries, rhs.entries)]
                          if self.rows else [], cols=self.cols + rhs.cols)
        grid, pivots = aug.rref()
        if any(p >= self.cols for p in pivots):
            return None
        sol = [[F.zero] * rhs.cols for _ in range(self.cols)]
        for r, pc in enumerate(pivots):
            for j in range(rhs.cols):
                sol[pc][j] = grid[r][self.cols + j]
        return FieldMatrix(F, sol, cols=rhs.cols)

    def inverse(self):
        if not self.is_square:
            raise ShapeError("inverse of a non-square matrix")
        sol = self.solve(FieldMatrix.identity(self.field, self.rows))
        if sol is None or self.rank() != self.rows:
            raise SingularMatrixError("matrix is singular")
        return sol

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            ", ".join(self.field.format(e) for e in row) for row in self.entries
        )
        return f"FieldMatrix[{body}]"


def nilpotency_index(N: FieldMatrix) -> int:
    """Least k with N**k = 0; raises if N is not nilpotent."""
    if not N.is_square:
        raise ShapeError("nilpotency is defined for square matrices")
    acc = FieldMatrix.identity(N.field, N.rows)
    for k in range(N.rows + 1):
        if acc.is_zero:
            return k
        acc = acc * N
    raise ValueError("matrix is not nilpotent")

def jordan_block_sizes(N: FieldMatrix) -> list[int]:
    """Jordan block sizes (descending) of a nilpotent matrix, read off the
    rank sequence of its powers."""
    if not N.is_square:
        raise ShapeError("Jordan data is defined for square matrices")
    n = N.rows
    ranks = [n]
    acc = FieldMatrix.identity(N.field, n)
    while ranks[-1] > 0:
        acc = acc * N
        ranks.append(acc.rank())
        if len(ranks) > n + 1:
            raise ValueError("matrix is not nilpotent")
    sizes = []
    for k in range(1, len(ranks)):
        at_least_k = ranks[k - 1] - ranks[k]
        at_least_k1 = ranks[k] - ranks[k + 1] if k + 1 < len(ranks) else 0
        sizes.extend([k] * (at_least_k - at_least_k1))
    return sorted(sizes, reverse=True)
