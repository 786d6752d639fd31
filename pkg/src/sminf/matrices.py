"""Dense exact matrices of polynomials and of rational functions.

Entries live in canonical form, all arithmetic is exact, and matrices are
immutable value objects (equality is entrywise).  Determinants run
fraction-free: rational matrices are cleared to polynomial rows first and
the polynomial determinant uses Bareiss elimination, whose interior
divisions are exact because every intermediate entry is a minor.  Target
sizes are desk scale, so the representation is a plain dense grid.
"""

from __future__ import annotations

from .errors import ShapeError, SingularMatrixError, FieldMismatchError
from .fields import Field
from .poly import Poly, poly_gcd
from .ratfun import RatFun


def _as_grid(entries):
    grid = tuple(tuple(row) for row in entries)
    if grid and any(len(row) != len(grid[0]) for row in grid):
        raise ShapeError("ragged rows")
    return grid


class PolyMatrix:
    """Rectangular grid of polynomials."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries, cols: int | None = None):
        grid = _as_grid(entries)
        rows = len(grid)
        if rows:
            cols = len(grid[0])
        elif cols is None:
            raise ShapeError("empty matrix needs an explicit column count")
        for row in grid:
            for e in row:
                if not isinstance(e, Poly) or e.field != field:
                    raise FieldMismatchError("entry is not a polynomial over the matrix field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, field, n):
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, field, rows, cols):
        z = Poly.zero(field)
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diag(cls, field, diagonal):
        z = Poly.zero(field)
        n = len(diagonal)
        return cls(field, [[diagonal[i] if i == j else z for j in range(n)] for i in range(n)], cols=n)

    def entry(self, i, j) -> Poly:
        return self.entries[i][j]

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_zero(self):
        return all(e.is_zero for row in self.entries for e in row)

    def max_degree(self):
        """Largest entry degree; 0 for the zero matrix."""
        degs = [e.degree for row in self.entries for e in row if not e.is_zero]
        return max(degs) if degs else 0

    def transpose(self):
        if self.rows == 0 or self.cols == 0:
            return PolyMatrix.zeros(self.field, self.cols, self.rows)
        return PolyMatrix(self.field, zip(*self.entries), cols=self.rows)

    def to_rat(self) -> "RatMatrix":
        return RatMatrix(self.field, [[RatFun.from_poly(e) for e in row] for row in self.entries],
                         cols=self.cols)

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._check_same_shape(other)
        return PolyMatrix(self.field,
                          [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
                          cols=self.cols)

    def __neg__(self):
        return PolyMatrix(self.field, [[-e for e in row] for row in self.entries], cols=self.cols)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            return self.to_rat() * other
        if self.cols != other.rows:
            raise ShapeError(f"inner dimensions {self.cols} and {other.rows} disagree")
        z = Poly.zero(self.field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out, cols=other.cols)

    def scale(self, p: Poly):
        return PolyMatrix(self.field, [[p * e for e in row] for row in self.entries], cols=self.cols)

    def det(self) -> Poly:
        if not self.is_square:
            raise ShapeError("determinant of a non-square matrix")
        return _bareiss_det(self.field, [list(row) for row in self.entries])

    def column(self, j):
        return PolyMatrix(self.field, [[row[j]] for row in self.entries], cols=1)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(repr(e) for e in row) for row in self.entries)
        return f"PolyMatrix[{body}]"


def _bareiss_det(field, grid) -> Poly:
    """Fraction-free determinant.  Each elimination step divides by the
    previous pivot, and that division is exact because every intermediate
    entry equals a minor of the original matrix."""
    n = len(grid)
    if n == 0:
        return Poly.one(field)
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        if grid[k][k].is_zero:
            for i in range(k + 1, n):
                if not grid[i][k].is_zero:
                    grid[k], grid[i] = grid[i], grid[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(field)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = grid[k][k] * grid[i][j] - grid[i][k] * grid[k][j]
                grid[i][j] = num.exact_div(prev)
            grid[i][k] = Poly.zero(field)
        prev = grid[k][k]
    d = grid[n - 1][n - 1]
    return -d if sign < 0 else d


class RatMatrix:
    """Rectangular grid of rational functions in canonical form."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries, cols: int | None = None):
        grid = _as_grid(entries)
        rows = len(grid)
        if rows:
            cols = len(grid[0])
        elif cols is None:
            raise ShapeError("empty matrix needs an explicit column count")
        for row in grid:
            for e in row:
                if not isinstance(e, RatFun) or e.field != field:
                    raise FieldMismatchError("entry is not a rational function over the matrix field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def identity(cls, field, n):
        one, zero = RatFun.one(field), RatFun.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, field, rows, cols):
        z = RatFun.zero(field)
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diag(cls, field, diagonal):
        z = RatFun.zero(field)
        n = len(diagonal)
        return cls(field, [[diagonal[i] if i == j else z for j in range(n)] for i in range(n)], cols=n)

    def entry(self, i, j) -> RatFun:
        return self.entries[i][j]

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_zero(self):
        return all(e.is_zero for row in self.entries for e in row)

    @property
    def is_proper(self):
        return all(e.is_proper for row in self.entries for e in row)

    @property
    def is_strictly_proper(self):
        return all(e.is_strictly_proper or e.is_zero for row in self.entries for e in row)

    @property
    def is_polynomial(self):
        return all(e.den.degree == 0 for row in self.entries for e in row)

    def transpose(self):
        if self.rows == 0 or self.cols == 0:
            return RatMatrix.zeros(self.field, self.cols, self.rows)
        return RatMatrix(self.field, zip(*self.entries), cols=self.rows)

    def to_poly(self) -> PolyMatrix:
        if not self.is_polynomial:
            raise ShapeError("matrix has non-polynomial entries")
        return PolyMatrix(self.field, [[e.num for e in row] for row in self.entries], cols=self.cols)

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._check_same_shape(other)
        return RatMatrix(self.field,
                         [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
                         cols=self.cols)

    def __neg__(self):
        return RatMatrix(self.field, [[-e for e in row] for row in self.entries], cols=self.cols)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            other = other.to_rat()
        if self.cols != other.rows:
            raise ShapeError(f"inner dimensions {self.cols} and {other.rows} disagree")
        z = RatFun.zero(self.field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if not (a.is_zero or b.is_zero):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RatMatrix(self.field, out, cols=other.cols)

    def scale(self, f: RatFun):
        return RatMatrix(self.field, [[f * e for e in row] for row in self.entries], cols=self.cols)

    # -- entrywise split and evaluation -------------------------------------

    def pi_plus(self) -> PolyMatrix:
        return PolyMatrix(self.field, [[e.pi_plus() for e in row] for row in self.entries],
                          cols=self.cols)

    def pi_minus(self) -> "RatMatrix":
        return RatMatrix(self.field, [[e.pi_minus() for e in row] for row in self.entries],
                         cols=self.cols)

    def at_zero(self):
        from .field_matrix import FieldMatrix

        return FieldMatrix(self.field, [[e.at_zero() for e in row] for row in self.entries],
                           cols=self.cols)

    # -- determinant and inverse --------------------------------------------

    def det(self) -> RatFun:
        if not self.is_square:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return RatFun.one(self.field)
        if n <= 3:
            return _cofactor_det(self)
        num_rows, dens = self._cleared_rows()
        den = Poly.one(self.field)
        for d in dens:
            den = den * d
        return RatFun(_bareiss_det(self.field, num_rows), den)

    def _cleared_rows(self):
        """Multiply each row by the lcm of its denominators; returns the
        polynomial grid and the per-row lcms."""
        grid, dens = [], []
        for row in self.entries:
            lcm = Poly.one(self.field)
            for e in row:
                g = poly_gcd(lcm, e.den)
                lcm = lcm * e.den.exact_div(g)
            grid.append([e.num * lcm.exact_div(e.den) for e in row])
            dens.append(lcm)
        return grid, dens

    def inverse(self) -> "RatMatrix":
        if not self.is_square:
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        if n <= 3:
            return _adjugate_inverse(self)
        return _gauss_jordan_inverse(self)

    def is_bicausal(self) -> bool:
        """Square, entrywise proper, and invertible within proper matrices
        (determinant of valuation zero)."""
        if not self.is_square:
            raise ShapeError("bicausality is defined for square matrices")
        if not self.is_proper:
            return False
        return self.det().is_unit

    def min_delta(self):
        """Least entry valuation; +inf for the zero matrix."""
        values = [e.delta for row in self.entries for e in row]
        return min(values) if values else float("inf")

    # -- slicing / stacking ---------------------------------------------------

    def column(self, j):
        return RatMatrix(self.field, [[row[j]] for row in self.entries], cols=1)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ShapeError("row counts differ")
        return RatMatrix(self.field,
                         [ra + rb for ra, rb in zip(self.entries, other.entries)],
                         cols=self.cols + other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise ShapeError("column counts differ")
        return RatMatrix(self.field, self.entries + other.entries, cols=self.cols)

    def submatrix(self, row_idx, col_idx):
        return RatMatrix(self.field,
                         [[self.entries[i][j] for j in col_idx] for i in row_idx],
                         cols=len(col_idx))

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(repr(e) for e in row) for row in self.entries)
        return f"RatMatrix[{body}]"


def _cofactor_det(M: RatMatrix) -> RatFun:
    n = M.rows
    if n == 1:
        return M.entries[0][0]
    if n == 2:
        a, b = M.entries[0]
        c, d = M.entries[1]
        return a * d - b * c
    total = RatFun.zero(M.field)
    cols = list(range(n))
    for j in range(n):
        e = M.entries[0][j]
        if e.is_zero:
            continue
        minor = M.submatrix(range(1, n), cols[:j] + cols[j + 1 :])
        term = e * _cofactor_det(minor)
        total = total + (-term if j % 2 else term)
    return total


def _adjugate_inverse(M: RatMatrix) -> RatMatrix:
    d = _cofactor_det(M)
    if d.is_zero:
        raise SingularMatrixError("matrix is singular")
    n = M.rows
    if n == 1:
        return RatMatrix(M.field, [[d.inverse()]])
    rows_all = list(range(n))
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = M.submatrix(
                [r for r in rows_all if r != j], [c for c in rows_all if c != i]
            )
            cof = _cofactor_det(minor)
            if (i + j) % 2:
                cof = -cof
            row.append(cof / d)
        inv.append(row)
    return RatMatrix(M.field, inv, cols=n)


def _gauss_jordan_inverse(M: RatMatrix) -> RatMatrix:
    n = M.rows
    F = M.field
    a = [list(row) for row in M.entries]
    b = [list(row) for row in RatMatrix.identity(F, n).entries]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if not a[i][k].is_zero), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            b[k], b[pivot_row] = b[pivot_row], b[k]
        inv = a[k][k].inverse()
        a[k] = [e * inv for e in a[k]]
        b[k] = [e * inv for e in b[k]]
        for i in range(n):
            if i == k or a[i][k].is_zero:
                continue
            m = a[i][k]
            a[i] = [e - m * p for e, p in zip(a[i], a[k])]
            b[i] = [e - m * p for e, p in zip(b[i], b[k])]
    return RatMatrix(F, b, cols=n)


def mat_mul(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    return A * B


def det(M: RatMatrix) -> RatFun:
    return M.det()


def inverse(M: RatMatrix) -> RatMatrix:
    return M.inverse()


def mat_pi_plus(M: RatMatrix) -> PolyMatrix:
    return M.pi_plus()


def mat_pi_minus(M: RatMatrix) -> RatMatrix:
    return M.pi_minus()


def mat_at_zero(M: RatMatrix):
    return M.at_zero()


def is_bicausal(M: RatMatrix) -> bool:
    return M.is_bicausal()
