"""The finite-dimensional module a nonsingular polynomial matrix L attaches
to the proper rational functions.

A proper column x is projected to its canonical polynomial representative
``L * pi_plus(L^-1 x)``; the image of that projection is a module over the
proper ring (multiplication by 1/s acts nilpotently) and simultaneously a
finite-dimensional vector space over the base field.  This file realizes
that space concretely: canonical representatives, kernel membership, a
deterministic basis with recorded proper preimages, coordinates, the shift
matrix, and the duality pairing against the transposed host.
"""

from __future__ import annotations

from .errors import (
    ImproperInputError,
    PreconditionError,
    ShapeError,
    SingularMatrixError,
    VerificationError,
)
from .field_matrix import FieldMatrix
from .matrices import PolyMatrix, RatMatrix
from .poly import Poly
from .ratfun import RatFun


class ModuleElement:
    """A class in the module, held as its canonical polynomial
    representative (an n x 1 polynomial column fixed by the projection)."""

    __slots__ = ("host", "rep")

    def __init__(self, host: PolyMatrix, rep: PolyMatrix):
        if rep.cols != 1 or rep.rows != host.rows:
            raise ShapeError("representative must be a column matching the host size")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleElement is immutable")

    @property
    def is_zero(self):
        return self.rep.is_zero

    def _check_host(self, other):
        if self.host != other.host:
            raise PreconditionError("elements live over different host matrices")

    def __add__(self, other):
        self._check_host(other)
        return ModuleElement(self.host, self.rep + other.rep)

    def __neg__(self):
        return ModuleElement(self.host, -self.rep)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ModuleElement(self.host, self.rep.scale(Poly.constant(self.host.field, c)))

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.host == other.host
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash((self.host, self.rep))

    def __repr__(self):
        return f"ModuleElement({self.rep!r})"


def _inverse_of(L: PolyMatrix) -> RatMatrix:
    R = L.to_rat()
    if not L.is_square or R.det().is_zero:
        raise SingularMatrixError("host matrix must be square and nonsingular")
    return R.inverse()


def _require_proper_column(x: RatMatrix, n: int, what: str):
    if x.cols != 1 or x.rows != n:
        raise ShapeError(f"{what} must be a column of height {n}")
    if not x.is_proper:
        raise ImproperInputError(f"{what} has an improper entry")


def canonical_rep(L: PolyMatrix, x: RatMatrix, Linv: RatMatrix | None = None) -> ModuleElement:
    """Project a proper column to its canonical polynomial representative."""
    _require_proper_column(x, L.rows, "input column")
    return canonical_rep_rational(L, x, Linv)


def canonical_rep_rational(
    L: PolyMatrix, w: RatMatrix, Linv: RatMatrix | None = None
) -> ModuleElement:
    """Extension of :func:`canonical_rep` to arbitrary rational columns."""
    if w.cols != 1 or w.rows != L.rows:
        raise ShapeError(f"input must be a column of height {L.rows}")
    if Linv is None:
        Linv = _inverse_of(L)
    return ModuleElement(L, L * (Linv * w).pi_plus())


def kernel_member(L: PolyMatrix, x: RatMatrix) -> bool:
    """True when the class of x is zero, i.e. s * L^-1 * x is proper."""
    return canonical_rep(L, x).is_zero


def _flatten(rep: PolyMatrix, window: int):
    """Coefficient vector of a polynomial column, coordinates ordered by
    (entry row, power).  Degrees above the window mean the column cannot
    lie in the span being tested, signalled by None."""
    out = []
    for row in rep.entries:
        p = row[0]
        if p.degree > window:
            return None
        out.extend(p.coeff(k) for k in range(window + 1))
    return out


def _coefficient_matrix(field, reps, window, height) -> FieldMatrix:
    cols = [_flatten(rep, window) for rep in reps]
    return FieldMatrix(
        field, [[col[r] for col in cols] for r in range(height)], cols=len(cols)
    )


class ModuleBasis:
    """Deterministic basis of the module attached to L.

    The spanning set is ``canonical_rep(L, s^-k e_i)`` for k = 0..bound and
    i = 1..n, enumerated k-major, reduced by Gaussian elimination with the
    leftmost-pivot rule; survivors keep their original representative and
    the generating column as recorded proper preimage.
    """

    __slots__ = ("host", "bound", "elements", "preimages", "shift", "_coef", "_window")

    def __init__(self, host, bound, elements, preimages, shift, coef, window):
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "preimages", tuple(preimages))
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "_coef", coef)
        object.__setattr__(self, "_window", window)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleBasis is immutable")

    @property
    def field(self):
        return self.host.field

    @property
    def dim(self):
        return len(self.elements)

    def coordinates(self, u: ModuleElement) -> FieldMatrix:
        """Exact coordinate column of u in this basis."""
        if u.host != self.host:
            raise PreconditionError("element is hosted by a different matrix")
        degrees = [row[0].degree for row in u.rep.entries if not row[0].is_zero]
        window = max([self._window] + [int(d) for d in degrees])
        coef = self._coef
        if window > self._window:
            coef = _coefficient_matrix(
                self.field, [e.rep for e in self.elements], window,
                self.host.rows * (window + 1),
            )
        target = _flatten(u.rep, window)
        sol = coef.solve(FieldMatrix.column(self.field, target))
        if sol is None:
            raise VerificationError(
                "representative lies outside the basis span; canonicity is broken"
            )
        return sol

    def from_coordinates(self, coords: FieldMatrix) -> ModuleElement:
        if coords.cols != 1 or coords.rows != self.dim:
            raise ShapeError(f"expected a {self.dim} x 1 coordinate column")
        F = self.field
        rep = PolyMatrix.zeros(F, self.host.rows, 1)
        for c, elem in zip(coords.column_values(0), self.elements):
            rep = rep + elem.rep.scale(Poly.constant(F, c))
        return ModuleElement(self.host, rep)

    def action_via_preimages(self, q: RatFun, u: ModuleElement) -> ModuleElement:
        """Scalar action computed through the recorded proper preimages;
        cross-checks the direct route in :func:`scalar_action`."""
        if not q.is_proper:
            raise ImproperInputError("scalar must be proper")
        Linv = _inverse_of(self.host)
        coords = self.coordinates(u)
        out = ModuleElement(self.host, PolyMatrix.zeros(self.field, self.host.rows, 1))
        for c, x in zip(coords.column_values(0), self.preimages):
            moved = canonical_rep(self.host, x.scale(q), Linv)
            out = out + moved.scale(c)
        return out


def compute_basis(L: PolyMatrix) -> ModuleBasis:
    F = L.field
    n = L.rows
    Linv = _inverse_of(L)
    poly_part = Linv.pi_plus()
    # Shifting the polynomial part of L^-1 down by more than its maximal
    # entry degree kills it entirely, so one inversion bounds the spanning
    # enumeration; beyond the bound every candidate is zero.
    bound = int(poly_part.max_degree())

    candidates = []  # (rep, preimage), k ascending then column index ascending
    for k in range(bound + 1):
        for i in range(n):
            shifted = PolyMatrix(
                F, [[row[i].shift_down(k)] for row in poly_part.entries], cols=1
            )
            rep = L * shifted
            preimage = RatMatrix(
                F,
                [[RatFun.monomial(F, -k) if r == i else RatFun.zero(F)] for r in range(n)],
                cols=1,
            )
            candidates.append((rep, preimage))

    window = 0
    for rep, _ in candidates:
        window = max(window, int(rep.max_degree()))
    height = n * (window + 1)

    kept_elements, kept_preimages = [], []
    reduced = []  # (pivot index, normalized reduced vector)
    for rep, preimage in candidates:
        vec = _flatten(rep, window)
        for pivot, row in reduced:
            c = vec[pivot]
            if c != F.zero:
                vec = [F.sub(a, F.mul(c, b)) for a, b in zip(vec, row)]
        pivot = next((idx for idx, c in enumerate(vec) if c != F.zero), None)
        if pivot is None:
            continue
        inv = F.inv(vec[pivot])
        reduced.append((pivot, [F.mul(inv, c) for c in vec]))
        kept_elements.append(ModuleElement(L, rep))
        kept_preimages.append(preimage)

    coef = _coefficient_matrix(F, [e.rep for e in kept_elements], window, height)
    d = len(kept_elements)

    # Matrix of multiplication by 1/s: push each preimage down one power
    # and resolve the image in the chosen basis.
    down = RatFun.monomial(F, -1)
    shift_cols = []
    for x in kept_preimages:
        image = canonical_rep(L, x.scale(down), Linv)
        vec = _flatten(image.rep, window)
        sol = coef.solve(FieldMatrix.column(F, vec))
        if sol is None:
            raise VerificationError("shift image escaped the basis span")
        shift_cols.append(sol.column_values(0))
    shift = FieldMatrix(F, [[shift_cols[j][i] for j in range(d)] for i in range(d)], cols=d)

    return ModuleBasis(L, bound, kept_elements, kept_preimages, shift, coef, window)


def scalar_action(q: RatFun, u: ModuleElement) -> ModuleElement:
    """Act by a proper scalar on a class.

    Acting on the canonical representative is sound: a proper preimage
    differs from its representative by a column that the projection still
    kills after multiplication by a proper scalar, so this agrees with the
    action computed through preimages (cross-checked in tests).
    """
    if not q.is_proper:
        raise ImproperInputError("scalar must be proper")
    qrep = u.rep.to_rat().scale(q)
    return canonical_rep_rational(u.host, qrep)


def shift_matrix(basis: ModuleBasis) -> FieldMatrix:
    """Matrix of multiplication by 1/s in the given basis; nilpotent."""
    return basis.shift


def pairing(L: PolyMatrix, y: RatMatrix, x: RatMatrix, Linv: RatMatrix | None = None):
    """Duality pairing value: constant coefficient of the polynomial part
    of y^T L^-1 x.  y is a proper preimage for the transposed host, x one
    for L; the value depends only on the two classes."""
    n = L.rows
    _require_proper_column(y, n, "left argument")
    _require_proper_column(x, n, "right argument")
    if Linv is None:
        Linv = _inverse_of(L)
    val = y.transpose() * Linv * x
    return val.entry(0, 0).at_zero()


def gram_matrix(L: PolyMatrix, basis_T: ModuleBasis, basis: ModuleBasis) -> FieldMatrix:
    """Pairing matrix between a basis of the transposed host's module and a
    basis of L's module, evaluated on their recorded preimages."""
    if basis_T.host != L.transpose() or basis.host != L:
        raise PreconditionError("bases do not match the host pair (transpose, host)")
    Linv = _inverse_of(L)
    return FieldMatrix(
        L.field,
        [[pairing(L, y, x, Linv) for x in basis.preimages] for y in basis_T.preimages],
        cols=basis.dim,
    )
