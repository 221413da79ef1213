"""Exact linear algebra over a FieldSpec: row reduction, nullspaces and subspaces."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .exceptions import DimensionMismatchError, FieldError
from .field import FieldElement, FieldSpec

logger = logging.getLogger(__name__)

Vector = Tuple[FieldElement, ...]


def vector(F: FieldSpec, values: Sequence) -> Vector:
    return tuple(F.element(v) for v in values)


def zero_vector(F: FieldSpec, d: int) -> Vector:
    return tuple(F.zero for _ in range(d))


def unit_vector(F: FieldSpec, d: int, i: int) -> Vector:
    return tuple(F.one if j == i else F.zero for j in range(d))


def add_vectors(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c: FieldElement, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a.is_zero() for a in v)


def dot(u: Vector, v: Vector) -> FieldElement:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths {len(u)} and {len(v)} differ")
    total = u[0].field.zero if u else None
    for a, b in zip(u, v):
        total = total + a * b
    return total


def normalize(v: Vector) -> Vector:
    """Scale v so that its first nonzero coordinate is 1."""
    for a in v:
        if not a.is_zero():
            return scale_vector(a.inverse(), v)
    raise FieldError("cannot normalize the zero vector")


def combine(F: FieldSpec, rows: Sequence[Vector], coeffs: Sequence[FieldElement], d: int) -> Vector:
    """Linear combination sum(coeffs[i] * rows[i]) in F^d."""
    result = zero_vector(F, d)
    for c, row in zip(coeffs, rows):
        if not c.is_zero():
            result = add_vectors(result, scale_vector(c, row))
    return result


def transpose(matrix: Sequence[Vector]) -> List[Vector]:
    return [tuple(col) for col in zip(*matrix)]


def mat_vec(matrix: Sequence[Vector], v: Vector) -> Vector:
    return tuple(dot(row, v) for row in matrix)


@dataclass
class RowReduction:
    """Reduced row-echelon form of a matrix."""
    rows: List[Vector]
    pivots: List[int]

    @property
    def rank(self) -> int:
        return len(self.rows)


def row_reduce(F: FieldSpec, rows: Sequence[Sequence[FieldElement]], ncols: int) -> RowReduction:
    """Gauss-Jordan elimination; zero rows are dropped."""
    work = [list(row) for row in rows]
    for row in work:
        if len(row) != ncols:
            raise DimensionMismatchError(f"row of length {len(row)} in a {ncols}-column matrix")
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if not work[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][col].inverse()
        work[r] = [inv * a for a in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][col].is_zero():
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return RowReduction([tuple(row) for row in work[:r]], pivots)


def nullspace(F: FieldSpec, rows: Sequence[Sequence[FieldElement]], ncols: int) -> List[Vector]:
    """Basis of {x : row . x = 0 for every row}."""
    reduced = row_reduce(F, rows, ncols)
    free = [j for j in range(ncols) if j not in reduced.pivots]
    basis = []
    for j in free:
        x = [F.zero] * ncols
        x[j] = F.one
        for row, pivot in zip(reduced.rows, reduced.pivots):
            x[pivot] = -row[j]
        basis.append(tuple(x))
    return basis


def solve(F: FieldSpec, matrix: Sequence[Vector], rhs: Vector) -> Optional[Vector]:
    """One solution x of matrix . x = rhs, or None if inconsistent."""
    ncols = len(matrix[0]) if matrix else 0
    augmented = [tuple(row) + (b,) for row, b in zip(matrix, rhs)]
    reduced = row_reduce(F, augmented, ncols + 1)
    if ncols in reduced.pivots:
        return None
    x = [F.zero] * ncols
    for row, pivot in zip(reduced.rows, reduced.pivots):
        x[pivot] = row[ncols]
    return tuple(x)


def inverse_matrix(F: FieldSpec, matrix: Sequence[Vector]) -> List[Vector]:
    """Inverse of a square matrix.

    Raises:
        FieldError: If the matrix is singular
    """
    d = len(matrix)
    augmented = [tuple(row) + unit_vector(F, d, i) for i, row in enumerate(matrix)]
    reduced = row_reduce(F, augmented, 2 * d)
    if reduced.pivots[:d] != list(range(d)) or reduced.rank < d:
        raise FieldError("matrix is singular")
    return [row[d:] for row in reduced.rows]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of F^d stored by its reduced row-echelon basis.

    The echelon basis is canonical, so dataclass equality is subspace equality.
    """
    field: FieldSpec
    ambient_dim: int
    basis: Tuple[Vector, ...]

    @classmethod
    def span(cls, F: FieldSpec, d: int, vectors: Sequence[Vector]) -> "Subspace":
        for v in vectors:
            if len(v) != d:
                raise DimensionMismatchError(f"vector of length {len(v)} in F^{d}")
        reduced = row_reduce(F, vectors, d)
        return cls(F, d, tuple(reduced.rows))

    @classmethod
    def zero(cls, F: FieldSpec, d: int) -> "Subspace":
        return cls(F, d, ())

    @classmethod
    def full(cls, F: FieldSpec, d: int) -> "Subspace":
        return cls(F, d, tuple(unit_vector(F, d, i) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> List[int]:
        return [next(j for j, a in enumerate(row) if not a.is_zero()) for row in self.basis]

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in F^{self.ambient_dim}")
        residue = v
        for row, pivot in zip(self.basis, self.pivots):
            if not residue[pivot].is_zero():
                residue = add_vectors(residue, scale_vector(-residue[pivot], row))
        return is_zero_vector(residue)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.basis)

    def join(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def extend(self, *vectors: Vector) -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.basis + tuple(vectors))

    def annihilator(self) -> "Subspace":
        """{h : b . h = 0 for every basis row b}."""
        return Subspace.span(self.field, self.ambient_dim,
                             nullspace(self.field, self.basis, self.ambient_dim))

    def intersection(self, other: "Subspace") -> "Subspace":
        return self.annihilator().join(other.annihilator()).annihilator()

    def coordinates(self, v: Vector) -> Vector:
        """Coefficients of v in the echelon basis (v must lie in the subspace)."""
        if not self.contains(v):
            raise DimensionMismatchError("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def lift(self, coords: Sequence[FieldElement]) -> Vector:
        return combine(self.field, self.basis, coords, self.ambient_dim)

    def complement_basis(self) -> List[Vector]:
        """Standard basis vectors at the non-pivot positions; they span a complement."""
        pivots = set(self.pivots)
        return [unit_vector(self.field, self.ambient_dim, j)
                for j in range(self.ambient_dim) if j not in pivots]

    def relative_complement(self, inner: "Subspace") -> List[Vector]:
        """Basis rows of self completing `inner` (a subspace of self) to all of self."""
        chosen: List[Vector] = []
        current = inner
        for row in self.basis:
            if not current.contains(row):
                chosen.append(row)
                current = current.extend(row)
        return chosen

    def in_coordinates(self, inner: "Subspace") -> "Subspace":
        """`inner` (contained in self) expressed in the coordinates of self's basis."""
        return Subspace.span(self.field, self.dim, [self.coordinates(v) for v in inner.basis])
