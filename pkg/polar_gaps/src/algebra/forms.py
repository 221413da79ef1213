"""
Quadratic and Bilinear Forms

A quadratic form is stored by its upper-triangular coefficient matrix Q with
phi(x) = sum_{i<=j} Q[i][j] x_i x_j. In characteristic 2 the form cannot be
recovered from its Gram symmetrization, so the triangular matrix is the
faithful representation.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import DimensionMismatchError, FormError
from .field import FieldElement, FieldSpec, square_decomposition
from .kernels import TableKernel
from .linalg import Subspace, Vector, add_vectors, nullspace, row_reduce, transpose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadraticForm:
    field: FieldSpec
    dim: int
    coeffs: Tuple[Tuple[FieldElement, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise FormError(f"dimension must be positive, got {self.dim}")
        if len(self.coeffs) != self.dim or any(len(row) != self.dim for row in self.coeffs):
            raise FormError(f"coefficient matrix must be {self.dim}x{self.dim}")
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c.field != self.field:
                    raise FormError(f"coefficient {c!r} at ({i},{j}) is not in {self.field}")
                if i > j and not c.is_zero():
                    raise FormError(f"coefficient matrix is not upper-triangular at ({i},{j})")

    @classmethod
    def from_rows(cls, F: FieldSpec, rows: Sequence[Sequence]) -> "QuadraticForm":
        """Build from full rows (entries below the diagonal zero) or from the
        upper parts only (row i holding d - i entries)."""
        d = len(rows)
        full = []
        for i, row in enumerate(rows):
            if len(row) == d - i and len(row) != d:
                row = [0] * i + list(row)
            if len(row) != d:
                raise FormError(f"row {i} has {len(row)} entries, expected {d} or {d - i}")
            full.append(tuple(F.element(c) for c in row))
        return cls(F, d, tuple(full))

    @classmethod
    def from_terms(cls, F: FieldSpec, d: int, terms: Dict[Tuple[int, int], object]) -> "QuadraticForm":
        """Build from monomial coefficients {(i, j): c} meaning c * x_i * x_j."""
        matrix = [[F.zero] * d for _ in range(d)]
        for (i, j), c in terms.items():
            i, j = min(i, j), max(i, j)
            matrix[i][j] = matrix[i][j] + F.element(c)
        return cls(F, d, tuple(tuple(row) for row in matrix))

    def __call__(self, v: Sequence[FieldElement]) -> FieldElement:
        return eval_form(self, v)

    def coefficient_array(self) -> np.ndarray:
        """Coefficients as integer representations (finite fields)."""
        return np.array([[c.value for c in row] for row in self.coeffs], dtype=np.int64)

    def rows_text(self) -> List[str]:
        return [",".join(str(c) for c in row) for row in self.coeffs]


@dataclass(frozen=True)
class BilinearForm:
    field: FieldSpec
    dim: int
    gram: Tuple[Tuple[FieldElement, ...], ...]

    def __post_init__(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.gram[i][j] != self.gram[j][i]:
                    raise FormError(f"gram matrix is not symmetric at ({i},{j})")

    def __call__(self, v: Sequence[FieldElement], w: Sequence[FieldElement]) -> FieldElement:
        return eval_bilinear(self, v, w)

    def gram_array(self) -> np.ndarray:
        return np.array([[c.value for c in row] for row in self.gram], dtype=np.int64)


def _check_length(dim: int, v: Sequence) -> None:
    if len(v) != dim:
        raise DimensionMismatchError(f"vector of length {len(v)} for a form of dimension {dim}")


def eval_form(phi: QuadraticForm, v: Sequence[FieldElement]) -> FieldElement:
    _check_length(phi.dim, v)
    total = phi.field.zero
    for i in range(phi.dim):
        if v[i].is_zero():
            continue
        for j in range(i, phi.dim):
            c = phi.coeffs[i][j]
            if not c.is_zero() and not v[j].is_zero():
                total = total + c * v[i] * v[j]
    return total


def eval_bilinear(f: BilinearForm, v: Sequence[FieldElement], w: Sequence[FieldElement]) -> FieldElement:
    _check_length(f.dim, v)
    _check_length(f.dim, w)
    total = f.field.zero
    for i in range(f.dim):
        if v[i].is_zero():
            continue
        for j in range(f.dim):
            c = f.gram[i][j]
            if not c.is_zero() and not w[j].is_zero():
                total = total + v[i] * c * w[j]
    return total


def bilinearize(phi: QuadraticForm) -> BilinearForm:
    """f(x, y) = phi(x + y) - phi(x) - phi(y), i.e. gram = Q + Q^T."""
    gram = tuple(
        tuple(phi.coeffs[i][j] + phi.coeffs[j][i] for j in range(phi.dim))
        for i in range(phi.dim)
    )
    return BilinearForm(phi.field, phi.dim, gram)


def radical_bilinear(f: BilinearForm) -> Subspace:
    """Rad(f): the kernel of the gram matrix."""
    return Subspace.span(f.field, f.dim, nullspace(f.field, f.gram, f.dim))


def radical_form(phi: QuadraticForm) -> Subspace:
    """Rad(phi) = {r in Rad(f) : phi(r) = 0}.

    Finite fields: exhaustive over the vectors of Rad(f). F2(t): phi restricted
    to Rad(f) is sum x_i^2 phi(r_i); writing phi(r_i) = b_i^2 + t c_i^2 turns
    the zero set into the kernel of the 2 x k matrix (b_i; c_i), which is exact.
    """
    F = phi.field
    rad_f = radical_bilinear(bilinearize(phi))
    if rad_f.dim == 0:
        return rad_f
    if F.is_finite:
        kernel = TableKernel(F)
        k = rad_f.dim
        coords = np.indices((kernel.q,) * k).reshape(k, -1).T
        vectors = kernel.matmul(coords, kernel.to_array(rad_f.basis))
        values = kernel.quadratic_values(vectors, phi.coefficient_array())
        singular = [kernel.to_vector(row) for row in vectors[values == 0]]
        return Subspace.span(F, phi.dim, singular)
    b_row, c_row = zip(*(square_decomposition(F, eval_form(phi, r)) for r in rad_f.basis))
    coords = nullspace(F, [b_row, c_row], rad_f.dim)
    return Subspace.span(F, phi.dim, [rad_f.lift(x) for x in coords])


def is_degenerate(phi: QuadraticForm) -> bool:
    return radical_form(phi).dim > 0


def form_in_basis(phi: QuadraticForm, vectors: Sequence[Vector]) -> QuadraticForm:
    """The form x -> phi(sum x_i v_i) in the coordinates of the given vectors."""
    f = bilinearize(phi)
    k = len(vectors)
    F = phi.field
    rows = []
    for i in range(k):
        row = [F.zero] * k
        row[i] = eval_form(phi, vectors[i])
        for j in range(i + 1, k):
            row[j] = eval_bilinear(f, vectors[i], vectors[j])
        rows.append(tuple(row))
    return QuadraticForm(F, k, tuple(rows))


def restrict(phi: QuadraticForm, S: Subspace) -> QuadraticForm:
    """phi on S in the coordinates of S's echelon basis."""
    if S.dim == 0:
        raise FormError("cannot restrict a form to the zero subspace")
    return form_in_basis(phi, S.basis)


def transform(phi: QuadraticForm, P: Sequence[Vector]) -> QuadraticForm:
    """phi o P for a square matrix P (given by rows): v -> phi(P v)."""
    if len(P) != phi.dim:
        raise DimensionMismatchError(f"{len(P)}x? matrix for a form of dimension {phi.dim}")
    return form_in_basis(phi, transpose(P))


def random_invertible_matrix(F: FieldSpec, d: int, rng: np.random.Generator) -> List[Vector]:
    """Seeded random invertible matrix; over F2(t) entries are drawn from {0, 1, t, 1+t}."""
    while True:
        if F.is_finite:
            entries = rng.integers(0, F.order, size=(d, d))
            matrix = [tuple(F.from_index(int(x)) for x in row) for row in entries]
        else:
            entries = rng.integers(0, 4, size=(d, d))
            matrix = [tuple(F.parse_element(format(int(x), "b")[::-1]) for x in row)
                      for row in entries]
        if row_reduce(F, matrix, d).rank == d:
            return matrix


def random_equivalent(phi: QuadraticForm, seed: Optional[int]) -> QuadraticForm:
    """phi o P for a seeded random invertible P, re-canonicalized to upper-triangular."""
    rng = np.random.default_rng(seed)
    P = random_invertible_matrix(phi.field, phi.dim, rng)
    return transform(phi, P)


def polarization_defect(phi: QuadraticForm, x: Vector, y: Vector) -> FieldElement:
    """phi(x + y) - phi(x) - phi(y) - f(x, y); zero for every x, y."""
    f = bilinearize(phi)
    return eval_form(phi, add_vectors(x, y)) - eval_form(phi, x) - eval_form(phi, y) - f(x, y)
