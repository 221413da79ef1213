"""
Vectorized finite-field kernels.

Vectors are numpy integer rows holding galois integer representations; all
arithmetic goes through the field's operation tables by fancy indexing, so one
kernel call evaluates a form or a bilinear product over every enumerated point
at once.
"""

import logging
from typing import Sequence

import numpy as np

from .exceptions import NotEnumerableError
from .field import FieldElement, FieldSpec

logger = logging.getLogger(__name__)


class TableKernel:
    """Batch arithmetic over a finite field."""

    def __init__(self, F: FieldSpec):
        if not F.is_finite:
            raise NotEnumerableError(f"{F} has no table kernel")
        tables = F.tables
        self.field = F
        self.q = F.order
        self.add = tables.add
        self.mul = tables.mul
        self.neg = tables.neg
        self.inv = tables.inv

    def to_array(self, rows: Sequence[Sequence[FieldElement]], width: int = 0) -> np.ndarray:
        """Integer matrix of the given rows; width is needed when rows may be empty."""
        width = len(rows[0]) if rows else width
        return np.array([[a.value for a in row] for row in rows], dtype=np.int64).reshape(len(rows), width)

    def to_vector(self, row: np.ndarray):
        return tuple(FieldElement(self.field, int(a)) for a in row)

    def matmul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """(N x k) @ (k x M) over the field."""
        result = np.zeros((X.shape[0], Y.shape[1]), dtype=np.int64)
        for j in range(X.shape[1]):
            term = self.mul[X[:, j][:, np.newaxis], Y[j][np.newaxis, :]]
            result = self.add[result, term]
        return result

    def subtract(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        return self.add[X, self.neg[Y]]

    def quadratic_values(self, X: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
        """phi(x) for every row x, with phi given by its upper-triangular coefficient matrix."""
        values = np.zeros(X.shape[0], dtype=np.int64)
        d = coeffs.shape[0]
        for i in range(d):
            for j in range(i, d):
                c = coeffs[i, j]
                if c:
                    values = self.add[values, self.mul[c, self.mul[X[:, i], X[:, j]]]]
        return values

    def in_span_mask(self, X: np.ndarray, annihilator: np.ndarray) -> np.ndarray:
        """Rows of X lying in the subspace whose annihilator has the given rows."""
        if annihilator.shape[0] == 0:
            return np.ones(X.shape[0], dtype=bool)
        return ~np.any(self.matmul(X, annihilator.T) != 0, axis=1)

    def normalize_rows(self, X: np.ndarray) -> np.ndarray:
        """Scale each nonzero row so its first nonzero entry is 1."""
        lead = np.argmax(X != 0, axis=1)
        scale = self.inv[X[np.arange(X.shape[0]), lead]]
        return self.mul[X, scale[:, np.newaxis]]

    def encode_rows(self, X: np.ndarray) -> np.ndarray:
        """Injective integer code of each row (base-q digits)."""
        weights = self.q ** np.arange(X.shape[1] - 1, -1, -1, dtype=np.int64)
        return X @ weights

    def normalized_vectors(self, d: int) -> np.ndarray:
        """Every projective point of PG(d-1, q) once, first nonzero coordinate 1,
        in lexicographic order of the coordinate vectors."""
        blocks = []
        for lead in range(d - 1, -1, -1):
            tail = d - 1 - lead
            if tail:
                grid = np.indices((self.q,) * tail).reshape(tail, -1).T
            else:
                grid = np.zeros((1, 0), dtype=np.int64)
            block = np.zeros((grid.shape[0], d), dtype=np.int64)
            block[:, lead] = 1
            block[:, lead + 1:] = grid
            blocks.append(block)
        return np.concatenate(blocks, axis=0)


def projective_point_count(q: int, d: int) -> int:
    return (q ** d - 1) // (q - 1)
