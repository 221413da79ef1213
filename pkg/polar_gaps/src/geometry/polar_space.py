"""
Polar Space Geometry

The synthetic polar space P(phi) of a non-degenerate quadratic form over a
finite field: singular projective points, totally singular lines, the
collinearity relation, perps and hyperbolic lines.

Perps follow the convention x in x^perp: every point is collinear with itself.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from ..algebra.exceptions import BudgetExceededError, InfiniteFieldError, PreconditionError
from ..algebra.field import enumerate_elements
from ..algebra.forms import QuadraticForm, bilinearize, eval_form, radical_bilinear
from ..algebra.kernels import TableKernel, projective_point_count
from ..algebra.linalg import Subspace, Vector
from ..algebra.witt import GapReport, SearchLimits, WittDecomposition, gap_report, witt_decompose

logger = logging.getLogger(__name__)

SYNTHETIC = "synthetic"
ALGEBRAIC = "algebraic"

DEFAULT_POINT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class ProjectivePoint:
    index: int
    coordinates: Vector

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coordinates)


class PolarSpace:
    """Enumerated point-line geometry of a non-degenerate form.

    Built by build_polar_space; immutable afterwards.
    """

    def __init__(self, form: QuadraticForm, coords: np.ndarray, decomposition: WittDecomposition,
                 gap_report: GapReport):
        self.form = form
        self.field = form.field
        self.dim = form.dim
        self.kernel = TableKernel(form.field)
        self.q = self.kernel.q
        self.coords = coords
        self.decomposition = decomposition
        self.gap_report = gap_report
        self.rank = gap_report.n
        self.bilinear = bilinearize(form)
        self.gram = self.bilinear.gram_array()
        self.radical = radical_bilinear(self.bilinear)
        self._index: Dict[int, int] = {
            int(code): i for i, code in enumerate(self.kernel.encode_rows(coords))
        }
        products = self.kernel.matmul(self.kernel.matmul(coords, self.gram), coords.T)
        self.perp_matrix = products == 0
        self.adjacency = self.perp_matrix & ~np.eye(len(coords), dtype=bool)
        self.lines = self._build_lines()
        self.line_incidence = np.zeros((len(self.lines), self.num_points), dtype=bool)
        for i, line in enumerate(self.lines):
            self.line_incidence[i, list(line)] = True
        logger.info(f"Polar space over {self.field}: {self.num_points} points, "
                    f"{len(self.lines)} lines, rank {self.rank}")

    @property
    def num_points(self) -> int:
        return self.coords.shape[0]

    @cached_property
    def points(self) -> List[ProjectivePoint]:
        return [ProjectivePoint(i, self.kernel.to_vector(row)) for i, row in enumerate(self.coords)]

    @property
    def all_mask(self) -> np.ndarray:
        return np.ones(self.num_points, dtype=bool)

    def _build_lines(self) -> Tuple[Tuple[int, ...], ...]:
        scalars = np.arange(self.q, dtype=np.int64)
        lines = []
        for a, b in zip(*np.nonzero(np.triu(self.adjacency))):
            # a + lambda * b for every lambda, then b itself
            combos = self.kernel.add[self.coords[a][np.newaxis, :],
                                     self.kernel.mul[scalars[:, np.newaxis], self.coords[b][np.newaxis, :]]]
            members = self.lookup_rows(np.vstack([combos, self.coords[b][np.newaxis, :]]))
            line = tuple(sorted(set(members)))
            if line[0] == a and line[1] == b:
                lines.append(line)
        return tuple(sorted(lines))

    def lookup_rows(self, rows: np.ndarray) -> List[int]:
        """Point indices of nonzero singular vectors given as rows."""
        codes = self.kernel.encode_rows(self.kernel.normalize_rows(rows))
        return [self._index[int(c)] for c in codes]

    def index_of(self, v: Vector) -> int:
        """Point index of the singular vector v.

        Raises:
            KeyError: If v is zero or not singular
        """
        return self.lookup_rows(self.kernel.to_array([v]))[0]

    def vector(self, i: int) -> Vector:
        return self.points[i].coordinates

    def mask(self, points: Iterable[int]) -> np.ndarray:
        m = np.zeros(self.num_points, dtype=bool)
        m[list(points)] = True
        return m

    @staticmethod
    def as_set(mask: np.ndarray) -> FrozenSet[int]:
        return frozenset(int(i) for i in np.flatnonzero(mask))

    # collinearity

    def collinear(self, a: int, b: int) -> bool:
        """a and b lie on a common singular line; every point is collinear with itself."""
        return bool(self.perp_matrix[a, b])

    def perp_mask(self, mask: np.ndarray) -> np.ndarray:
        if not mask.any():
            return self.all_mask
        return np.all(self.perp_matrix[mask], axis=0)

    def perp(self, points: Iterable[int]) -> FrozenSet[int]:
        """X^perp; perp of the empty set is every point."""
        return self.as_set(self.perp_mask(self.mask(points)))

    def hyperbolic_line(self, a: int, b: int, method: str = SYNTHETIC) -> FrozenSet[int]:
        """{a,b}^perp-perp, synthetically or as the singular points of <a, b, Rad(f)>.

        The two methods agree from rank 2 on; in rank 1 the synthetic double
        perp is the whole point set.

        Raises:
            PreconditionError: If a and b are equal or collinear
        """
        if self.collinear(a, b):
            raise PreconditionError(f"points {a} and {b} are collinear; no hyperbolic line")
        if method == SYNTHETIC:
            return self.as_set(self.perp_mask(self.perp_mask(self.mask([a, b]))))
        if method == ALGEBRAIC:
            return self.as_set(self.algebraic_hyperbolic_mask(a, b))
        raise ValueError(f"unknown hyperbolic line method: {method}")

    @cached_property
    def _projected_codes(self) -> Tuple[np.ndarray, np.ndarray]:
        """Coordinates projected along Rad(f) (pivot columns cleared), normalized
        and encoded; a point lies in <a, b, Rad(f)> iff its projection lies on
        the projective line through the projections of a and b."""
        projected = self.coords.copy()
        for row, pivot in zip(self.kernel.to_array(self.radical.basis, self.dim), self.radical.pivots):
            factor = projected[:, pivot]
            projected = self.kernel.subtract(projected, self.kernel.mul[factor[:, np.newaxis], row[np.newaxis, :]])
        projected = self.kernel.normalize_rows(projected)
        return projected, self.kernel.encode_rows(projected)

    def algebraic_hyperbolic_mask(self, a: int, b: int) -> np.ndarray:
        projected, codes = self._projected_codes
        scalars = np.arange(self.q, dtype=np.int64)
        line = self.kernel.add[projected[a][np.newaxis, :],
                               self.kernel.mul[scalars[:, np.newaxis], projected[b][np.newaxis, :]]]
        line = self.kernel.normalize_rows(np.vstack([line, projected[b][np.newaxis, :]]))
        return np.isin(codes, self.kernel.encode_rows(line))

    # spans

    def points_in_span(self, W: Subspace) -> np.ndarray:
        """Mask of the points lying in [W]."""
        annihilator = self.kernel.to_array(W.annihilator().basis, self.dim)
        return self.kernel.in_span_mask(self.coords, annihilator)

    def span_of(self, points: Iterable[int]) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.vector(i) for i in points])

    def bilinear_values(self, v: Vector) -> np.ndarray:
        """f(x, v) for every point x."""
        column = self.kernel.matmul(self.gram, self.kernel.to_array([v]).T)
        return self.kernel.matmul(self.coords, column)[:, 0]


def count_points_naive(phi: QuadraticForm) -> int:
    """Singular points counted by filtering every vector of F^d; independent of
    the streaming enumerator used by build_polar_space."""
    elements = list(enumerate_elements(phi.field))
    count = 0
    for v in itertools.product(elements, repeat=phi.dim):
        lead = next((a for a in v if not a.is_zero()), None)
        if lead is not None and lead.is_one() and eval_form(phi, v).is_zero():
            count += 1
    return count


def build_polar_space(phi: QuadraticForm, point_budget: int = DEFAULT_POINT_BUDGET) -> PolarSpace:
    """
    Enumerate P(phi).

    Args:
        phi: Non-degenerate form over a finite field with Witt index >= 1
        point_budget: Maximum number of projective points to enumerate

    Raises:
        InfiniteFieldError: Over F2(t)
        DegenerateFormError: If Rad(phi) is nonzero
        AnisotropicFormError: If there are no singular points
        BudgetExceededError: If PG(d-1, q) has more points than the budget
    """
    if not phi.field.is_finite:
        logger.error(f"Refusing to enumerate a polar space over {phi.field}")
        raise InfiniteFieldError(f"polar spaces are only enumerated over finite fields, not {phi.field}")
    total = projective_point_count(phi.field.order, phi.dim)
    if total > point_budget:
        logger.error(f"PG({phi.dim - 1},{phi.field.order}) has {total} points, budget {point_budget}")
        raise BudgetExceededError(f"{total} projective points exceed the point budget {point_budget}")
    limits = SearchLimits(point_budget=point_budget)
    decomposition = witt_decompose(phi, limits)
    report = gap_report(decomposition)
    kernel = TableKernel(phi.field)
    candidates = kernel.normalized_vectors(phi.dim)
    singular = kernel.quadratic_values(candidates, phi.coefficient_array()) == 0
    return PolarSpace(phi, candidates[singular], decomposition, report)


def export_geometry(P: PolarSpace) -> str:
    """Deterministic text dump: header, points, lines."""
    lines = [
        "# polar space export v1",
        f"field: {P.field.spec_text}",
        f"dim: {P.dim}",
        "form:",
    ]
    lines += [f"  {row}" for row in P.form.rows_text()]
    lines.append(f"points: {P.num_points}")
    lines += [f"  {p.index}: {p}" for p in P.points]
    lines.append(f"lines: {len(P.lines)}")
    lines += [f"  {i}: {' '.join(str(x) for x in line)}" for i, line in enumerate(P.lines)]
    return "\n".join(lines) + "\n"
