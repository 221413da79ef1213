"""
Witt Decomposition and Gap Invariants

Splits hyperbolic pairs off a non-degenerate quadratic form until the remainder
is anisotropic:

    V = (V_1 + ... + V_n) + V0' + Rad(f)

and derives the algebraic invariants n (rank), e = dim V0' (elliptic gap),
p = dim Rad(f) (parabolic gap) and r = e + p (anisotropic gap).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .exceptions import AnisotropicFormError, BudgetExceededError, DegenerateFormError, InconclusiveError
from .field import FieldSpec
from .forms import (
    QuadraticForm,
    bilinearize,
    eval_bilinear,
    eval_form,
    form_in_basis,
    radical_bilinear,
    radical_form,
    restrict,
)
from .kernels import TableKernel, projective_point_count
from .linalg import Subspace, Vector, add_vectors, nullspace, scale_vector

logger = logging.getLogger(__name__)

HYPERBOLIC = "hyperbolic"
ELLIPTIC = "elliptic"
PARABOLIC = "parabolic"


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for singular-vector searches."""
    point_budget: int = 10 ** 6
    search_degree: int = 3
    search_budget: int = 20000


DEFAULT_LIMITS = SearchLimits()


def _finite_singular_vector(phi: QuadraticForm, avoid: Subspace, limits: SearchLimits) -> Optional[Vector]:
    kernel = TableKernel(phi.field)
    count = projective_point_count(kernel.q, phi.dim)
    if count > limits.point_budget:
        raise BudgetExceededError(
            f"singular-vector search over {count} points exceeds budget {limits.point_budget}"
        )
    points = kernel.normalized_vectors(phi.dim)
    singular = kernel.quadratic_values(points, phi.coefficient_array()) == 0
    if avoid.dim:
        annihilator = kernel.to_array(avoid.annihilator().basis, phi.dim)
        singular &= ~kernel.in_span_mask(points, annihilator)
    hits = np.flatnonzero(singular)
    if hits.size == 0:
        return None
    return kernel.to_vector(points[hits[0]])


def _polynomial_vectors(F: FieldSpec, d: int, degree: int) -> Iterator[Vector]:
    """Vectors of polynomials of degree <= `degree` with at least one entry of
    exactly that degree, in lexicographic order of their integer codes."""
    low = 1 << degree if degree else 1
    for codes in itertools.product(range(1 << (degree + 1)), repeat=d):
        if max(codes) < low:
            continue
        yield tuple(F.parse_element(format(c, "b")[::-1]) for c in codes)


def certify_anisotropic(phi: QuadraticForm) -> Optional[bool]:
    """Three-valued anisotropy test (exhaustive over finite fields).

    True: provably no nonzero singular vector; False: provably one exists;
    None: neither criterion applies.

    Criteria: a singular radical vector decides isotropy exactly. Otherwise,
    with C a complement of Rad(f), phi = phi_C + phi_R. If C = 0 the form is
    anisotropic. If C is a single block a x^2 + xy + b y^2 with ab = 1 it is a
    scaled norm form whose nonzero values all have degree congruent to deg a
    mod 2; next to a radical line whose value has the other degree parity no
    cancellation is possible.
    """
    if phi.field.is_finite:
        return _finite_singular_vector(phi, Subspace.zero(phi.field, phi.dim), DEFAULT_LIMITS) is None
    if radical_form(phi).dim:
        return False
    f = bilinearize(phi)
    rad = radical_bilinear(f)
    complement = rad.complement_basis()
    if not complement:
        return True
    if len(complement) != 2 or rad.dim > 1:
        return None
    a, b = complement
    b = scale_vector(eval_bilinear(f, a, b).inverse(), b)
    alpha, beta = eval_form(phi, a), eval_form(phi, b)
    if alpha.is_zero() or beta.is_zero():
        return False
    if not (alpha * beta).is_one():
        return None
    if rad.dim == 0:
        return True
    gamma = eval_form(phi, rad.basis[0])
    if (gamma.degree - alpha.degree) % 2:
        return True
    return None


def _rational_singular_vector(phi: QuadraticForm, avoid: Subspace, limits: SearchLimits) -> Optional[Vector]:
    if certify_anisotropic(phi):
        return None
    examined = 0
    for degree in range(limits.search_degree + 1):
        for v in _polynomial_vectors(phi.field, phi.dim, degree):
            examined += 1
            if examined > limits.search_budget:
                raise InconclusiveError(
                    f"no singular vector among {limits.search_budget} candidates and no anisotropy certificate"
                )
            if eval_form(phi, v).is_zero() and not avoid.contains(v):
                return v
    raise InconclusiveError(
        f"no singular vector up to degree {limits.search_degree} and no anisotropy certificate"
    )


def find_singular_vector(phi: QuadraticForm, avoid: Optional[Subspace] = None,
                         limits: SearchLimits = DEFAULT_LIMITS) -> Optional[Vector]:
    """First nonzero singular vector outside `avoid`, or None when none exists.

    Finite fields enumerate normalized representatives in lexicographic order.
    F2(t) searches polynomial vectors by increasing degree.

    Raises:
        BudgetExceededError: Finite search space larger than the point budget
        InconclusiveError: F2(t) search exhausted without a certificate
    """
    if avoid is None:
        avoid = Subspace.zero(phi.field, phi.dim)
    if phi.field.is_finite:
        return _finite_singular_vector(phi, avoid, limits)
    return _rational_singular_vector(phi, avoid, limits)


@dataclass(frozen=True)
class WittDecomposition:
    field: FieldSpec
    dim: int
    pairs: Tuple[Tuple[Vector, Vector], ...]
    anisotropic_complement: Subspace
    radical: Subspace

    @property
    def n(self) -> int:
        return len(self.pairs)

    def basis(self) -> List[Vector]:
        """v_1, w_1, ..., v_n, w_n, then V0', then Rad(f)."""
        vectors = [v for pair in self.pairs for v in pair]
        return vectors + list(self.anisotropic_complement.basis) + list(self.radical.basis)

    def block_form(self, phi: QuadraticForm) -> QuadraticForm:
        return form_in_basis(phi, self.basis())


def witt_decompose(phi: QuadraticForm, limits: SearchLimits = DEFAULT_LIMITS) -> WittDecomposition:
    """
    Split hyperbolic pairs off phi.

    Tie-breaking always takes the enumeration-first singular vector and the
    first echelon basis vector of the current space as partner.

    Raises:
        DegenerateFormError: If Rad(phi) is nonzero
        InconclusiveError: Over F2(t) when the remainder cannot be certified
    """
    F, d = phi.field, phi.dim
    if radical_form(phi).dim:
        logger.error(f"Degenerate form over {F} of dimension {d}")
        raise DegenerateFormError(f"form has a nonzero radical over {F}")
    f = bilinearize(phi)
    rad = radical_bilinear(f)
    current = Subspace.full(F, d)
    pairs: List[Tuple[Vector, Vector]] = []
    while current.dim > rad.dim:
        local = restrict(phi, current)
        found = find_singular_vector(local, current.in_coordinates(rad), limits)
        if found is None:
            break
        v = current.lift(found)
        w = next(u for u in current.basis if not eval_bilinear(f, v, u).is_zero())
        w = scale_vector(eval_bilinear(f, v, w).inverse(), w)
        w = add_vectors(w, scale_vector(-eval_form(phi, w), v))
        pairs.append((v, w))
        equations = [
            tuple(eval_bilinear(f, u, x) for u in current.basis)
            for x in (v, w)
        ]
        current = Subspace.span(F, d, [current.lift(c) for c in nullspace(F, equations, current.dim)])
        logger.debug(f"Split hyperbolic pair {len(pairs)} over {F}")
    complement = Subspace.span(F, d, current.relative_complement(rad))
    return WittDecomposition(F, d, tuple(pairs), complement, rad)


@dataclass(frozen=True)
class GapReport:
    n: int
    e: int
    p: int
    r: int
    label: str

    @classmethod
    def from_counts(cls, n: int, e: int, p: int) -> "GapReport":
        if e == 0 and p == 0:
            label = HYPERBOLIC
        elif p == 0:
            label = ELLIPTIC
        elif e == 0:
            label = PARABOLIC
        else:
            label = f"({e},{p})-orthogonal"
        return cls(n, e, p, e + p, label)

    def as_dict(self) -> Dict[str, object]:
        return {"n": self.n, "e": self.e, "p": self.p, "r": self.r, "label": self.label}


def gap_report(decomposition: WittDecomposition) -> GapReport:
    """
    Read (n, e, p, r) off a decomposition.

    Raises:
        AnisotropicFormError: If the Witt index is 0
    """
    if decomposition.n == 0:
        raise AnisotropicFormError(f"form over {decomposition.field} is anisotropic; its polar space is empty")
    return GapReport.from_counts(
        decomposition.n,
        decomposition.anisotropic_complement.dim,
        decomposition.radical.dim,
    )


def gaps(phi: QuadraticForm, limits: SearchLimits = DEFAULT_LIMITS) -> GapReport:
    """Algebraic rank and gaps of a non-degenerate form with Witt index >= 1."""
    return gap_report(witt_decompose(phi, limits))
