"""
Geometric Subspaces, Frames and Classification

A GeoSubspace is a set of points of a polar space closed under line absorption
together with the linear span of its coordinates. Subspaces built from a span,
and closures of non-degenerate rank at least 2, are embedded: their points are
exactly the singular points of their span.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from ..algebra.exceptions import PreconditionError, TheoremViolationError
from ..algebra.forms import bilinearize, radical_bilinear, radical_form, restrict
from ..algebra.linalg import Subspace
from ..algebra.witt import ELLIPTIC, HYPERBOLIC, WittDecomposition, witt_decompose
from .polar_space import PolarSpace

logger = logging.getLogger(__name__)

OTHER = "other"


@dataclass(frozen=True)
class GeoSubspace:
    owner: PolarSpace = field(compare=False, repr=False)
    point_set: FrozenSet[int]
    span: Subspace

    @property
    def size(self) -> int:
        return len(self.point_set)

    @property
    def dim(self) -> int:
        return self.span.dim

    @property
    def mask(self) -> np.ndarray:
        return self.owner.mask(self.point_set)

    def is_embedded(self) -> bool:
        """point_set equals the singular points of [span] and spans it back."""
        P = self.owner
        return (P.as_set(P.points_in_span(self.span)) == self.point_set
                and P.span_of(sorted(self.point_set)) == self.span)

    def __le__(self, other: "GeoSubspace") -> bool:
        return self.point_set <= other.point_set

    def __lt__(self, other: "GeoSubspace") -> bool:
        return self.point_set < other.point_set


def subspace_from_span(P: PolarSpace, W: Subspace) -> GeoSubspace:
    """The subspace of points lying in [W]; its span is recomputed from those points."""
    points = P.as_set(P.points_in_span(W))
    return GeoSubspace(P, points, P.span_of(sorted(points)))


def whole_space(P: PolarSpace) -> GeoSubspace:
    return subspace_from_span(P, Subspace.full(P.field, P.dim))


def span_closure(P: PolarSpace, X: Iterable[int]) -> GeoSubspace:
    """
    Smallest point set containing X in which every line meeting it in two
    points lies entirely.

    Closures of non-degenerate rank at least 2 are the singular points of
    their span; below that (a conic triple, say) the closure may be a proper
    subset and is_embedded() reports False.

    Raises:
        TheoremViolationError: If a closure of non-degenerate rank >= 2 differs
            from the singular points of its span
    """
    mask = P.mask(X)
    incidence = P.line_incidence.astype(np.int64)
    while True:
        absorbed = (incidence @ mask.astype(np.int64)) >= 2
        grown = mask | np.any(P.line_incidence[absorbed], axis=0) if absorbed.any() else mask
        if np.array_equal(grown, mask):
            break
        mask = grown
    points = P.as_set(mask)
    span = P.span_of(sorted(points))
    closure = GeoSubspace(P, points, span)
    if P.as_set(P.points_in_span(span)) == points:
        return closure
    if restricted_structure(closure).witt_index < 2:
        logger.debug(f"Closure of {len(points)} points has non-degenerate rank below 2 and is not embedded")
        return closure
    logger.error(f"Closure of {len(points)} points is not the point set of its span")
    raise TheoremViolationError("span closure does not match the singular points of its linear span")


@dataclass(frozen=True)
class Frame:
    """Pairs (p_i, p'_i) of point indices."""
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def points(self) -> List[int]:
        return [x for pair in self.pairs for x in pair]

    def is_valid(self, P: PolarSpace) -> bool:
        """Collinearity pattern p_i ~ p'_j iff i != j, each half pairwise
        collinear and spanning an n-dimensional singular subspace."""
        lefts = [a for a, _ in self.pairs]
        rights = [b for _, b in self.pairs]
        for i in range(self.n):
            for j in range(self.n):
                if not P.collinear(lefts[i], lefts[j]) or not P.collinear(rights[i], rights[j]):
                    return False
                if P.collinear(lefts[i], rights[j]) != (i != j):
                    return False
        return P.span_of(lefts).dim == self.n and P.span_of(rights).dim == self.n

    def in_point_perp(self, P: PolarSpace) -> np.ndarray:
        """Mask of the points x whose perp contains the whole frame."""
        return np.all(P.perp_matrix[self.points], axis=0)


def find_frame(P: PolarSpace) -> Frame:
    """The frame read off the Witt decomposition pairs of P's form."""
    pairs = tuple((P.index_of(v), P.index_of(w)) for v, w in P.decomposition.pairs)
    return Frame(pairs)


def random_frame(P: PolarSpace, rng: np.random.Generator) -> Frame:
    """Seeded frame: a random point, a random non-collinear partner, then
    recurse inside the perp of the pair."""
    allowed = P.all_mask
    pairs = []
    for _ in range(P.rank):
        a = int(rng.choice(np.flatnonzero(allowed)))
        partners = np.flatnonzero(allowed & ~P.perp_matrix[a])
        if partners.size == 0:
            raise TheoremViolationError(f"point {a} has no opposite point in the remaining perp")
        b = int(rng.choice(partners))
        pairs.append((a, b))
        allowed = allowed & P.perp_matrix[a] & P.perp_matrix[b]
    return Frame(tuple(pairs))


# restricted forms

@dataclass(frozen=True)
class RestrictedStructure:
    """phi on span(S) split as C + Rad(phi_W), with the Witt decomposition of C."""
    singular_radical: Subspace
    nondegenerate_part: Subspace
    decomposition: Optional[WittDecomposition]
    bilinear_radical_dim: int

    @property
    def witt_index(self) -> int:
        return self.decomposition.n if self.decomposition else 0


def restricted_structure(S: GeoSubspace) -> RestrictedStructure:
    P = S.owner
    F, d, W = P.field, P.dim, S.span
    if W.dim == 0:
        raise PreconditionError("subspace is empty")
    local = restrict(P.form, W)
    rad_f = radical_bilinear(bilinearize(local))
    rad_phi = Subspace.span(F, d, [W.lift(x) for x in radical_form(local).basis])
    C = Subspace.span(F, d, W.relative_complement(rad_phi))
    decomposition = witt_decompose(restrict(P.form, C)) if C.dim else None
    return RestrictedStructure(rad_phi, C, decomposition, rad_f.dim)


def subspace_rank(S: GeoSubspace) -> int:
    """Witt index of phi on span(S); a singular subspace gets its own dimension."""
    structure = restricted_structure(S)
    return structure.singular_radical.dim + structure.witt_index


def nice_frame(S: GeoSubspace) -> Optional[Frame]:
    """A frame of the ambient space inside S, or None when S contains none."""
    P = S.owner
    structure = restricted_structure(S)
    if structure.witt_index < P.rank:
        return None
    C = structure.nondegenerate_part
    pairs = tuple((P.index_of(C.lift(v)), P.index_of(C.lift(w)))
                  for v, w in structure.decomposition.pairs)
    return Frame(pairs)


def is_nice(S: GeoSubspace) -> bool:
    return nice_frame(S) is not None


def radical_dimension(S: GeoSubspace) -> int:
    """dim Rad of the bilinearization of phi restricted to span(S)."""
    return radical_bilinear(bilinearize(restrict(S.owner.form, S.span))).dim


# hyperbolic lines computed inside a subspace

def inner_hyperbolic_line(S: GeoSubspace, a: int, b: int) -> FrozenSet[int]:
    """{a,b}^perp-perp with both perps taken inside S."""
    P = S.owner
    inside = S.mask
    first = inside & P.perp_matrix[a] & P.perp_matrix[b]
    second = inside & P.perp_mask(first)
    return P.as_set(second)


def opposite_pairs(S: GeoSubspace) -> Iterable[Tuple[int, int]]:
    """Non-collinear pairs a < b of S in index order."""
    P = S.owner
    members = sorted(S.point_set)
    inside = S.mask
    for a in members:
        for b in np.flatnonzero(inside & ~P.perp_matrix[a]):
            if b > a:
                yield a, int(b)


def hyperbolic_line_rows(S: GeoSubspace, a: int) -> Tuple[np.ndarray, np.ndarray]:
    """Points b > a of S opposite a, and the hyperbolic lines {a,b} inside S as rows."""
    P = S.owner
    inside = S.mask
    bs = np.flatnonzero(inside & ~P.perp_matrix[a])
    bs = bs[bs > a]
    first = inside[np.newaxis, :] & P.perp_matrix[a][np.newaxis, :] & P.perp_matrix[bs]
    blocked = (first.astype(np.float32) @ (~P.perp_matrix).astype(np.float32)) > 0
    return bs, inside[np.newaxis, :] & ~blocked


def hyperbolic_line_sizes(S: GeoSubspace) -> Counter:
    """Multiset of hyperbolic line sizes over every non-collinear pair of S."""
    sizes: Counter = Counter()
    for a in sorted(S.point_set):
        _, rows = hyperbolic_line_rows(S, a)
        sizes.update(int(n) for n in rows.sum(axis=1))
    return sizes


def _all_lines_have_two_points(S: GeoSubspace) -> bool:
    for a in sorted(S.point_set):
        _, rows = hyperbolic_line_rows(S, a)
        if rows.size and np.any(rows.sum(axis=1) != 2):
            return False
    return True


def classify_subspace(S: GeoSubspace) -> str:
    """
    Hyperbolic if S is the closure of one of its frames, elliptic if otherwise
    every hyperbolic line of S has exactly two points, else other.

    In rank 1 hyperbolic lines carry no information (no two points are
    collinear), so the label comes from the radical of the restricted
    bilinearization alone.

    Raises:
        PreconditionError: If S contains no frame
        TheoremViolationError: If the line test and the radical test disagree
    """
    P = S.owner
    frame = nice_frame(S)
    if frame is None:
        raise PreconditionError("classification requires a subspace containing a frame")
    radical_free = radical_dimension(S) == 0
    if span_closure(P, frame.points).point_set == S.point_set:
        label = HYPERBOLIC
    elif P.rank < 2:
        return ELLIPTIC if radical_free else OTHER
    elif _all_lines_have_two_points(S):
        label = ELLIPTIC
    else:
        label = OTHER
    if (label != OTHER) != radical_free:
        logger.error(f"Subspace of {S.size} points classified {label} with radical-free={radical_free}")
        raise TheoremViolationError(
            f"hyperbolic-line classification '{label}' disagrees with the restricted radical test"
        )
    return label


def is_elliptic_by_agreement(S: GeoSubspace) -> bool:
    """Alternative ellipticity: S properly contains the closure F of its frame
    and every hyperbolic line of F is the trace on F of the line computed in S."""
    P = S.owner
    frame = nice_frame(S)
    if frame is None:
        raise PreconditionError("agreement test requires a subspace containing a frame")
    closure = span_closure(P, frame.points)
    if closure.point_set == S.point_set:
        return False
    for a, b in opposite_pairs(closure):
        if inner_hyperbolic_line(closure, a, b) != inner_hyperbolic_line(S, a, b) & closure.point_set:
            return False
    return True
