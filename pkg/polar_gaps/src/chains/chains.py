"""
Subspace Chains

Intrinsic computation of the gaps from chains of nice subspaces:

- anisotropic chain: frame closure up to the whole space, one dimension per step
- elliptic chain (characteristic 2): frame closure through elliptic subspaces,
  two dimensions per step, until no elliptic extension exists
- enrichment: one nice subspace with a one-dimensional radical inserted
  between consecutive elliptic members
- parabolic chain: top of a maximal elliptic chain up to the whole space

Every choice is driven by a seeded numpy Generator: first the frame, then a
permutation of the points that breaks every later tie.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.exceptions import FieldError, PreconditionError, TheoremViolationError
from ..algebra.linalg import Vector, inverse_matrix
from ..geometry.polar_space import PolarSpace
from ..geometry.subspaces import (
    Frame,
    GeoSubspace,
    is_nice,
    radical_dimension,
    random_frame,
    span_closure,
    subspace_from_span,
    whole_space,
)

logger = logging.getLogger(__name__)


def trial_seeds(seed: int, trials: int) -> List[int]:
    """Independent per-trial seeds derived from one master seed."""
    if trials < 1:
        raise PreconditionError(f"trials must be at least 1, got {trials}")
    return [int(s) for s in np.random.default_rng(seed).integers(0, 2 ** 32, size=trials)]


def first_in_order(order: np.ndarray, mask: np.ndarray) -> Optional[int]:
    """The first point of `order` selected by `mask`."""
    hits = order[mask[order]]
    return int(hits[0]) if hits.size else None


@dataclass(frozen=True)
class SubspaceChain:
    members: Tuple[GeoSubspace, ...]
    step_one: bool = True
    seed: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.members) - 1

    @property
    def top(self) -> GeoSubspace:
        return self.members[-1]

    def is_valid(self) -> bool:
        """Strictly increasing, every member nice, spans growing by one when step_one."""
        for lower, upper in zip(self.members, self.members[1:]):
            if not lower < upper:
                return False
            if self.step_one and upper.dim - lower.dim != 1:
                return False
        return all(is_nice(S) for S in self.members)


@dataclass(frozen=True)
class ExtensionStep:
    """E' = [W + p + q], with r spanning the radical of f on W + p."""
    p: int
    r: Vector
    q: int


@dataclass(frozen=True)
class EllipticChain:
    members: Tuple[GeoSubspace, ...]
    seed: Optional[int]
    frame: Frame
    steps: Tuple[ExtensionStep, ...] = ()
    enrichment: Optional[SubspaceChain] = None
    order: np.ndarray = field(default=None, compare=False, repr=False)

    @property
    def d(self) -> int:
        return len(self.members) - 1

    @property
    def top(self) -> GeoSubspace:
        return self.members[-1]


def _seeded_start(P: PolarSpace, seed: Optional[int]) -> Tuple[Frame, np.ndarray]:
    rng = np.random.default_rng(seed)
    frame = random_frame(P, rng)
    order = rng.permutation(P.num_points)
    return frame, order


def _extend_to_whole(P: PolarSpace, start: GeoSubspace, order: np.ndarray) -> List[GeoSubspace]:
    members = [start]
    current = start
    while current.size < P.num_points:
        x = first_in_order(order, ~current.mask)
        current = subspace_from_span(P, current.span.extend(P.vector(x)))
        members.append(current)
    return members


def build_anisotropic_chain(P: PolarSpace, seed: Optional[int] = None) -> SubspaceChain:
    """Maximal chain of nice subspaces from a seeded frame closure to P."""
    frame, order = _seeded_start(P, seed)
    members = _extend_to_whole(P, span_closure(P, frame.points), order)
    logger.debug(f"Anisotropic chain of length {len(members) - 1} (seed {seed})")
    return SubspaceChain(tuple(members), True, seed)


def _gram_inverse(P: PolarSpace, basis: np.ndarray) -> np.ndarray:
    kernel = P.kernel
    gram_w = kernel.matmul(kernel.matmul(basis, P.gram), basis.T)
    try:
        inverse = inverse_matrix(P.field, [kernel.to_vector(row) for row in gram_w])
    except FieldError:
        logger.error("Bilinear form is degenerate on an elliptic chain member")
        raise TheoremViolationError("elliptic chain member has a degenerate bilinearization")
    return kernel.to_array(inverse)


def _elliptic_extension(P: PolarSpace, E: GeoSubspace, order: np.ndarray) -> Optional[ExtensionStep]:
    """
    First (p, q) in order extending E by two dimensions with f staying
    non-degenerate, or None when E admits no elliptic extension.

    For every point p, r_p = p - w with w in W and f(w, .) = f(p, .) on W,
    so that r_p spans the radical of f on W + p; q must satisfy f(r_p, q) != 0.
    """
    kernel = P.kernel
    basis = kernel.to_array(E.span.basis, P.dim)
    X = P.coords
    rhs = kernel.matmul(kernel.matmul(X, P.gram), basis.T)
    y = kernel.matmul(rhs, _gram_inverse(P, basis))
    R = kernel.subtract(X, kernel.matmul(y, basis))
    values = kernel.matmul(kernel.matmul(R, P.gram), X.T) != 0
    extendable = ~E.mask & values.any(axis=1)
    p = first_in_order(order, extendable)
    if p is None:
        return None
    q = first_in_order(order, values[p])
    return ExtensionStep(p, kernel.to_vector(R[p]), q)


def build_elliptic_chain(P: PolarSpace, seed: Optional[int] = None) -> EllipticChain:
    """
    Maximal elliptic chain E0 < E1 < ... < Ed, E0 the closure of a seeded
    frame, each step adding two dimensions to the span.

    Raises:
        PreconditionError: Outside characteristic 2
    """
    if P.field.characteristic != 2:
        raise PreconditionError(
            f"elliptic chains are built in characteristic 2; over {P.field} use the anisotropic chain"
        )
    frame, order = _seeded_start(P, seed)
    current = span_closure(P, frame.points)
    members = [current]
    steps = []
    while True:
        step = _elliptic_extension(P, current, order)
        if step is None:
            break
        current = subspace_from_span(P, current.span.extend(P.vector(step.p), P.vector(step.q)))
        members.append(current)
        steps.append(step)
        logger.debug(f"Elliptic step {len(steps)}: p={step.p}, q={step.q}, {current.size} points")
    return EllipticChain(tuple(members), seed, frame, tuple(steps), None, order)


def enrich_chain(E: EllipticChain) -> EllipticChain:
    """Insert P_i = [span(E_i) + p] between E_i and E_{i+1}, p the first point
    of E_{i+1} outside E_i."""
    if E.members[0].owner.field.characteristic != 2:
        raise PreconditionError("enrichment is defined in characteristic 2")
    P = E.members[0].owner
    order = E.order if E.order is not None else np.arange(P.num_points)
    interleaved = [E.members[0]]
    for lower, upper in zip(E.members, E.members[1:]):
        p = first_in_order(order, upper.mask & ~lower.mask)
        interleaved.append(subspace_from_span(P, lower.span.extend(P.vector(p))))
        interleaved.append(upper)
    enrichment = SubspaceChain(tuple(interleaved), True, E.seed)
    return EllipticChain(E.members, E.seed, E.frame, E.steps, enrichment, E.order)


def check_direct_complement(P: PolarSpace, S: GeoSubspace) -> bool:
    """span(S) + Rad(f) = V with trivial intersection."""
    return (S.span.intersection(P.radical).dim == 0
            and S.span.dim + P.radical.dim == P.dim)


def maximal_elliptic_top(P: PolarSpace, seed: Optional[int] = None) -> Tuple[GeoSubspace, np.ndarray]:
    """Top of a maximal elliptic chain; in odd characteristic the whole space."""
    if P.field.characteristic == 2:
        E = build_elliptic_chain(P, seed)
        return E.top, E.order
    _, order = _seeded_start(P, seed)
    return whole_space(P), order


def parabolic_chain_from(P: PolarSpace, top: GeoSubspace, order: np.ndarray,
                         seed: Optional[int] = None) -> SubspaceChain:
    """
    Step-1 chain from a maximal elliptic-or-hyperbolic subspace to P.

    Raises:
        TheoremViolationError: If the top's span is not a direct complement of Rad(f)
    """
    if not check_direct_complement(P, top):
        logger.error(f"Maximal elliptic subspace of dim {top.dim} is not a complement of Rad(f)")
        raise TheoremViolationError("maximal elliptic subspace does not complement the bilinear radical")
    return SubspaceChain(tuple(_extend_to_whole(P, top, order)), True, seed)


def parabolic_chain(P: PolarSpace, seed: Optional[int] = None) -> SubspaceChain:
    """Step-1 chain from the top of a seeded maximal elliptic chain to P."""
    top, order = maximal_elliptic_top(P, seed)
    return parabolic_chain_from(P, top, order, seed)


def _agreed(lengths: Sequence[int], what: str, seeds: Sequence[int]) -> int:
    if len(set(lengths)) != 1:
        logger.error(f"{what} lengths disagree across trials: {dict(zip(seeds, lengths))}")
        raise TheoremViolationError(f"{what} lengths differ across seeded trials: {sorted(set(lengths))}")
    return lengths[0]


def anisotropic_gap(P: PolarSpace, trials: int = 20, seed: int = 0) -> int:
    seeds = trial_seeds(seed, trials)
    return _agreed([build_anisotropic_chain(P, s).length for s in seeds], "anisotropic chain", seeds)


def elliptic_gap(P: PolarSpace, trials: int = 20, seed: int = 0) -> int:
    """
    Length of a maximal enrichment of a maximal elliptic chain (characteristic 2),
    or of a maximal nice-subspace chain (odd characteristic).

    Raises:
        TheoremViolationError: If the seeded trials disagree
    """
    seeds = trial_seeds(seed, trials)
    if P.field.characteristic != 2:
        return _agreed([build_anisotropic_chain(P, s).length for s in seeds], "elliptic chain", seeds)
    lengths = [enrich_chain(build_elliptic_chain(P, s)).enrichment.length for s in seeds]
    return _agreed(lengths, "enrichment", seeds)


def parabolic_gap(P: PolarSpace, trials: int = 20, seed: int = 0) -> int:
    """
    Length of a maximal chain above a maximal elliptic subspace.

    Raises:
        TheoremViolationError: If the seeded trials disagree or a complement check fails
    """
    seeds = trial_seeds(seed, trials)
    return _agreed([parabolic_chain(P, s).length for s in seeds], "parabolic chain", seeds)


@dataclass(frozen=True)
class IntrinsicGapReport:
    anisotropic_chain_length: int
    elliptic_gap: int
    parabolic_gap: int
    trials: int
    seeds: Tuple[int, ...]

    @property
    def d(self) -> int:
        """Number of elliptic steps."""
        return self.elliptic_gap // 2

    @property
    def z(self) -> int:
        return self.parabolic_gap

    def as_dict(self) -> Dict[str, object]:
        return {
            "r": self.anisotropic_chain_length,
            "e": self.elliptic_gap,
            "p": self.parabolic_gap,
            "trials": self.trials,
        }


def intrinsic_gaps(P: PolarSpace, trials: int = 20, seed: int = 0) -> IntrinsicGapReport:
    """All three chain-derived gaps, each agreed across `trials` seeded constructions."""
    seeds = trial_seeds(seed, trials)
    report = IntrinsicGapReport(
        anisotropic_chain_length=anisotropic_gap(P, trials, seed),
        elliptic_gap=elliptic_gap(P, trials, seed),
        parabolic_gap=parabolic_gap(P, trials, seed),
        trials=trials,
        seeds=tuple(seeds),
    )
    logger.info(f"Intrinsic gaps over {P.field}: r={report.anisotropic_chain_length}, "
                f"e={report.elliptic_gap}, p={report.parabolic_gap}")
    return report


def chain_radical_profile(chain: SubspaceChain) -> List[int]:
    """Restricted bilinear radical dimension of every member."""
    return [radical_dimension(S) for S in chain.members]
