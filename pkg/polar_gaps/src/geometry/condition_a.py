"""
Maximal singular subspaces and Condition (A).

Condition (A): for non-collinear points a, b, every maximal singular subspace
M of the space that contains a maximal singular subspace N of {a,b}^perp must
meet the hyperbolic line {a,b}^perp-perp. It holds exactly for the spaces
admitting an embedding of dimension 2n.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set

import numpy as np

from ..algebra.exceptions import BudgetExceededError, PreconditionError
from ..algebra.kernels import projective_point_count
from .polar_space import PolarSpace

logger = logging.getLogger(__name__)

DEFAULT_SUBSPACE_BUDGET = 10 ** 5


def maximal_singular_subspaces(P: PolarSpace, budget: int = DEFAULT_SUBSPACE_BUDGET) -> List[FrozenSet[int]]:
    """
    Every maximal singular subspace of P as a point set.

    Depth-first extension of cliques of the collinearity graph, each clique
    closed to the points of its span before it is extended further.

    Raises:
        BudgetExceededError: If more than `budget` singular subspaces are visited
    """
    visited: Set[FrozenSet[int]] = set()
    maximal: List[FrozenSet[int]] = []
    stack = [frozenset([i]) for i in range(P.num_points - 1, -1, -1)]
    while stack:
        current = stack.pop()
        if current in visited:
            continue
        visited.add(current)
        if len(visited) > budget:
            logger.error(f"Singular subspace enumeration passed the budget of {budget}")
            raise BudgetExceededError(f"more than {budget} singular subspaces visited")
        mask = P.mask(current)
        candidates = np.flatnonzero(P.perp_mask(mask) & ~mask)
        if candidates.size == 0:
            maximal.append(current)
            continue
        children: Set[FrozenSet[int]] = set()
        span = P.span_of(sorted(current))
        for x in candidates:
            child = P.as_set(P.points_in_span(span.extend(P.vector(int(x)))))
            if child not in visited and child not in children:
                children.add(child)
                stack.append(child)
    maximal.sort(key=sorted)
    expected = projective_point_count(P.q, P.rank)
    if any(len(M) != expected for M in maximal):
        logger.warning(f"Maximal singular subspaces of unequal size over {P.field}")
    logger.info(f"{len(maximal)} maximal singular subspaces from {len(visited)} visited")
    return maximal


@dataclass(frozen=True)
class ConditionAWitness:
    a: int
    b: int
    N: FrozenSet[int]
    M: FrozenSet[int]

    def as_dict(self) -> Dict[str, object]:
        return {"a": self.a, "b": self.b, "N": sorted(self.N), "M": sorted(self.M)}


@dataclass(frozen=True)
class ConditionAResult:
    holds: bool
    witness: Optional[ConditionAWitness]
    maximal_count: int


def check_condition_A(P: PolarSpace, budget: int = DEFAULT_SUBSPACE_BUDGET,
                      maximal: Optional[List[FrozenSet[int]]] = None) -> ConditionAResult:
    """
    Exhaustive check of Condition (A); the first failing (a, b, N, M) in
    index order is returned as witness.

    Raises:
        PreconditionError: Rank below 2 (every perp of a pair is empty)
        BudgetExceededError: From the maximal subspace enumeration
    """
    if P.rank < 2:
        raise PreconditionError("Condition (A) requires rank at least 2")
    if maximal is None:
        maximal = maximal_singular_subspaces(P, budget)
    M = np.zeros((len(maximal), P.num_points), dtype=np.float32)
    for k, members in enumerate(maximal):
        M[k, sorted(members)] = 1.0
    not_perp = (~P.perp_matrix).astype(np.float32)
    target = projective_point_count(P.q, P.rank - 1)
    for a in range(P.num_points):
        bs = np.flatnonzero(~P.perp_matrix[a])
        bs = bs[bs > a]
        if bs.size == 0:
            continue
        pair_perp = P.perp_matrix[a][np.newaxis, :] & P.perp_matrix[bs]
        hyperbolic = (pair_perp.astype(np.float32) @ not_perp.T) == 0
        in_perp = M @ pair_perp.astype(np.float32).T
        in_line = M @ hyperbolic.astype(np.float32).T
        failures = (in_perp == target) & (in_line == 0)
        if failures.any():
            k, j = np.argwhere(failures.T)[0][::-1]
            b = int(bs[j])
            N = frozenset(maximal[k] & P.as_set(pair_perp[j]))
            witness = ConditionAWitness(a, b, N, maximal[k])
            logger.info(f"Condition (A) fails at a={a}, b={b}")
            return ConditionAResult(False, witness, len(maximal))
    return ConditionAResult(True, None, len(maximal))
