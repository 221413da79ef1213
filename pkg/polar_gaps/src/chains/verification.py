"""
Verification Suite

Runs every structural property of a polar space and its chains against one
enumerated space and collects pass/fail/skip records with witnesses. The
overall verdict requires every non-experimental check to pass (or be skipped)
and the chain-derived gaps to equal the Witt-derived gaps.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.exceptions import PreconditionError, TheoremViolationError
from ..algebra.field import square_class_degree
from ..algebra.witt import ELLIPTIC, HYPERBOLIC, GapReport
from ..geometry.condition_a import DEFAULT_SUBSPACE_BUDGET, check_condition_A, maximal_singular_subspaces
from ..geometry.polar_space import ALGEBRAIC, PolarSpace, count_points_naive
from ..geometry.subspaces import (
    OTHER,
    GeoSubspace,
    classify_subspace,
    find_frame,
    hyperbolic_line_rows,
    inner_hyperbolic_line,
    is_elliptic_by_agreement,
    opposite_pairs,
    random_frame,
    span_closure,
    whole_space,
)
from ..utils.monitoring import RunMonitor
from .chains import (
    EllipticChain,
    IntrinsicGapReport,
    SubspaceChain,
    build_anisotropic_chain,
    build_elliptic_chain,
    chain_radical_profile,
    check_direct_complement,
    enrich_chain,
    parabolic_chain,
    parabolic_chain_from,
    trial_seeds,
)

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

SPAN_SAMPLE = 200
RANK_TWO_NOTE = "requires rank at least 2"


@dataclass
class CheckRecord:
    check_id: str
    property: str
    status: str
    witness: Optional[Dict[str, object]] = None
    seed: Optional[int] = None
    elapsed: Optional[float] = None
    note: Optional[str] = None
    experimental: bool = False

    def as_dict(self) -> Dict[str, object]:
        record = {
            "check_id": self.check_id,
            "property": self.property,
            "status": self.status,
            "experimental": self.experimental,
        }
        for key in ("witness", "seed", "elapsed", "note"):
            value = getattr(self, key)
            if value is not None:
                record[key] = value
        return record


@dataclass
class VerificationReport:
    field: str
    dim: int
    num_points: int
    num_lines: int
    algebraic: GapReport
    intrinsic: Optional[IntrinsicGapReport]
    checks: List[CheckRecord] = field(default_factory=list)
    hyperbolic_line_sizes: Dict[int, int] = field(default_factory=dict)
    resources: Dict[str, object] = field(default_factory=dict)

    @property
    def reconciled(self) -> bool:
        if self.intrinsic is None:
            return False
        return (self.intrinsic.anisotropic_chain_length, self.intrinsic.elliptic_gap,
                self.intrinsic.parabolic_gap) == (self.algebraic.r, self.algebraic.e, self.algebraic.p)

    @property
    def passed(self) -> bool:
        binding = [c for c in self.checks if not c.experimental]
        return self.reconciled and all(c.status != FAIL for c in binding)

    def failures(self) -> List[CheckRecord]:
        return [c for c in self.checks if c.status == FAIL and not c.experimental]

    def status(self, check_id: str) -> str:
        return next(c.status for c in self.checks if c.check_id == check_id)

    def summary(self) -> Dict[str, object]:
        summary = {
            "record": "summary",
            "field": self.field,
            "dim": self.dim,
            "points": self.num_points,
            "lines": self.num_lines,
            "algebraic": self.algebraic.as_dict(),
            "intrinsic": self.intrinsic.as_dict() if self.intrinsic else None,
            "hyperbolic_line_sizes": {str(k): v for k, v in sorted(self.hyperbolic_line_sizes.items())},
            "passed": self.passed,
        }
        if self.resources:
            summary["resources"] = self.resources
        return summary

    def as_records(self) -> List[Dict[str, object]]:
        return [self.summary()] + [dict(record="check", **c.as_dict()) for c in self.checks]


class _Suite:
    """Accumulates check records for one space."""

    def __init__(self, P: PolarSpace, seed: int, monitor: RunMonitor):
        self.P = P
        self.seed = seed
        self.monitor = monitor
        self.records: List[CheckRecord] = []

    def run(self, check_id: str, prop: str, check: Callable[[], Tuple[str, Optional[dict], Optional[str]]],
            seed: Optional[int] = None, experimental: bool = False) -> CheckRecord:
        with self.monitor.track(check_id):
            try:
                status, witness, note = check()
            except (TheoremViolationError, PreconditionError) as e:
                status, witness, note = FAIL, None, str(e)
        record = CheckRecord(check_id, prop, status, witness, seed, self.monitor.elapsed_for(check_id),
                             note, experimental)
        if status == FAIL:
            logger.warning(f"Check {check_id} failed: {note or witness}")
        else:
            logger.debug(f"Check {check_id}: {status}")
        self.records.append(record)
        return record

    def skip(self, check_id: str, prop: str, note: str, experimental: bool = False) -> None:
        self.records.append(CheckRecord(check_id, prop, SKIP, note=note, experimental=experimental))


def _passes(condition: bool, witness: Optional[dict] = None, note: Optional[str] = None):
    return (PASS, None, note) if condition else (FAIL, witness, note)


def _agreed_length(lengths: Sequence[int], seeds: Sequence[int]) -> Tuple[Optional[int], Optional[dict]]:
    if len(set(lengths)) == 1:
        return lengths[0], None
    return None, {"lengths_by_seed": {str(s): n for s, n in zip(seeds, lengths)}}


def _label_of(report: GapReport) -> str:
    if report.label in (HYPERBOLIC, ELLIPTIC):
        return report.label
    return OTHER


def verify_theorems(P: PolarSpace, trials: int = 20, seed: int = 0, timings: bool = False,
                    subspace_budget: int = DEFAULT_SUBSPACE_BUDGET) -> VerificationReport:
    """
    Run the full suite against P.

    Args:
        P: Enumerated polar space
        trials: Number of seeded chain constructions per chain kind
        seed: Master seed; per-trial seeds derive from it
        timings: Record elapsed seconds and peak memory
        subspace_budget: Bound for the maximal singular subspace enumeration

    Raises:
        BudgetExceededError: From the maximal singular subspace enumeration
    """
    monitor = RunMonitor(timings)
    suite = _Suite(P, seed, monitor)
    algebraic = P.gap_report
    seeds = trial_seeds(seed, trials)
    char2 = P.field.characteristic == 2
    logger.info(f"Verifying polar space over {P.field}: {P.num_points} points, {trials} trials")

    labels: Dict[FrozenSet[int], str] = {}

    def classify(S: GeoSubspace) -> str:
        if S.point_set not in labels:
            labels[S.point_set] = classify_subspace(S)
        return labels[S.point_set]

    # geometry

    def point_count():
        naive = count_points_naive(P.form)
        return _passes(naive == P.num_points, {"naive": naive, "streaming": P.num_points})

    suite.run("geometry.point_count_cross_check",
              "filtering every vector and streaming normalized representatives give the same point count",
              point_count)

    def non_degenerate():
        central = np.flatnonzero(np.all(P.perp_matrix, axis=0))
        return _passes(central.size == 0, {"points_collinear_with_all": central.tolist()})

    suite.run("geometry.non_degenerate", "no point is collinear with every point", non_degenerate)

    def line_sizes():
        bad = [i for i, line in enumerate(P.lines) if len(line) != P.q + 1]
        return _passes(not bad, {"lines": bad[:10]})

    suite.run("geometry.line_size", "every line has q+1 points", line_sizes)

    sizes: Counter = Counter()
    pairs_checked = []
    mismatch = None
    whole = whole_space(P)
    for a in range(P.num_points):
        bs, lines = hyperbolic_line_rows(whole, a)
        for b, row in zip(bs, lines):
            sizes[int(row.sum())] += 1
            pairs_checked.append((a, int(b)))
            if mismatch is None and not np.array_equal(row, P.algebraic_hyperbolic_mask(a, int(b))):
                mismatch = {"a": a, "b": int(b)}

    duality_prop = "double perp equals the singular points of <a, b, Rad(f)>"
    if P.rank >= 2:
        suite.run("geometry.hyperbolic_line_duality", duality_prop, lambda: _passes(mismatch is None, mismatch))
    else:
        # {a,b}^perp is empty in rank 1, so its perp is every point
        suite.skip("geometry.hyperbolic_line_duality", duality_prop, RANK_TWO_NOTE)

    def span_claim():
        rng = np.random.default_rng(seed)
        picks = (rng.choice(len(pairs_checked), size=min(SPAN_SAMPLE, len(pairs_checked)), replace=False)
                 if pairs_checked else [])
        expected = P.radical.dim + 2
        for k in sorted(int(i) for i in picks):
            a, b = pairs_checked[k]
            points = P.hyperbolic_line(a, b, ALGEBRAIC)
            dim = P.span_of(sorted(points)).dim
            if dim != expected:
                return FAIL, {"a": a, "b": b, "span_dim": dim, "expected": expected}, None
        return PASS, None, f"{len(picks)} sampled pairs"

    suite.run("geometry.hyperbolic_line_span",
              "a hyperbolic line spans a subspace of dimension dim Rad(f) + 2", span_claim, seed=seed)

    if P.rank >= 2:
        suite.run("geometry.hyperbolic_line_size",
                  "all hyperbolic lines have two points exactly when p = 0",
                  lambda: _passes((set(sizes) == {2}) == (algebraic.p == 0),
                                  {"sizes": {str(k): v for k, v in sorted(sizes.items())}}))
    else:
        suite.skip("geometry.hyperbolic_line_size",
                   "all hyperbolic lines have two points exactly when p = 0", RANK_TWO_NOTE)

    frames = [("witt", None, find_frame(P))]
    frames += [("random", s, random_frame(P, np.random.default_rng(s))) for s in seeds]

    def frame_checks():
        for kind, s, frame in frames:
            if not frame.is_valid(P):
                return FAIL, {"frame": kind, "seed": s, "pairs": [list(p) for p in frame.pairs]}, "collinearity pattern"
            inside = np.flatnonzero(frame.in_point_perp(P))
            if inside.size:
                return FAIL, {"frame": kind, "seed": s, "point": int(inside[0])}, "frame inside a point perp"
        return PASS, None, None

    suite.run("geometry.frame_not_in_point_perp",
              "frames have the i != j collinearity pattern and lie in no point perp", frame_checks)

    closures = [span_closure(P, frame.points) for _, _, frame in frames]

    def closure_embedding():
        for (kind, s, _), closure in zip(frames, closures):
            if not closure.is_embedded() or closure.dim != 2 * P.rank:
                return FAIL, {"frame": kind, "seed": s, "points": closure.size, "span_dim": closure.dim}, None
        return PASS, None, None

    suite.run("geometry.closure_embedding",
              "frame closures are the singular points of a 2n-dimensional span", closure_embedding)

    suite.run("geometry.whole_space_classification",
              "the whole space classifies as its gap label and agrees with the radical test",
              lambda: _passes(classify(whole_space(P)) == _label_of(algebraic),
                              {"expected": _label_of(algebraic)}))

    if P.rank >= 2:
        maximal = maximal_singular_subspaces(P, subspace_budget)

        def maximal_ranks():
            expected = (P.q ** P.rank - 1) // (P.q - 1)
            bad = [sorted(M) for M in maximal if len(M) != expected]
            return _passes(not bad, {"subspaces": bad[:3]}, f"{len(maximal)} maximal singular subspaces")

        suite.run("geometry.maximal_subspace_rank",
                  "every maximal singular subspace has projective rank n", maximal_ranks)

        def condition_a():
            result = check_condition_A(P, subspace_budget, maximal)
            witness = result.witness.as_dict() if result.witness else None
            note = f"condition holds={result.holds}"
            if result.holds == (algebraic.e == 0):
                return PASS, witness, note
            return FAIL, witness, note

        suite.run("geometry.condition_a", "Condition (A) holds exactly when e = 0", condition_a)
    else:
        suite.skip("geometry.maximal_subspace_rank", "every maximal singular subspace has projective rank n",
                   RANK_TWO_NOTE)
        suite.skip("geometry.condition_a", "Condition (A) holds exactly when e = 0", RANK_TWO_NOTE)

    # forms

    if char2 and P.field.is_finite:
        suite.run("forms.char2_radical_bound", "dim Rad(f) <= 1 for a non-degenerate form over a finite field",
                  lambda: _passes(P.radical.dim <= 1, {"radical_dim": P.radical.dim}))
    else:
        suite.skip("forms.char2_radical_bound", "dim Rad(f) <= 1 for a non-degenerate form over a finite field",
                   "odd characteristic")
    if char2:
        degree = square_class_degree(P.field)
        suite.run("forms.square_class_bound", "p <= [K:K^2] and e/2 + p <= [K:K^2]",
                  lambda: _passes(algebraic.p <= degree and algebraic.e / 2 + algebraic.p <= degree,
                                  {"e": algebraic.e, "p": algebraic.p, "degree": degree}))
    else:
        suite.skip("forms.square_class_bound", "p <= [K:K^2] and e/2 + p <= [K:K^2]", "odd characteristic")

    # chains

    anisotropic = [build_anisotropic_chain(P, s) for s in seeds]
    r_len, r_witness = _agreed_length([c.length for c in anisotropic], seeds)

    def anisotropic_chains():
        if r_witness is not None:
            return FAIL, r_witness, "lengths differ across seeds"
        invalid = next((c.seed for c in anisotropic if not c.is_valid()), None)
        if invalid is not None:
            return FAIL, {"seed": invalid}, "chain is not a step-1 chain of nice subspaces"
        return _passes(r_len == algebraic.r, {"chain_length": r_len, "r": algebraic.r})

    suite.run("chains.anisotropic_length",
              "every maximal nice-subspace chain has length r", anisotropic_chains, seed=seed)

    elliptic: List[EllipticChain] = []
    chain_error = None
    parabolic: List[SubspaceChain] = []
    try:
        if char2:
            elliptic = [enrich_chain(build_elliptic_chain(P, s)) for s in seeds]
            parabolic = [parabolic_chain_from(P, E.top, E.order, E.seed) for E in elliptic]
        else:
            parabolic = [parabolic_chain(P, s) for s in seeds]
    except TheoremViolationError as e:
        chain_error = str(e)
    if char2:
        e_len, e_witness = _agreed_length([E.enrichment.length for E in elliptic], seeds) if elliptic else (None, None)
    else:
        e_len, e_witness = r_len, r_witness
    p_len, p_witness = _agreed_length([c.length for c in parabolic], seeds) if parabolic else (None, None)

    def elliptic_lengths():
        if chain_error is not None and e_len is None:
            return FAIL, None, chain_error
        if e_witness is not None:
            return FAIL, e_witness, "lengths differ across seeds"
        return _passes(e_len == algebraic.e, {"enrichment_length": e_len, "e": algebraic.e})

    suite.run("chains.elliptic_gap", "every maximal enrichment of a maximal elliptic chain has length e",
              elliptic_lengths, seed=seed)

    def parabolic_lengths():
        if chain_error is not None:
            return FAIL, None, chain_error
        if p_witness is not None:
            return FAIL, p_witness, "lengths differ across seeds"
        return _passes(p_len == algebraic.p, {"chain_length": p_len, "p": algebraic.p})

    suite.run("chains.parabolic_gap",
              "every maximal chain above a maximal elliptic subspace has length p", parabolic_lengths, seed=seed)

    if char2:
        def enrichment_structure():
            for E in elliptic:
                profile = chain_radical_profile(E.enrichment)
                expected = [i % 2 for i in range(2 * E.d + 1)]
                if profile != expected or not E.enrichment.is_valid():
                    return FAIL, {"seed": E.seed, "radical_profile": profile}, None
            return PASS, None, None

        suite.run("chains.enrichment_structure",
                  "enrichments have length 2d with restricted radical dimensions 0,1,0,...,0",
                  enrichment_structure, seed=seed)

        def elliptic_members():
            for E in elliptic:
                labels = [classify(S) for S in E.members]
                expected = [HYPERBOLIC] + [ELLIPTIC] * E.d
                if labels != expected or any(b.dim - a.dim != 2 for a, b in zip(E.members, E.members[1:])):
                    return FAIL, {"seed": E.seed, "labels": labels}, None
            return PASS, None, None

        suite.run("chains.elliptic_members",
                  "elliptic chains start at a frame closure and grow by elliptic codimension-2 steps",
                  elliptic_members, seed=seed)
        tops = [E.top for E in elliptic]
    else:
        note = "odd characteristic: elliptic chains are the nice-subspace chains"
        suite.skip("chains.enrichment_structure",
                   "enrichments have length 2d with restricted radical dimensions 0,1,0,...,0", note)
        suite.skip("chains.elliptic_members",
                   "elliptic chains start at a frame closure and grow by elliptic codimension-2 steps", note)
        tops = [c.top for c in anisotropic]

    def union_classification():
        for s, top in zip(seeds, tops):
            label = classify(top)
            if label not in (HYPERBOLIC, ELLIPTIC):
                return FAIL, {"seed": s, "label": label}, None
        return PASS, None, None

    suite.run("chains.union_classification",
              "the union of an elliptic chain is elliptic or spanned by a frame", union_classification, seed=seed)

    def direct_complement():
        for s, top in zip(seeds, tops):
            if not check_direct_complement(P, top):
                return FAIL, {"seed": s, "span_dim": top.dim, "radical_dim": P.radical.dim}, None
        return PASS, None, None

    suite.run("chains.direct_complement",
              "a maximal elliptic-or-hyperbolic subspace spans a direct complement of Rad(f)",
              direct_complement, seed=seed)

    def union_perp_stability():
        chain = anisotropic[0]
        union = chain.top
        first = chain.members[0]
        for a, b in list(opposite_pairs(first))[:SPAN_SAMPLE]:
            outer = inner_hyperbolic_line(union, a, b)
            for member in chain.members:
                if not outer & member.point_set <= inner_hyperbolic_line(member, a, b):
                    return FAIL, {"a": a, "b": b, "member_points": member.size}, None
        return PASS, None, None

    suite.run("chains.union_perp_stability",
              "hyperbolic lines of the union restrict into the member-wise hyperbolic lines",
              union_perp_stability, seed=seeds[0])

    suite.run("chains.finite_chain_limits", "limit members are the unions of their predecessors",
              lambda: (PASS, None, "all chains are finite; holds vacuously"))

    intrinsic = None
    if None not in (r_len, e_len, p_len):
        intrinsic = IntrinsicGapReport(r_len, e_len, p_len, trials, tuple(seeds))

    suite.run("chains.gap_reconciliation", "chain-derived (r, e, p) equals Witt-derived (r, e, p)",
              lambda: _passes(intrinsic is not None and
                              (intrinsic.anisotropic_chain_length, intrinsic.elliptic_gap, intrinsic.parabolic_gap)
                              == (algebraic.r, algebraic.e, algebraic.p),
                              {"intrinsic": intrinsic.as_dict() if intrinsic else None,
                               "algebraic": algebraic.as_dict()}))

    suite.run("chains.parabolic_plus_elliptic", "parabolic chain length plus elliptic gap equals r",
              lambda: _passes(intrinsic is not None and
                              intrinsic.parabolic_gap + intrinsic.elliptic_gap == intrinsic.anisotropic_chain_length,
                              {"intrinsic": intrinsic.as_dict() if intrinsic else None}))

    agreement_prop = "ellipticity by hyperbolic-line agreement matches the line-size classification"
    if P.rank < 2:
        suite.skip("experimental.elliptic_by_agreement", agreement_prop, RANK_TWO_NOTE, experimental=True)
    else:
        candidates: List[GeoSubspace] = [top for top in tops if top.dim > 2 * P.rank]
        if not candidates:
            suite.skip("experimental.elliptic_by_agreement", agreement_prop,
                       "no elliptic-or-hyperbolic subspace beyond a frame closure", experimental=True)
        else:
            def agreement():
                for S in candidates:
                    if is_elliptic_by_agreement(S) != (classify(S) == ELLIPTIC):
                        return FAIL, {"points": S.size}, None
                return PASS, None, None

            suite.run("experimental.elliptic_by_agreement", agreement_prop, agreement, experimental=True)

    report = VerificationReport(
        field=str(P.field),
        dim=P.dim,
        num_points=P.num_points,
        num_lines=len(P.lines),
        algebraic=algebraic,
        intrinsic=intrinsic,
        checks=suite.records,
        hyperbolic_line_sizes=dict(sizes),
        resources=monitor.get_summary(),
    )
    logger.info(f"Verification over {P.field}: passed={report.passed}, "
                f"{len(report.failures())} failed checks")
    return report
