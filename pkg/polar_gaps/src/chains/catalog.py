"""
Built-in Catalog

Standard orthogonal forms over GF(2), GF(3) and GF(4) in dimension at most 6,
and an async batch runner that verifies each of them plus seeded random
equivalents. Per-item failures are collected; the batch never stops early.
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from ..algebra.exceptions import PolarGapsError
from ..algebra.field import FieldSpec
from ..algebra.forms import QuadraticForm, random_equivalent
from ..geometry.polar_space import build_polar_space
from .chains import intrinsic_gaps, trial_seeds
from .verification import verify_theorems

logger = logging.getLogger(__name__)

CATALOG_PREFIX = "catalog:"

GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
GF4 = FieldSpec.gf_extension(2, 2, (1, 1, 1))


def _hyperbolic_terms(pairs: int, offset: int = 0) -> Dict:
    return {(offset + 2 * i, offset + 2 * i + 1): 1 for i in range(pairs)}


def _form(F: FieldSpec, d: int, terms: Dict) -> Callable[[], QuadraticForm]:
    return lambda: QuadraticForm.from_terms(F, d, terms)


def _gf4_norm_block(i: int) -> Dict:
    """x_i^2 + x_i x_{i+1} + w x_{i+1}^2, anisotropic since Tr(w) = 1."""
    return {(i, i): 1, (i, i + 1): 1, (i + 1, i + 1): GF4.generator}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    build: Callable[[], QuadraticForm] = field(compare=False, repr=False)

    def form(self) -> QuadraticForm:
        return self.build()


CATALOG: List[CatalogEntry] = [
    CatalogEntry("Q+(1,2)", "x0x1", _form(GF2, 2, _hyperbolic_terms(1))),
    CatalogEntry("Q(2,2)", "x0^2+x1x2", _form(GF2, 3, {(0, 0): 1, (1, 2): 1})),
    CatalogEntry("Q-(3,2)", "x0^2+x0x1+x1^2+x2x3", _form(GF2, 4, {(0, 0): 1, (0, 1): 1, (1, 1): 1, (2, 3): 1})),
    CatalogEntry("Q+(3,2)", "x0x1+x2x3", _form(GF2, 4, _hyperbolic_terms(2))),
    CatalogEntry("Q(4,2)", "x0^2+x1x2+x3x4", _form(GF2, 5, {(0, 0): 1, (1, 2): 1, (3, 4): 1})),
    CatalogEntry("Q-(5,2)", "x0x1+x2x3+x4^2+x4x5+x5^2",
                 _form(GF2, 6, {**_hyperbolic_terms(2), (4, 4): 1, (4, 5): 1, (5, 5): 1})),
    CatalogEntry("Q+(5,2)", "x0x1+x2x3+x4x5", _form(GF2, 6, _hyperbolic_terms(3))),
    CatalogEntry("Q(2,3)", "x0x1+x2^2", _form(GF3, 3, {(0, 1): 1, (2, 2): 1})),
    CatalogEntry("Q-(3,3)", "x0x1+x2^2+x3^2", _form(GF3, 4, {(0, 1): 1, (2, 2): 1, (3, 3): 1})),
    CatalogEntry("Q+(3,3)", "x0x1+x2x3", _form(GF3, 4, _hyperbolic_terms(2))),
    CatalogEntry("Q(4,3)", "x0^2+x1x2+x3x4", _form(GF3, 5, {(0, 0): 1, (1, 2): 1, (3, 4): 1})),
    CatalogEntry("Q-(5,3)", "x0x1+x2x3+x4^2+x5^2",
                 _form(GF3, 6, {**_hyperbolic_terms(2), (4, 4): 1, (5, 5): 1})),
    CatalogEntry("Q+(5,3)", "x0x1+x2x3+x4x5", _form(GF3, 6, _hyperbolic_terms(3))),
    CatalogEntry("Q(2,4)", "x0^2+x1x2", _form(GF4, 3, {(0, 0): 1, (1, 2): 1})),
    CatalogEntry("Q-(3,4)", "x0x1+x2^2+x2x3+wx3^2", _form(GF4, 4, {(0, 1): 1, **_gf4_norm_block(2)})),
    CatalogEntry("Q+(3,4)", "x0x1+x2x3", _form(GF4, 4, _hyperbolic_terms(2))),
    CatalogEntry("Q(4,4)", "x0^2+x1x2+x3x4", _form(GF4, 5, {(0, 0): 1, (1, 2): 1, (3, 4): 1})),
    CatalogEntry("Q-(5,4)", "x0x1+x2x3+x4^2+x4x5+wx5^2",
                 _form(GF4, 6, {**_hyperbolic_terms(2), **_gf4_norm_block(4)})),
    CatalogEntry("Q+(5,4)", "x0x1+x2x3+x4x5", _form(GF4, 6, _hyperbolic_terms(3))),
]

_BY_NAME = {entry.name: entry for entry in CATALOG}


def catalog_names() -> List[str]:
    return [entry.name for entry in CATALOG]


def get_catalog_form(name: str) -> QuadraticForm:
    """
    Form of a catalog entry, with or without the `catalog:` prefix.

    Raises:
        KeyError: Unknown entry name
    """
    if name.startswith(CATALOG_PREFIX):
        name = name[len(CATALOG_PREFIX):]
    if name not in _BY_NAME:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")
    return _BY_NAME[name].form()


@dataclass
class CatalogItemResult:
    name: str
    field: str
    dim: int
    points: Optional[int] = None
    gaps: Optional[Dict[str, object]] = None
    failures: List[str] = field(default_factory=list)
    equivalents: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_row(self) -> Dict[str, object]:
        gaps = self.gaps or {}
        return {
            "name": self.name,
            "field": self.field,
            "dim": self.dim,
            "points": self.points,
            "n": gaps.get("n"),
            "e": gaps.get("e"),
            "p": gaps.get("p"),
            "r": gaps.get("r"),
            "label": gaps.get("label"),
            "status": "pass" if self.passed else "fail",
        }

    def as_record(self) -> Dict[str, object]:
        return {
            "record": "catalog_item",
            "name": self.name,
            "field": self.field,
            "dim": self.dim,
            "points": self.points,
            "gaps": self.gaps,
            "equivalents": self.equivalents,
            "passed": self.passed,
            "failures": self.failures,
        }


def verify_entry(entry: CatalogEntry, trials: int, seed: int, equivalents: int,
                 point_budget: int, subspace_budget: int) -> CatalogItemResult:
    """Full verification of the entry, then gap checks on seeded random equivalents."""
    phi = entry.form()
    result = CatalogItemResult(entry.name, str(phi.field), phi.dim)
    try:
        P = build_polar_space(phi, point_budget)
        result.points = P.num_points
        result.gaps = P.gap_report.as_dict()
        report = verify_theorems(P, trials, seed, subspace_budget=subspace_budget)
        result.failures += [c.check_id for c in report.failures()]
        if not report.reconciled:
            result.failures.append("chains.gap_reconciliation")
        expected = (P.gap_report.r, P.gap_report.e, P.gap_report.p)
        for k, eq_seed in enumerate(trial_seeds(seed + 1, equivalents) if equivalents else []):
            Q = build_polar_space(random_equivalent(phi, eq_seed), point_budget)
            if Q.num_points != P.num_points or Q.gap_report != P.gap_report:
                result.failures.append(f"equivalent[{k}].algebraic_gaps")
                continue
            intrinsic = intrinsic_gaps(Q, trials, seed)
            if (intrinsic.anisotropic_chain_length, intrinsic.elliptic_gap, intrinsic.parabolic_gap) != expected:
                result.failures.append(f"equivalent[{k}].intrinsic_gaps")
            result.equivalents += 1
    except PolarGapsError as e:
        logger.error(f"Catalog entry {entry.name} failed: {e}")
        result.failures.append(f"{type(e).__name__}: {e}")
    logger.info(f"Catalog entry {entry.name}: {'pass' if result.passed else 'fail'}")
    return result


async def run_catalog(trials: int, seed: int, equivalents: int, point_budget: int, subspace_budget: int,
                      workers: int = 1, names: Optional[Sequence[str]] = None) -> List[CatalogItemResult]:
    """
    Verify catalog entries concurrently; results keep catalog order.

    Args:
        names: Restrict the run to these entries (all when None)
    """
    entries = CATALOG if names is None else [_BY_NAME[n] for n in names]
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        tasks = [
            loop.run_in_executor(executor, verify_entry, entry, trials, seed, equivalents,
                                 point_budget, subspace_budget)
            for entry in entries
        ]
        results = await asyncio.gather(*tasks)
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning(f"Catalog items failed: {failed}")
    return list(results)
