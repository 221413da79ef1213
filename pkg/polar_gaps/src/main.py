"""
Command-line entry point.

    polar-gaps classify --form forms/q_4_2.form
    polar-gaps verify --form catalog:Q-(5,2) --output structured
    polar-gaps catalog --trials 50

Command output goes to stdout (JSON lines in structured mode); logs go to stderr.
"""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Optional

from config.settings import ConfigurationError, RunConfig, build_run_config, load_settings

from .algebra.exceptions import (
    AnisotropicFormError,
    BudgetExceededError,
    DegenerateFormError,
    InconclusiveError,
    InfiniteFieldError,
    ParseError,
    PolarGapsError,
    TheoremViolationError,
)
from .algebra.form_io import load_form
from .algebra.forms import QuadraticForm
from .algebra.witt import ELLIPTIC, HYPERBOLIC, PARABOLIC, GapReport, SearchLimits, gaps
from .chains.catalog import CATALOG_PREFIX, get_catalog_form, run_catalog
from .chains.chains import intrinsic_gaps
from .chains.verification import VerificationReport, verify_theorems
from .geometry.condition_a import maximal_singular_subspaces
from .geometry.polar_space import PolarSpace, build_polar_space, export_geometry
from .geometry.subspaces import hyperbolic_line_sizes, whole_space
from .utils.monitoring import render_table, summary_table

logger = logging.getLogger('polar_gaps')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_INCONCLUSIVE = 4
EXIT_BUDGET = 5

CATALOG_COLUMNS = ["name", "field", "dim", "points", "n", "e", "p", "r", "label", "status"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polar-gaps",
        description="Rank and anisotropic, elliptic and parabolic gaps of orthogonal polar spaces",
    )
    parser.add_argument("command", choices=["classify", "geometry", "gaps", "verify", "catalog"])
    parser.add_argument("--form", dest="form_path", help="form file, or catalog:<name>")
    parser.add_argument("--trials", type=int, help="seeded chain constructions per gap")
    parser.add_argument("--seed", type=int, help="master seed (unsigned 64-bit)")
    parser.add_argument("--budget", type=int, help="maximum number of projective points to enumerate")
    parser.add_argument("--output", choices=["human", "structured"])
    parser.add_argument("--export", dest="export_path", help="write the geometry dump to this file")
    parser.add_argument("--timings", action="store_true", help="record elapsed time and peak memory per check")
    parser.add_argument("--env", help="configuration environment (development, test)")
    return parser


def configure_logging(level: str, log_file: Optional[str] = None) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def emit(records: Iterable[Dict[str, object]]) -> None:
    """One JSON object per line, keys sorted."""
    for record in records:
        print(json.dumps(record, sort_keys=True))


def read_form(config: RunConfig) -> QuadraticForm:
    if config.form_path.startswith(CATALOG_PREFIX):
        try:
            return get_catalog_form(config.form_path)
        except KeyError as e:
            raise ParseError(str(e.args[0]))
    return load_form(config.form_path, config.settings.degree_cap)


def describe(report: GapReport) -> str:
    if report.label in (HYPERBOLIC, ELLIPTIC, PARABOLIC):
        return f"{report.label}, n={report.n}, e={report.e}, p={report.p}"
    return f"(e,p)=({report.e},{report.p})-orthogonal, n={report.n}"


def cmd_classify(config: RunConfig) -> int:
    phi = read_form(config)
    s = config.settings
    report = gaps(phi, SearchLimits(s.point_budget, s.search_degree, s.search_budget))
    if config.output == "structured":
        emit([dict(record="classify", field=str(phi.field), dim=phi.dim, **report.as_dict())])
    else:
        print(f"field: {phi.field}")
        print(f"dim: {phi.dim}")
        print(describe(report))
        print(f"anisotropic gap: r={report.r}")
    return EXIT_OK


def _build(config: RunConfig) -> PolarSpace:
    return build_polar_space(read_form(config), config.point_budget)


def cmd_geometry(config: RunConfig) -> int:
    P = _build(config)
    sizes = hyperbolic_line_sizes(whole_space(P))
    maximal = maximal_singular_subspaces(P, config.settings.subspace_budget)
    expected = (P.q ** P.rank - 1) // (P.q - 1)
    summary = {
        "record": "geometry",
        "field": str(P.field),
        "dim": P.dim,
        "points": P.num_points,
        "lines": len(P.lines),
        "rank": P.rank,
        "hyperbolic_line_sizes": {str(k): v for k, v in sorted(sizes.items())},
        "maximal_singular_subspaces": len(maximal),
        "maximal_rank_n": all(len(M) == expected for M in maximal),
    }
    dump = export_geometry(P)
    if config.export_path:
        Path(config.export_path).write_text(dump)
        logger.info(f"Geometry written to {config.export_path}")
    if config.output == "structured":
        emit([summary])
        return EXIT_OK
    print(f"field: {P.field}")
    print(f"dim: {P.dim}")
    print(f"points: {P.num_points}, lines: {len(P.lines)}, rank: {P.rank}")
    spectrum = ", ".join(f"{k} points x {v}" for k, v in sorted(sizes.items())) or "none"
    print(f"hyperbolic lines: {spectrum}")
    print(f"maximal singular subspaces: {len(maximal)}")
    if not config.export_path:
        print(dump, end="")
    return EXIT_OK


def cmd_gaps(config: RunConfig) -> int:
    P = _build(config)
    algebraic = P.gap_report
    intrinsic = intrinsic_gaps(P, config.trials, config.seed)
    agree = (intrinsic.anisotropic_chain_length, intrinsic.elliptic_gap, intrinsic.parabolic_gap) == \
        (algebraic.r, algebraic.e, algebraic.p)
    if config.output == "structured":
        emit([{
            "record": "gaps",
            "field": str(P.field),
            "dim": P.dim,
            "algebraic": algebraic.as_dict(),
            "intrinsic": intrinsic.as_dict(),
            "seed": config.seed,
            "agree": agree,
        }])
    else:
        print(f"algebraic: {describe(algebraic)}, r={algebraic.r}")
        print(f"intrinsic: r={intrinsic.anisotropic_chain_length}, e={intrinsic.elliptic_gap}, "
              f"p={intrinsic.parabolic_gap} over {intrinsic.trials} trials")
        print("reconciled" if agree else "MISMATCH")
    return EXIT_OK if agree else EXIT_FAILED


def render_verification(report: VerificationReport) -> None:
    a = report.algebraic
    print(f"{report.field}, dim {report.dim}: {report.num_points} points, {report.num_lines} lines")
    print(f"algebraic (n,e,p,r) = ({a.n},{a.e},{a.p},{a.r})")
    if report.intrinsic is not None:
        i = report.intrinsic
        print(f"intrinsic (r,e,p) = ({i.anisotropic_chain_length},{i.elliptic_gap},{i.parabolic_gap})")
    for check in report.checks:
        flag = " [experimental]" if check.experimental else ""
        line = f"  {check.status:4}  {check.check_id}{flag}"
        if check.note:
            line += f"  ({check.note})"
        print(line)
        if check.status == "fail" and check.witness:
            print(f"        witness: {json.dumps(check.witness, sort_keys=True)}")
    print("PASSED" if report.passed else "FAILED")


def cmd_verify(config: RunConfig) -> int:
    P = _build(config)
    s = config.settings
    report = verify_theorems(P, s.trials, s.seed, s.timings, s.subspace_budget)
    if config.output == "structured":
        emit(report.as_records())
    else:
        render_verification(report)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_catalog(config: RunConfig) -> int:
    s = config.settings
    results = asyncio.run(run_catalog(s.trials, s.seed, s.catalog_equivalents, s.point_budget,
                                      s.subspace_budget, s.catalog_workers))
    if config.output == "structured":
        emit(r.as_record() for r in results)
    else:
        print(render_table(summary_table([r.as_row() for r in results], CATALOG_COLUMNS)))
        for r in results:
            if not r.passed:
                print(f"{r.name}: {'; '.join(r.failures)}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


COMMANDS = {
    "classify": cmd_classify,
    "geometry": cmd_geometry,
    "gaps": cmd_gaps,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


def exit_code_for(error: Exception) -> int:
    if isinstance(error, (DegenerateFormError, AnisotropicFormError)):
        return EXIT_DEGENERATE
    if isinstance(error, InconclusiveError):
        return EXIT_INCONCLUSIVE
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, TheoremViolationError):
        return EXIT_FAILED
    return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(args.env)
        config = build_run_config(settings, args.command, args.form_path, args.trials, args.seed,
                                  args.budget, args.output, args.timings, args.export_path)
    except ConfigurationError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(config.settings.log_level, config.settings.log_file)
    try:
        return COMMANDS[config.command](config)
    except InfiniteFieldError as e:
        logger.error(f"{config.command} needs a finite field: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PolarGapsError as e:
        code = exit_code_for(e)
        logger.error(f"{config.command} failed ({type(e).__name__}): {e}")
        print(f"error: {e}", file=sys.stderr)
        if code == EXIT_INCONCLUSIVE:
            print("the form could be neither split nor certified anisotropic within the search limits; "
                  "raise search_degree or search_budget in the configuration", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
