"""
Batch front door.

    table     d m q RANKS              formula table (r, omega_r, l, c, j, H, H', f)
    construct d m r p e                extremal subspace with verified dimension and zero count
    search    OBJ d m r p [e]          e_r / u_r, --mode exhaustive|randomized
    verify    SUITE[,SUITE...]         property sweeps, 'all' for every suite
    ghw       d m p e RANKS            generalized Hamming weights of PRM_q(d,m),
                                       --cross-check also runs exhaustive e_r

RANKS is either a single rank or an inclusive range a..b.
Exit codes: 0 ok, 1 failure or theorem mismatch, 2 usage error, 3 budget refusal.
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

import pandas as pd
from pydantic import ValidationError

from src.prmweights.combinatorics.formulas import formula_table
from src.prmweights.config.settings import DEFAULT_POINT_BUDGET, DEFAULT_VISIT_BUDGET, DEFAULT_WORKERS, LOG_LEVEL
from src.prmweights.constructions.builders import build_lower_bound_subspace, prm_generator_matrix
from src.prmweights.gf.field import field_new
from src.prmweights.graph.graph_builder import run_verification
from src.prmweights.search.exhaustive import exhaustive_e_r, exhaustive_u_r_rational
from src.prmweights.search.ghw import GHWRow, ghw_table
from src.prmweights.search.randomized import randomized_search
from src.prmweights.state.state import RunConfig, RunReport, SearchReport, VerificationState
from src.prmweights.utils.errors import (
    BudgetExceededError,
    ConstructionError,
    DomainError,
    FieldError,
    FormulaMismatchError,
    PRMError,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

TABLE_COLUMNS = ["d", "m", "q", "r", "omega", "l", "c", "j", "H", "H_prime", "f"]
GHW_COLUMNS = ["r", "d_r", "length_minus_f", "via_e_r", "match", "theorem_range"]
SEARCH_COLUMNS = ["d", "m", "q", "r", "mode", "best", "expected_f_or_Hprime", "match"]

BANNER = "!" * 72


def parse_ranks(text: str) -> Tuple[int, int]:
    """'4' -> (4, 4); '1..6' -> (1, 6); '3..2' is the empty range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        r = int(text)
        return r, r
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad rank range '{text}', expected N or A..B")


def parse_limit(text: str) -> Tuple[str, int]:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"bad limit '{text}', expected KEY=INT")
    try:
        return key.strip(), int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"limit {key} needs an integer, got '{value}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prmweights", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["csv", "json"], default="json")
    common.add_argument("--output", dest="output_path", default=None, help="write here instead of stdout")
    common.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    common.add_argument("--visit-budget", type=int, default=DEFAULT_VISIT_BUDGET)
    common.add_argument("--seed", type=int, default=0)

    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", parents=[common])
    p.add_argument("d", type=int)
    p.add_argument("m", type=int)
    p.add_argument("q", type=int)
    p.add_argument("ranks", type=parse_ranks)

    p = sub.add_parser("construct", parents=[common])
    for name in ("d", "m", "r", "p"):
        p.add_argument(name, type=int)
    p.add_argument("e", type=int, nargs="?", default=1)

    p = sub.add_parser("search", parents=[common])
    p.add_argument("objective", choices=["e_r", "u_r"])
    for name in ("d", "m", "r", "p"):
        p.add_argument(name, type=int)
    p.add_argument("e", type=int, nargs="?", default=1)
    p.add_argument("--mode", choices=["exhaustive", "randomized"], default="exhaustive")
    p.add_argument("--iterations", type=int, default=2000)
    p.add_argument("--chains", type=int, default=1)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", help="suite name, comma separated list, or 'all'")
    p.add_argument("--limit", dest="limits", type=parse_limit, action="append", default=[],
                   metavar="KEY=INT", help="e.g. d_max=8, m_max=5, instances=200")

    p = sub.add_parser("ghw", parents=[common])
    for name in ("d", "m", "p"):
        p.add_argument(name, type=int)
    p.add_argument("e", type=int)
    p.add_argument("ranks", type=parse_ranks)
    p.add_argument("--cross-check", action="store_true",
                   help="compare d_r with pi_m(q) - e_r from exhaustive search")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    if "ranks" in fields:
        fields["r_min"], fields["r_max"] = fields.pop("ranks")
    if "limits" in fields:
        fields["limits"] = dict(fields["limits"])
    return RunConfig(**fields)


# ------------------------------------------------------------------
# Output
# ------------------------------------------------------------------
def emit(config: RunConfig, text: str) -> None:
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        logger.info("wrote %s", config.output_path)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def emit_rows(config: RunConfig, rows: List[dict], columns: List[str], exit_code: int = EXIT_OK) -> None:
    if config.output_format == "csv":
        frame = pd.DataFrame(rows, columns=columns).convert_dtypes()
        emit(config, frame.to_csv(index=False))
    else:
        records = [{c: row.get(c) for c in columns} for row in rows]
        emit(config, RunReport(config=config, exit_code=exit_code, result=records).model_dump_json(indent=2))


def emit_report(config: RunConfig, result, exit_code: int = EXIT_OK) -> None:
    emit(config, RunReport(config=config, exit_code=exit_code, result=result).model_dump_json(indent=2))


def theorem_verdict(report: SearchReport) -> int:
    """Mismatch inside a proven range fails the run; outside it is a finding, not a bug."""
    if report.match is not False:
        return EXIT_OK
    if report.theorem_range:
        print(BANNER, file=sys.stderr)
        print(f"THEOREM MISMATCH: {report.objective} d={report.d} m={report.m} q={report.q} r={report.r} "
              f"best={report.best_value} expected={report.expected}", file=sys.stderr)
        print(BANNER, file=sys.stderr)
        return EXIT_FAIL
    logger.warning("conjecture-relevant finding: %s d=%d m=%d q=%d r=%d best=%d expected=%s",
                   report.objective, report.d, report.m, report.q, report.r,
                   report.best_value, report.expected)
    return EXIT_OK


# ------------------------------------------------------------------
# Verbs
# ------------------------------------------------------------------
def run_table(config: RunConfig) -> int:
    rows = formula_table(config.d, config.m, config.q, config.ranks())
    emit_rows(config, [row.to_dict() for row in rows], TABLE_COLUMNS)
    return EXIT_OK


def run_construct(config: RunConfig) -> int:
    field = field_new(config.p, config.e)
    report = build_lower_bound_subspace(config.d, config.m, config.r, field, point_budget=DEFAULT_POINT_BUDGET)
    code = EXIT_OK if report.ok else EXIT_FAIL
    if not report.ok:
        logger.error("construction check failed: dim %d/%d, count %d vs claim %d",
                     report.verified_dim, report.claimed_dim, report.verified_count, report.claimed_lower_bound)
    emit_report(config, report.to_json(), code)
    return code


def run_search(config: RunConfig) -> int:
    field = field_new(config.p, config.e)
    objective = "e_r" if config.objective == "e_r" else "u_r_rational"
    if config.mode == "randomized":
        report = randomized_search(objective, config.d, config.m, field, config.r, seed=config.seed,
                                   iterations=config.iterations, chains=config.chains, workers=config.workers)
    elif objective == "e_r":
        report = exhaustive_e_r(config.d, config.m, field, config.r, config.workers, config.visit_budget)
    else:
        if config.m != 2:
            raise DomainError("exhaustive u_r is only available for m=2; use randomized mode")
        report = exhaustive_u_r_rational(config.d, field, config.r, config.workers, config.visit_budget)
    code = theorem_verdict(report)
    if config.output_format == "csv":
        emit_rows(config, [report.summary_row()], SEARCH_COLUMNS, code)
    else:
        emit_report(config, report.model_dump(), code)
    return code


def run_verify(config: RunConfig) -> int:
    state = VerificationState(
        suites=[s.strip() for s in config.suite.split(",") if s.strip()],
        limits=config.limits, seed=config.seed, workers=config.workers,
    )
    final = run_verification(state)
    print(final.report, file=sys.stderr)
    code = EXIT_OK if final.passed else EXIT_FAIL
    if config.output_format == "csv":
        rows = [{"suite": r.name, "passed": r.passed, "checked": r.checked, "failures": " | ".join(r.failures)}
                for r in final.results]
        emit_rows(config, rows, ["suite", "passed", "checked", "failures"], code)
    else:
        emit_report(config, [r.model_dump() for r in final.results], code)
    return code


def ghw_verdict(rows: List[GHWRow]) -> int:
    """Disagreement with exhaustive e_r, or with f_r inside a proven range, fails the run."""
    code = EXIT_OK
    for row in rows:
        if row.match is not False:
            continue
        if (row.via_e_r is not None and row.via_e_r != row.d_r) or row.theorem_range:
            print(BANNER, file=sys.stderr)
            print(f"GHW MISMATCH: r={row.r} d_r={row.d_r} length_minus_f={row.length_minus_f} "
                  f"via_e_r={row.via_e_r}", file=sys.stderr)
            print(BANNER, file=sys.stderr)
            code = EXIT_FAIL
        else:
            logger.warning("conjecture-relevant finding: ghw r=%d d_r=%d length_minus_f=%s",
                           row.r, row.d_r, row.length_minus_f)
    return code


def run_ghw(config: RunConfig) -> int:
    field = field_new(config.p, config.e)
    code = prm_generator_matrix(config.d, config.m, field)
    ranks = config.ranks()
    e_r_values = None
    if config.cross_check:
        if field.q < config.d + 1:
            logger.warning("q=%d < d+1=%d: evaluation is not injective, skipping the e_r cross-check",
                           field.q, config.d + 1)
        else:
            e_r_values = {
                r: exhaustive_e_r(config.d, config.m, field, r, config.workers, config.visit_budget).best_value
                for r in ranks if 1 <= r <= code.dimension
            }
    rows = ghw_table(code, ranks, e_r_values=e_r_values, visit_budget=config.visit_budget, workers=config.workers)
    exit_code = ghw_verdict(rows)
    emit_rows(config, [row.to_dict() for row in rows], GHW_COLUMNS, exit_code)
    return exit_code


VERBS = {
    "table": run_table,
    "construct": run_construct,
    "search": run_search,
    "verify": run_verify,
    "ghw": run_ghw,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        config = to_config(args)
    except ValidationError as exc:
        print(f"❌ invalid arguments:\n{exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return VERBS[config.verb](config)
    except BudgetExceededError as exc:
        print(f"❌ budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, FieldError) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormulaMismatchError, ConstructionError) as exc:
        print(BANNER, file=sys.stderr)
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        print(BANNER, file=sys.stderr)
        return EXIT_FAIL
    except PRMError as exc:
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
