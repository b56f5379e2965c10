"""
selfrecip command line

Subcommands:
    field    the field, its modulus and (small q) its elements
    census   closed-form t, s, z, pr and p(n, j), optionally against brute force
    verify   brute force against closed forms for n = 1..nmax
    recip    self-reciprocal structure of one polynomial
    oracle   constructive maximal factor against divisor enumeration
    index2   count | solve | list of index-2 systems over GF(2)

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 work budget exceeded.
"""

import argparse
import logging
import random
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from src.adapters.census.enumerator import CensusEnumerator
from src.adapters.census.verifier import CensusVerifier
from src.adapters.formatting import JsonFormatter, formatter_for
from src.adapters.recip.strategies import strategy_for
from src.app.config import config
from src.domain.counting import count_s, count_t, p_count, pr_closed, pr_conv, z_closed
from src.domain.errors import AlgebraError, BudgetExceeded, OracleMismatch
from src.domain.field import arithmetic, parse_field
from src.domain.index2 import (
    IndexTwoSolution,
    KVector,
    coincides_with_special_case,
    index2_census,
    periodicity_report,
    scan_index2,
    solve_index2,
)
from src.domain.models import (
    CensusStrategy,
    CommandReport,
    Index2SolutionRecord,
    OutputFormat,
    RunConfig,
)
from src.domain.polynomial import PolyStyle, enumerate_monic, format_polynomial, monic_at, monic_count, parse_polynomial
from src.domain.reciprocal import check_oracle, recip_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# fields up to this size list their elements
FIELD_LISTING_LIMIT = 64


# ==============
# === Parser ===
# ==============

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=config.output_format.value,
                        help="Output format on standard output")
    common.add_argument("--out", default=None, help="Also write the JSON report to this path")
    common.add_argument("--budget", type=int, default=config.work_budget,
                        help="Maximum polynomials per brute-force degree")
    common.add_argument("--seed", type=int, default=config.seed, help="Seed for sampled checks")
    common.add_argument("--workers", type=int, default=config.workers, help="Worker processes")
    common.add_argument("--strategy", choices=[s.value for s in CensusStrategy],
                        default=config.census_strategy.value,
                        help="Census strategy for the maximal self-reciprocal factor")

    parser = argparse.ArgumentParser(
        prog="selfrecip",
        description="Self-reciprocal factors of polynomials over finite fields",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    field = commands.add_parser("field", parents=[common], help="Describe a finite field")
    field.add_argument("--field", required=True, help='Field descriptor, e.g. "2", "9", "3^2;modulus=1,0,1"')

    census = commands.add_parser("census", parents=[common], help="Closed-form census for one degree")
    census.add_argument("--field", required=True)
    census.add_argument("--n", type=int, required=True)
    census.add_argument("--brute", action="store_true", help="Compare against full enumeration")

    verify = commands.add_parser("verify", parents=[common], help="Verify closed forms by enumeration")
    verify.add_argument("--field", required=True)
    verify.add_argument("--nmax", type=int, required=True)

    recip = commands.add_parser("recip", parents=[common], help="Self-reciprocal report for a polynomial")
    recip.add_argument("--field", required=True)
    recip.add_argument("--poly", required=True, help='"[a0,...,an]", "x^2+1" or a GF(2) bitstring')

    oracle = commands.add_parser("oracle", parents=[common], help="Check the maximal factor against the oracle")
    oracle.add_argument("--field", required=True)
    oracle.add_argument("--n", type=int, required=True, help="Largest degree checked")
    oracle.add_argument("--samples", type=int, default=None, help="Random samples instead of exhaustive")

    index2 = commands.add_parser("index2", help="Index-2 systems over GF(2)")
    actions = index2.add_subparsers(dest="action", required=True)
    count = actions.add_parser("count", parents=[common], help="Count solvable systems of order m")
    count.add_argument("--m", type=int, required=True)
    count.add_argument("--mmax", type=int, default=None)
    solve = actions.add_parser("solve", parents=[common], help="Solve the system of one vector")
    solve.add_argument("--k", required=True, help="Bitstring k_0...k_m")
    listing = actions.add_parser("list", parents=[common], help="List solvable vectors of order m")
    listing.add_argument("--m", type=int, required=True)

    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    command = args.command if args.command != "index2" else f"index2 {args.action}"
    return RunConfig(
        command=command,
        field=getattr(args, "field", None),
        n=getattr(args, "n", None),
        n_max=getattr(args, "nmax", None),
        m=getattr(args, "m", None),
        m_max=getattr(args, "mmax", None),
        k=getattr(args, "k", None),
        poly=getattr(args, "poly", None),
        brute=getattr(args, "brute", False),
        samples=getattr(args, "samples", None),
        format=args.format,
        out=args.out,
        budget=args.budget,
        seed=args.seed,
        workers=args.workers,
        strategy=args.strategy,
    )


# ================
# === Commands ===
# ================

def cmd_field(run: RunConfig) -> CommandReport:
    spec = parse_field(run.field)
    ar = arithmetic(spec)
    rows = []
    if spec.q <= FIELD_LISTING_LIMIT:
        rows = [
            {"code": a, "digits": list(ar.digits(a)), "inverse": ar.inv(a) if a else None}
            for a in range(spec.q)
        ]
    return CommandReport(
        config=run,
        title=f"{spec}",
        columns=["code", "digits", "inverse"],
        rows=rows,
        summary={"descriptor": spec.descriptor, "p": spec.p, "k": spec.k, "q": spec.q,
                 "modulus": list(spec.modulus)},
    )


def cmd_census(run: RunConfig) -> CommandReport:
    spec = parse_field(run.field)
    q, n = spec.q, run.n
    closed = {j: p_count(q, n, j) for j in range(n + 1)}
    summary = {
        "t": count_t(q, n),
        "s": count_s(q, n),
        "z": z_closed(q, n),
        "pr_conv": pr_conv(q, n),
        "pr_closed": pr_closed(q, n),
    }
    columns = ["q", "n", "j", "count"]
    rows = [{"q": q, "n": n, "j": j, "count": c} for j, c in closed.items()]
    passed = None

    if run.brute:
        enumerator = CensusEnumerator(strategy_for(run.strategy), budget=run.budget, workers=run.workers)
        histogram = enumerator.histogram(spec, n)
        columns += ["brute", "match"]
        for row in rows:
            row["brute"] = histogram.get(row["j"], 0)
            row["match"] = row["brute"] == row["count"]
        pr_brute = sum(c for j, c in histogram.items() if j >= 2)
        summary.update({
            "z_brute": histogram.get(0, 0),
            "pr_brute": pr_brute,
            "z_match": histogram.get(0, 0) == summary["z"],
            "pr_match": pr_brute == summary["pr_conv"] == summary["pr_closed"],
        })
        passed = all(r["match"] for r in rows) and summary["z_match"] and summary["pr_match"]

    return CommandReport(
        config=run,
        title=f"Census over {spec}, n={n}",
        columns=columns,
        rows=rows,
        summary=summary,
        passed=passed,
    )


def cmd_verify(run: RunConfig) -> CommandReport:
    spec = parse_field(run.field)
    enumerator = CensusEnumerator(strategy_for(run.strategy), budget=run.budget, workers=run.workers)
    report = CensusVerifier(enumerator).verify(spec, run.n_max)
    rows = [
        {
            "n": r.n, "t": r.t, "z_closed": r.z_closed, "z_brute": r.z_brute,
            "pr_closed": r.pr_closed, "pr_brute": r.pr_brute,
            "p_ok": r.p_ok, "sum_ok": r.sum_ok, "lemma2_ok": r.lemma2_ok, "passed": r.passed,
        }
        for r in report.rows
    ]
    return CommandReport(
        config=run,
        title=f"Verification over {spec}, n <= {run.n_max}",
        columns=["n", "t", "z_closed", "z_brute", "pr_closed", "pr_brute", "p_ok", "sum_ok", "lemma2_ok", "passed"],
        rows=rows,
        summary={
            "identities": {c.name: c.passed for c in report.identities},
            "counterexample": report.counterexample,
        },
        # timing stays out so identical runs give identical reports
        details={"verification": report.model_dump(mode="json", exclude={"elapsed_seconds"})},
        passed=report.passed,
    )


def cmd_recip(run: RunConfig) -> CommandReport:
    spec = parse_field(run.field)
    f = parse_polynomial(spec, run.poly)
    report = recip_report(f)
    return CommandReport(
        config=run,
        title=f"Self-reciprocal structure of {report.input} over {spec}",
        columns=["factor", "multiplicity", "tag", "partner", "kept"],
        rows=[entry.model_dump(mode="json") for entry in report.class_breakdown],
        summary={
            "input": report.input,
            "human": format_polynomial(f, PolyStyle.HUMAN),
            "reciprocal": report.reciprocal,
            "self_reciprocal": report.self_reciprocal,
            "factorization": " ".join(f"{g}^{e}" for g, e in report.factorization),
            "max_factor": report.max_factor,
            "max_factor_degree": report.max_factor_degree,
            "cofactor": report.cofactor,
        },
    )


def cmd_oracle(run: RunConfig) -> CommandReport:
    """Exhaustive over degrees 1..n, or run.samples seeded draws."""
    spec = parse_field(run.field)
    if run.samples is None:
        total = sum(monic_count(spec, d, True) for d in range(1, run.n + 1))
        if total > run.budget:
            raise BudgetExceeded(f"{total} oracle checks over {spec} exceed the work budget {run.budget}")
        candidates = (f for d in range(1, run.n + 1) for f in enumerate_monic(spec, d, True))
    else:
        rng = random.Random(run.seed)

        def draw():
            for _ in range(run.samples):
                d = rng.randint(1, run.n)
                yield monic_at(spec, d, rng.randrange(monic_count(spec, d, True)), True)

        candidates = draw()

    checked = 0
    violations = []
    for f in candidates:
        checked += 1
        try:
            check_oracle(f)
        except OracleMismatch as e:
            violations.append({"polynomial": e.polynomial, "error": str(e)})
    logger.info(f"Oracle over {spec}: {checked} checked, {len(violations)} violations")
    return CommandReport(
        config=run,
        title=f"Oracle equivalence over {spec}, n <= {run.n}",
        columns=["polynomial", "error"],
        rows=violations,
        summary={"checked": checked, "violations": len(violations),
                 "mode": "exhaustive" if run.samples is None else "sampled"},
        passed=not violations,
    )


def cmd_index2_count(run: RunConfig) -> CommandReport:
    m_max = run.m_max if run.m_max is not None else run.m
    rows = index2_census(run.m, m_max, run.workers)
    return CommandReport(
        config=run,
        title=f"Index-2 systems, m = {run.m}..{m_max}",
        columns=["m", "count", "expected", "matches", "unique", "condition_equivalent", "periodicity_ok"],
        rows=[r.model_dump() for r in rows],
        passed=all(
            r.matches and r.unique and r.condition_equivalent and r.periodicity_ok is not False
            for r in rows
        ),
    )


def _solution_record(k: KVector, sol: IndexTwoSolution) -> Index2SolutionRecord:
    periodicity = periodicity_report(k, sol)
    return Index2SolutionRecord(
        k=k.to_bitstring(),
        prefix=list(sol.prefix),
        period=periodicity.period,
        purely_periodic={"s1": periodicity.s1_purely_periodic, "s2": periodicity.s2_purely_periodic},
        special_case=coincides_with_special_case(sol),
    )


def cmd_index2_solve(run: RunConfig) -> CommandReport:
    k = KVector.from_bitstring(run.k)
    solutions = solve_index2(k)
    summary = {"k": k.to_bitstring(), "m": k.m, "solvable": bool(solutions), "solutions": len(solutions)}
    if not solutions:
        summary["result"] = "unsolvable"
    details = {}
    if solutions:
        report = periodicity_report(k, solutions[0])
        details = report.model_dump()
    return CommandReport(
        config=run,
        title=f"Index-2 system of k={k}",
        columns=["k", "prefix", "period", "purely_periodic", "special_case"],
        rows=[_solution_record(k, sol).model_dump() for sol in solutions],
        summary=summary,
        details=details,
    )


def cmd_index2_list(run: RunConfig) -> CommandReport:
    scanned = scan_index2(run.m, run.workers)
    return CommandReport(
        config=run,
        title=f"Solvable index-2 vectors, m={run.m}",
        columns=["k", "prefix", "period", "purely_periodic", "special_case"],
        rows=[_solution_record(k, sols[0]).model_dump() for k, sols in scanned],
        summary={"m": run.m, "count": len(scanned)},
    )


COMMANDS = {
    "field": cmd_field,
    "census": cmd_census,
    "verify": cmd_verify,
    "recip": cmd_recip,
    "oracle": cmd_oracle,
    "index2 count": cmd_index2_count,
    "index2 solve": cmd_index2_solve,
    "index2 list": cmd_index2_list,
}


# ============
# === Main ===
# ============

def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(
        level=config.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        run = run_config(args)
        report = COMMANDS[run.command](run)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except OracleMismatch as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (AlgebraError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(formatter_for(run.format).format(report))
    if run.out:
        Path(run.out).write_text(JsonFormatter().format(report), encoding="utf-8")
        logger.info(f"Wrote JSON report to {run.out}")

    if report.passed is False:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
