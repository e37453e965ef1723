"""Command line front end: ``gmpath <command> ...``.

Commands print one report on stdout (markdown or JSON) and log status lines
on stderr. Exit codes: 0 when every check passes, 1 when a closed formula
disagrees with its oracle, 2 for bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Callable, Sequence

from .errors import (
    DimensionBoundError,
    FormulaNotApplicableError,
    GmpathError,
    InfiniteDimensionError,
    OracleInconsistencyError,
)
from .findim import jacobson_oracle, largest_nilpotent_check, radical
from .gm_ring import GammaSystem, corner_vn_radical, gm_radical_formula, load_system
from .hopf import HopfAlgebra, load_hopf, radical_check
from .path_algebra import (
    PathAlgebra,
    equivalence_report,
    materialize,
    radical_description,
    regular_path_count,
    regular_paths,
    vn_radical_description,
)
from .quiver import Quiver, cycle_facts, load_quiver, parse_edge_list, regular_pairs
from .report import Report, digest, radical_citation, summarize_basis, table, write_text
from .suite import SuiteOptions, run_suite

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
DEFAULT_MAX_ORACLE_DIM = 64
BASIS_SUMMARY_THRESHOLD = 200
DEFAULT_SAMPLES = 200
DEFAULT_DIVISOR_BUDGET = 64

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2

RADICAL_CHOICES = ("baer", "levitzki", "nil", "jacobson", "vn")


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    max_oracle_dim: int = DEFAULT_MAX_ORACLE_DIM
    basis_threshold: int = BASIS_SUMMARY_THRESHOLD
    samples: int = DEFAULT_SAMPLES
    divisor_budget: int = DEFAULT_DIVISOR_BUDGET
    jobs: int = 1


class InputError(GmpathError):
    """The command cannot run on this input."""


# -- connectivity ----------------------------------------------------------------


def _partition(parts: Sequence[Sequence[str]]) -> list[list[str]]:
    return [list(p) for p in parts]


def connectivity_results(q: Quiver, threshold: int = BASIS_SUMMARY_THRESHOLD) -> dict[str, Any]:
    rep = q.connectivity()
    facts = cycle_facts(q)
    strong = [set(c) for c in rep.strong]
    weak = [set(c) for c in rep.weak]
    consistency = {
        "strong_partitions_vertices": sum(len(s) for s in strong) == len(q.vertices),
        "weak_partitions_vertices": sum(len(w) for w in weak) == len(q.vertices),
    }
    chains = q.maximal_chains(limit=threshold)
    if chains is None:
        unilateral: Any = {"count": rep.chain_count}
    else:
        uni = [set(c) for c in chains]
        unilateral = _partition(chains)
        consistency["strong_refines_unilateral"] = all(any(s <= u for u in uni) for s in strong)
        consistency["unilateral_refines_weak"] = all(any(u <= w for w in weak) for u in uni)
    return {
        "vertices": len(q.vertices),
        "arrows": len(q.arrows),
        "strong": _partition(rep.strong),
        "weak": _partition(rep.weak),
        "unilateral": unilateral,
        "regular_pairs": [list(p) for p in regular_pairs(q)],
        "has_cycle": facts.has_cycle,
        "same_cycle": [list(p) for p in facts.same_cycle],
        "consistency": consistency,
    }


def _connectivity_lines(res: dict[str, Any]) -> list[str]:
    def fmt(parts: Any) -> str:
        if isinstance(parts, dict):
            return f"{parts['count']} maximal chains, not listed"
        return " | ".join("{" + ", ".join(p) + "}" for p in parts) or "none"

    pairs = res["regular_pairs"]
    lines = [
        f"- Vertices: {res['vertices']}, arrows: {res['arrows']}",
        f"- Strong components: {fmt(res['strong'])}",
        f"- Unilateral components: {fmt(res['unilateral'])}",
        f"- Weak components: {fmt(res['weak'])}",
        f"- Regular pairs: {pairs['count'] if isinstance(pairs, dict) else len(pairs)}",
        f"- Has cycle: {res['has_cycle']}",
        "",
    ]
    lines += table(("Consistency check", "Holds"), sorted(res["consistency"].items()))
    return lines


def cmd_connectivity(args: argparse.Namespace, config: RunConfig) -> Report:
    q = load_quiver(args.file)
    report = _new_report("connectivity", [args.file], config)
    report.results = connectivity_results(q, config.basis_threshold)
    report.lines = _connectivity_lines(report.results)
    if not all(report.results["consistency"].values()):
        report.fail()
    return report


# -- radical ---------------------------------------------------------------------


def _quiver_radical(q: Quiver, kind: str, oracle: bool, config: RunConfig) -> dict[str, Any]:
    out: dict[str, Any] = {"object": "path algebra kD", "kind": kind}
    if kind == "vn":
        isolated = vn_radical_description(q)
        out["formula"] = "span of isolated vertices"
        out["dimension"] = len(isolated)
        out["basis"] = summarize_basis([f"e({v})" for v in isolated], config.basis_threshold)
        if oracle:
            quotient = _bounded_quotient(q, config)
            observed = corner_vn_radical(quotient)
            expected = quotient.path_span(lambda p: p.length == 0 and p.source in set(isolated))
            out["oracle"] = {"dimension": observed.dim, "equal": observed == expected}
        return out
    count = regular_path_count(q)
    out["formula"] = "span of regular paths"
    out["regular_pairs"] = len(regular_pairs(q))
    out["dimension"] = "infinite" if count is None else count
    if count is not None:
        if count > config.basis_threshold:
            out["basis"] = {"dimension": count}
        else:
            pa = PathAlgebra(q)
            out["basis"] = [pa.format_path(p) for p in regular_paths(q)]
    if oracle:
        quotient = _bounded_quotient(q, config)
        predicted = radical_description(q, kind).span_in(quotient)
        found = jacobson_oracle(quotient)
        nil = largest_nilpotent_check(quotient, predicted)
        out["oracle"] = {
            "algebra_dimension": quotient.dim,
            "dimension": found.dim,
            "equal": predicted == found and nil.nilpotent,
            "nilpotency_index": nil.index,
        }
    return out


def _bounded_quotient(q: Quiver, config: RunConfig):
    if not q.is_acyclic():
        raise InfiniteDimensionError("kD is infinite-dimensional for a quiver with a cycle; no oracle available")
    count = regular_path_count(q) or 0
    if count + len(q.vertices) > config.max_oracle_dim:
        raise DimensionBoundError(count + len(q.vertices), config.max_oracle_dim)
    return materialize(q)


def _gm_radical(system: GammaSystem, kind: str, oracle: bool, config: RunConfig) -> dict[str, Any]:
    alg = system.assembled
    out: dict[str, Any] = {"object": f"gm algebra {system.name}", "kind": kind, "algebra_dimension": alg.dim}
    if kind == "nil":
        raise InputError("the nil radical has no block formula for gm rings; use baer, levitzki or jacobson")
    ideal = gm_radical_formula(
        system, kind, samples=config.samples, seed=config.seed, budget=config.divisor_budget
    )
    out["formula"] = "sum of block radicals"
    out["dimension"] = ideal.dim
    blocks = {f"{s},{t}": summarize_basis(lits, config.basis_threshold) for (s, t), lits in ideal.literals().items()}
    out["basis"] = blocks
    if oracle:
        if alg.dim > config.max_oracle_dim:
            raise DimensionBoundError(alg.dim, config.max_oracle_dim)
        found = corner_vn_radical(alg) if kind == "vn" else radical(alg)
        out["oracle"] = {"dimension": found.dim, "equal": found == ideal.space}
    return out


def _hopf_radical(H: HopfAlgebra, kind: str, oracle: bool, config: RunConfig) -> dict[str, Any]:
    if kind == "vn":
        raise FormulaNotApplicableError(f"{H.name}: no closed formula for the von Neumann radical of H")
    if oracle and H.dim > config.max_oracle_dim:
        raise DimensionBoundError(H.dim, config.max_oracle_dim)
    rc = radical_check(H, config.max_oracle_dim if oracle else -1)
    out: dict[str, Any] = {
        "object": f"Hopf algebra {H.name}",
        "kind": kind,
        "algebra_dimension": H.dim,
        "formula": "ideal generated by the skew generators",
        "dimension": rc.predicted.dim,
        "basis": summarize_basis(H.algebra.literals(rc.predicted), config.basis_threshold),
    }
    if rc.verified:
        assert rc.oracle is not None
        out["oracle"] = {"dimension": rc.oracle.dim, "equal": bool(rc.equal and rc.baer_equal)}
    return out


def cmd_radical(args: argparse.Namespace, config: RunConfig) -> Report:
    path = Path(args.file)
    report = _new_report("radical", [args.file], config)
    suffix = path.suffix
    family = {".quiver": "quiver", ".gmring": "gm", ".algebra": "gm", ".hopf": "hopf"}.get(suffix)
    if suffix == ".quiver":
        res = _quiver_radical(load_quiver(path), args.kind, args.oracle, config)
    elif suffix in (".gmring", ".algebra"):
        res = _gm_radical(load_system(path), args.kind, args.oracle, config)
    elif suffix == ".hopf":
        res = _hopf_radical(HopfAlgebra(load_hopf(path)), args.kind, args.oracle, config)
    else:
        raise InputError(f"{path}: unknown file type {suffix!r}; expected .quiver, .gmring, .algebra or .hopf")
    res["citation"] = radical_citation(family, args.kind) if family else None
    report.results = res
    lines = [
        f"- Object: {res['object']}",
        f"- Radical: {res['kind']} ({res['formula']}; {res['citation']})",
        f"- Dimension: {res['dimension']}",
    ]
    basis = res.get("basis")
    if isinstance(basis, list):
        lines.append("- Basis: " + (", ".join(f"`{b}`" for b in basis) or "none"))
    elif isinstance(basis, dict) and "dimension" not in basis:
        for blk, lits in basis.items():
            shown = ", ".join(f"`{b}`" for b in lits) if isinstance(lits, list) else f"dimension {lits['dimension']}"
            lines.append(f"- Block ({blk}): {shown}")
    if "oracle" in res:
        verdict = "agrees" if res["oracle"]["equal"] else "DISAGREES"
        lines.append(f"- Oracle: dimension {res['oracle']['dimension']}, {verdict}")
        if not res["oracle"]["equal"]:
            report.fail()
    report.lines = lines
    return report


# -- net-ingest ------------------------------------------------------------------


def ingest_one(path: str, threshold: int) -> dict[str, Any]:
    """Build the information-flow quiver of one edge list and summarise it."""
    ingest = parse_edge_list(Path(path).read_text(encoding="utf-8"))
    q = ingest.quiver
    res = connectivity_results(q, threshold)
    eq = equivalence_report(q)
    count = regular_path_count(q)
    radical_summary: dict[str, Any] = {
        "regular_pairs": len(res["regular_pairs"]),
        "dimension": "infinite" if count is None else count,
    }
    if count is not None and count <= threshold:
        pa = PathAlgebra(q)
        radical_summary["basis"] = [pa.format_path(p) for p in regular_paths(q)]
    if len(res["regular_pairs"]) > threshold:
        res["regular_pairs"] = {"count": len(res["regular_pairs"])}
    res["problems"] = [{"line": n, "message": msg} for n, msg in ingest.problems]
    res["equivalences"] = eq.verdicts()
    res["semiprime"] = eq.semiprime
    res["equivalences_consistent"] = eq.consistent
    res["radical"] = radical_summary
    return res


def _ingest_task(task: tuple[str, int]) -> dict[str, Any]:
    return ingest_one(*task)


def cmd_net_ingest(args: argparse.Namespace, config: RunConfig) -> Report:
    files = list(args.files)
    report = _new_report("net-ingest", files, config)
    tasks = [(f, config.basis_threshold) for f in files]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outputs = list(pool.map(_ingest_task, tasks))
    else:
        outputs = [_ingest_task(t) for t in tasks]
    report.results = {"networks": dict(zip(files, outputs))}
    lines: list[str] = []
    for f, res in zip(files, outputs):
        lines += [f"## {f}", ""]
        lines += _connectivity_lines(res)
        lines += [
            "",
            f"- Semiprime (no regular path): {res['semiprime']}",
            f"- Radical dimension: {res['radical']['dimension']}",
            f"- Skipped lines: {len(res['problems'])}",
        ]
        for prob in res["problems"]:
            lines.append(f"  - line {prob['line']}: {prob['message']}")
        lines.append("")
        if not (res["equivalences_consistent"] and all(res["consistency"].values())):
            report.fail()
    report.lines = lines
    return report


# -- verify ----------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> Report:
    corpus = Path(args.corpus)
    report = _new_report("verify", [args.corpus], config)
    options = SuiteOptions(
        max_dim=config.max_oracle_dim,
        samples=config.samples,
        seed=config.seed,
        budget=config.divisor_budget,
        jobs=config.jobs,
        chain_limit=config.basis_threshold,
    )
    suite = run_suite(corpus, options)
    report.results = {
        "fixtures": suite.fixtures,
        "checks": len(suite.results),
        "matrix": suite.matrix,
        "theorem_matrix": suite.theorem_matrix,
        "rejected_acyclic_draws": suite.rejected_draws,
        "failures": [asdict(r) for r in suite.failures()],
    }
    report.lines = suite.scorecard()[2:]
    if not suite.passed:
        report.fail()
    if args.report_dir:
        write_text(Path(args.report_dir) / "scorecard.md", "\n".join(suite.scorecard()) + "\n")
    return report


# -- plumbing --------------------------------------------------------------------


def _new_report(command: str, paths: Sequence[str], config: RunConfig) -> Report:
    inputs = [digest(p) for p in paths]
    return Report(command, inputs, config.seed, asdict(config))


def _parse_args(argv: Sequence[str] | None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for every sampled check")
    common.add_argument(
        "--max-oracle-dim", type=int, default=DEFAULT_MAX_ORACLE_DIM, help="Largest algebra handed to an oracle"
    )
    common.add_argument("--format", choices=["text", "structured"], default="text", help="Report format on stdout")
    common.add_argument("--report-dir", default=None, help="Also write <command>.json and <command>.md here")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="Samples for regularity checks")
    common.add_argument(
        "--divisor-budget", type=int, default=DEFAULT_DIVISOR_BUDGET, help="Random trials per gm divisor search"
    )
    common.add_argument("--jobs", type=int, default=1, help="Worker processes for independent inputs")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="gmpath", description="Radicals of path algebras, gm rings and pointed Hopf algebras")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("connectivity", parents=[common], help="Strong, unilateral and weak components of a quiver")
    p.add_argument("file")
    p = sub.add_parser("radical", parents=[common], help="Closed-form radical, optionally checked by an oracle")
    p.add_argument("file")
    p.add_argument("kind", choices=RADICAL_CHOICES)
    p.add_argument("--oracle", action="store_true", help="Cross-check with the brute-force oracle")
    p = sub.add_parser("net-ingest", parents=[common], help="Quivers of information-flow edge lists")
    p.add_argument("files", nargs="+")
    p = sub.add_parser("verify", parents=[common], help="Run the invariant suite over a corpus directory")
    p.add_argument("corpus")
    return parser.parse_args(argv)


COMMANDS: dict[str, Callable[[argparse.Namespace, RunConfig], Report]] = {
    "connectivity": cmd_connectivity,
    "radical": cmd_radical,
    "net-ingest": cmd_net_ingest,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = _parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    config = RunConfig(
        seed=args.seed,
        max_oracle_dim=args.max_oracle_dim,
        samples=args.samples,
        divisor_budget=args.divisor_budget,
        jobs=max(1, args.jobs),
    )
    try:
        report = COMMANDS[args.command](args, config)
    except OracleInconsistencyError as exc:
        logger.error("oracle post-condition failed: %s", exc)
        return EXIT_MISMATCH
    except (GmpathError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_INPUT
    sys.stdout.write(report.render(args.format))
    if args.report_dir:
        json_path, md_path = report.write(Path(args.report_dir))
        logger.info("wrote %s and %s", json_path, md_path)
    logger.info("%s: %s", args.command, report.status)
    return EXIT_OK if report.status == "pass" else EXIT_MISMATCH


if __name__ == "__main__":
    raise SystemExit(main())
