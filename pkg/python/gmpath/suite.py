"""Invariant suite run by ``gmpath verify`` over a fixture corpus.

A corpus directory holds fixture files, recognised by extension, and an
optional ``manifest.json``::

    {
      "fixtures": {"chain.quiver": {"description": "...", "expect": {"radical_dim": 3}}},
      "generated": {"acyclic_quivers": 100, "digraphs": 200, "matrix_systems": 20}
    }

Every fixture expands to a list of :class:`CheckResult` records keyed by a
check id. Fixtures are independent and may be evaluated in a process pool;
results are collected in task order so the scorecard does not depend on
scheduling.
"""

from __future__ import annotations

import json
import logging
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Mapping

from .errors import EmptyCorpusWarning, FormulaNotApplicableError, GmpathError
from .findim import (
    DEFAULT_MAX_DIM,
    FinDimAlgebra,
    KVector,
    direct_sum,
    essential_element_check,
    ideal_closure,
    jacobson_oracle,
    kadd,
    largest_nilpotent_check,
    prime_bruteforce,
    radical,
    semiprime_bruteforce,
    tensor_product,
    truncated_polynomial,
    vn_regular_element,
)
from .gm_ring import (
    GammaSystem,
    block_vn_radicals,
    corner_vn_radical,
    find_gm_unit,
    gm_radical_formula,
    is_graded,
    load_system,
    matrix_system,
    reassemble,
)
from .hopf import (
    CORRUPTIONS,
    HopfAlgebra,
    HopfParams,
    check_hopf_axioms,
    corrupt,
    load_hopf,
    radical_check,
    representation_to_module,
    truncation_evidence,
    validate,
    verify_smash_iso,
)
from .path_algebra import (
    draw_acyclic_quiver,
    equivalence_report,
    is_prime,
    materialize,
    radical_description,
    random_quiver,
    regular_path_count,
)
from .quiver import Quiver, load_quiver, parse_edge_list, regular_pairs
from .report import check_citation, table
from .scalar import parse_scalar

logger = logging.getLogger(__name__)

FIXTURE_SUFFIXES = (".quiver", ".gmring", ".algebra", ".hopf", ".edges", ".rep.json")

CHECKS = (
    "fixture-loads",
    "fixture-expectations",
    "radical-equals-regular-paths",
    "radical-is-largest-nilpotent",
    "no-regular-path-equivalences",
    "prime-iff-single-strong-class",
    "vn-radical-isolated-vertices",
    "ingest-partitions-refine",
    "gm-radical-equals-oracle",
    "gm-radical-graded",
    "gm-projections-reassemble",
    "gm-vn-radical",
    "gm-vn-counterexample",
    "gm-unit-found",
    "hopf-parameters-valid",
    "hopf-dimension",
    "hopf-axioms",
    "smash-isomorphism",
    "hopf-radical",
    "truncation-evidence",
    "corruption-detected",
    "representation-functor",
)


@dataclass(frozen=True)
class SuiteOptions:
    max_dim: int = DEFAULT_MAX_DIM
    samples: int = 200
    seed: int = 0
    budget: int = 64
    degree: int = 6
    evidence_samples: int = 10
    jobs: int = 1
    chain_limit: int = 200


@dataclass(frozen=True)
class CheckResult:
    check: str
    fixture: str
    passed: bool
    detail: str = ""
    # redrawn random instances behind this result
    rejected: int = 0


@dataclass
class SuiteResult:
    results: list[CheckResult] = field(default_factory=list)
    fixtures: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def matrix(self) -> dict[str, dict[str, Any]]:
        out: dict[str, dict[str, Any]] = {}
        for r in self.results:
            row = out.setdefault(r.check, {"pass": 0, "fail": 0, "citation": check_citation(r.check)})
            row["pass" if r.passed else "fail"] += 1
        return {k: out[k] for k in sorted(out, key=_check_order)}

    @property
    def theorem_matrix(self) -> dict[str, dict[str, int]]:
        """Pass/fail counts keyed by the cited result; uncited checks are left out."""
        out: dict[str, dict[str, int]] = {}
        for row in self.matrix.values():
            if row["citation"] is None:
                continue
            cell = out.setdefault(row["citation"], {"pass": 0, "fail": 0})
            cell["pass"] += row["pass"]
            cell["fail"] += row["fail"]
        return out

    @property
    def rejected_draws(self) -> int:
        return sum(r.rejected for r in self.results)

    def scorecard(self) -> list[str]:
        lines = ["# gmpath verification scorecard", ""]
        lines.append(f"- Fixtures: {self.fixtures}")
        lines.append(f"- Checks run: {len(self.results)}")
        if self.rejected_draws:
            lines.append(f"- Random acyclic quivers redrawn for exceeding the path bound: {self.rejected_draws}")
        lines.append(f"- Overall: **{'PASS' if self.passed else 'FAIL'}**")
        lines.append("")
        rows = [
            (check, row["citation"] or "-", row["pass"], row["fail"], "PASS" if row["fail"] == 0 else "FAIL")
            for check, row in self.matrix.items()
        ]
        lines += table(("Check", "Cites", "Passed", "Failed", "Status"), rows)
        bad = self.failures()
        if bad:
            lines += ["", "## Failures", ""]
            lines += table(("Check", "Fixture", "Detail"), ((r.check, r.fixture, r.detail) for r in bad))
        return lines


def _check_order(check: str) -> tuple[int, str]:
    return (CHECKS.index(check) if check in CHECKS else len(CHECKS), check)


# -- corpus discovery ------------------------------------------------------------


def fixture_kind(path: Path) -> str | None:
    for suffix in FIXTURE_SUFFIXES:
        if path.name.endswith(suffix):
            return suffix.lstrip(".")
    return None


def load_manifest(corpus: Path) -> dict[str, Any]:
    p = corpus / "manifest.json"
    if not p.exists():
        return {}
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GmpathError(f"{p}: invalid manifest: {exc}") from None
    if not isinstance(data, dict):
        raise GmpathError(f"{p}: manifest must be a JSON object")
    return data


def discover(corpus: Path) -> list[Path]:
    if not corpus.is_dir():
        raise GmpathError(f"{corpus}: corpus directory not found")
    return sorted(p for p in corpus.rglob("*") if p.is_file() and fixture_kind(p) is not None)


Task = tuple[str, str, dict, SuiteOptions]


def plan(corpus: Path, options: SuiteOptions) -> list[Task]:
    manifest = load_manifest(corpus)
    expectations = manifest.get("fixtures", {})
    tasks: list[Task] = []
    for p in discover(corpus):
        rel = p.relative_to(corpus).as_posix()
        expect = dict(expectations.get(rel, {}).get("expect", {}))
        tasks.append((fixture_kind(p) or "", str(p), expect, options))
    generated = manifest.get("generated", {})
    for kind in ("acyclic_quivers", "digraphs", "matrix_systems"):
        for k in range(int(generated.get(kind, 0))):
            tasks.append((kind, str(k), {}, options))
    return tasks


# -- quiver checks ---------------------------------------------------------------


def _quiver_checks(q: Quiver, label: str, expect: Mapping[str, Any], opts: SuiteOptions) -> list[CheckResult]:
    out: list[CheckResult] = []
    rep = equivalence_report(q)
    detail = "" if rep.consistent else ", ".join(f"{k}={v}" for k, v in rep.verdicts().items())
    quotient = None
    if q.vertices and q.is_acyclic() and (regular_path_count(q) or 0) + len(q.vertices) <= opts.max_dim:
        quotient = materialize(q)
        if quotient.dim > opts.max_dim:
            quotient = None
    agree = rep.consistent
    if quotient is not None:
        brute = semiprime_bruteforce(quotient, opts.max_dim)
        if brute != rep.semiprime:
            agree = False
            detail = f"brute-force semiprime {brute}, formula {rep.semiprime}"
    out.append(CheckResult("no-regular-path-equivalences", label, agree, detail))
    if quotient is not None:
        predicted = radical_description(q).span_in(quotient)
        oracle = jacobson_oracle(quotient)
        count = regular_path_count(q)
        ok = predicted == oracle and predicted.dim == count
        out.append(
            CheckResult(
                "radical-equals-regular-paths",
                label,
                ok,
                f"predicted {predicted.dim}, oracle {oracle.dim}, regular paths {count}",
            )
        )
        nil = largest_nilpotent_check(quotient, predicted)
        out.append(CheckResult("radical-is-largest-nilpotent", label, nil.nilpotent, f"index {nil.index}"))
        prime = prime_bruteforce(quotient, opts.max_dim)
        out.append(
            CheckResult(
                "prime-iff-single-strong-class",
                label,
                prime == is_prime(q),
                f"brute force {prime}, strong classes {len(q.connectivity().strong)}",
            )
        )
        isolated = set(q.isolated_vertices())
        expected = quotient.path_span(lambda p: p.length == 0 and p.source in isolated)
        vn = corner_vn_radical(quotient)
        out.append(
            CheckResult("vn-radical-isolated-vertices", label, vn == expected, f"dim {vn.dim}, isolated {len(isolated)}")
        )
    if expect:
        out.append(_quiver_expectations(q, label, expect))
    return out


def _quiver_expectations(q: Quiver, label: str, expect: Mapping[str, Any]) -> CheckResult:
    rep = q.connectivity()
    count = regular_path_count(q)
    observed: dict[str, Any] = {
        "radical_dim": "infinite" if count is None else count,
        "prime": is_prime(q),
        "semiprime": radical_description(q).is_zero,
        "strong_classes": len(rep.strong),
        "weak_classes": len(rep.weak),
        "unilateral_classes": rep.chain_count,
        "regular_pairs": len(regular_pairs(q)),
        "isolated": len(q.isolated_vertices()),
    }
    return _compare(label, expect, observed)


def _compare(label: str, expect: Mapping[str, Any], observed: Mapping[str, Any]) -> CheckResult:
    unknown = sorted(set(expect) - set(observed))
    wrong = [f"{k}: expected {expect[k]!r}, got {observed[k]!r}" for k in sorted(expect) if k in observed and observed[k] != expect[k]]
    wrong += [f"{k}: not observable for this fixture" for k in unknown]
    return CheckResult("fixture-expectations", label, not wrong, "; ".join(wrong))


def _run_quiver(path: str, expect: dict, opts: SuiteOptions) -> list[CheckResult]:
    return _quiver_checks(load_quiver(path), Path(path).name, expect, opts)


def _run_edges(path: str, expect: dict, opts: SuiteOptions) -> list[CheckResult]:
    label = Path(path).name
    ingest = parse_edge_list(Path(path).read_text(encoding="utf-8"))
    q = ingest.quiver
    rep = q.connectivity()
    strong, weak = [set(c) for c in rep.strong], [set(c) for c in rep.weak]
    refine = all(any(s <= w for w in weak) for s in strong)
    chains = q.maximal_chains(limit=opts.chain_limit)
    if chains is None:
        detail = f"{len(strong)} strong, {rep.chain_count} maximal chains (not enumerated), {len(weak)} weak"
    else:
        uni = [set(c) for c in chains]
        refine = refine and all(any(s <= u for u in uni) for s in strong) and all(any(u <= w for w in weak) for u in uni)
        refine = refine and (set().union(*uni) if uni else set()) == set(q.vertices)
        detail = f"{len(strong)} strong, {len(uni)} unilateral, {len(weak)} weak"
    out = [CheckResult("ingest-partitions-refine", label, refine, detail)]
    eq = equivalence_report(q)
    out.append(CheckResult("no-regular-path-equivalences", label, eq.consistent, ""))
    if expect:
        count = regular_path_count(q)
        observed = {
            "vertices": len(q.vertices),
            "arrows": len(q.arrows),
            "problems": len(ingest.problems),
            "semiprime": eq.semiprime,
            "regular_pairs": len(regular_pairs(q)),
            "radical_dim": "infinite" if count is None else count,
            "strong_classes": len(rep.strong),
        }
        out.append(_compare(label, expect, observed))
    return out


# -- gm checks -------------------------------------------------------------------


def _integer_labels(system: GammaSystem) -> bool:
    return all(i.lstrip("-").isdigit() for i in system.index)


def _random_element(alg: FinDimAlgebra, rng: random.Random) -> KVector:
    v: KVector = {}
    for i in range(alg.dim):
        c = rng.randint(-2, 2)
        if c:
            kadd(v, alg.basis_vector(i), c)
    return v


def _gm_checks(system: GammaSystem, label: str, expect: Mapping[str, Any], opts: SuiteOptions) -> list[CheckResult]:
    out: list[CheckResult] = []
    alg = system.assembled
    if alg.dim > opts.max_dim:
        return [CheckResult("gm-radical-equals-oracle", label, True, f"dimension {alg.dim} over bound, skipped")]
    oracle = radical(alg)
    try:
        ideal = gm_radical_formula(system, "jacobson")
        out.append(
            CheckResult(
                "gm-radical-equals-oracle", label, ideal.space == oracle, f"formula {ideal.dim}, oracle {oracle.dim}"
            )
        )
    except GmpathError as exc:
        out.append(CheckResult("gm-radical-equals-oracle", label, False, str(exc)))
    if _integer_labels(system):
        n = len(system.index)
        out.append(CheckResult("gm-radical-graded", label, is_graded(system, oracle), f"graded by Z/{n}"))
    unit = find_gm_unit(system)
    if unit is not None:
        generated = ideal_closure(alg, alg.span([_random_element(alg, random.Random(opts.seed))]))
        ok = reassemble(system, oracle) == oracle and reassemble(system, generated) == generated
        out.append(
            CheckResult("gm-projections-reassemble", label, ok, f"radical {oracle.dim}, generated ideal {generated.dim}")
        )
    block_sum = sum(sub.dim for sub in block_vn_radicals(system).values())
    try:
        vn = gm_radical_formula(system, "vn", samples=opts.samples, seed=opts.seed, budget=opts.budget)
        outcome: Any = vn.dim
    except FormulaNotApplicableError:
        outcome = "refused"
    want = expect.get("vn")
    ok = want is None or want == outcome
    if "block_vn_dim" in expect:
        ok = ok and expect["block_vn_dim"] == block_sum
    out.append(CheckResult("gm-vn-radical", label, ok, f"formula {outcome}, block sum {block_sum}"))
    if "essential" in expect:
        x = alg.parse_element(str(expect["essential"]))
        escape = essential_element_check(alg, x, samples=opts.samples, seed=opts.seed)
        regular = vn_regular_element(alg, x) is not None
        detail = f"in every sampled ideal: {escape is None}, regular: {regular}"
        out.append(CheckResult("gm-vn-counterexample", label, escape is None and not regular, detail))
    acts = unit is not None and all(
        alg.mul(unit.total(), alg.basis_vector(i)) == alg.basis_vector(i) == alg.mul(alg.basis_vector(i), unit.total())
        for i in range(alg.dim)
    )
    want_unit = expect.get("unit")
    if want_unit is None:
        ok = unit is None or acts
    else:
        ok = acts if want_unit else unit is None
    out.append(CheckResult("gm-unit-found", label, ok, "found" if unit is not None else "none"))
    observable = {k: v for k, v in expect.items() if k not in ("vn", "block_vn_dim", "unit", "essential")}
    if observable:
        observed = {
            "dim": alg.dim,
            "radical_dim": oracle.dim,
            "prime": prime_bruteforce(alg, opts.max_dim),
            "semiprime": semiprime_bruteforce(alg, opts.max_dim),
            "vn_radical_dim": corner_vn_radical(alg).dim,
        }
        out.append(_compare(label, observable, observed))
    return out


def _run_gm(path: str, expect: dict, opts: SuiteOptions) -> list[CheckResult]:
    return _gm_checks(load_system(path), Path(path).name, expect, opts)


# -- Hopf checks -----------------------------------------------------------------


def _corruption_detected(H: HopfAlgebra, kind: str) -> tuple[bool, str] | None:
    try:
        bad = corrupt(H, kind)
    except ValueError:
        return None
    except GmpathError as exc:
        return True, f"construction rejected: {exc}"
    if isinstance(bad, HopfParams):
        report = validate(bad)
        return not report.ok, report.summary()
    axioms = check_hopf_axioms(bad)
    return not axioms.passed, ", ".join(axioms.failures()) or "all axioms hold"


def _hopf_checks(params: HopfParams, label: str, expect: Mapping[str, Any], opts: SuiteOptions) -> list[CheckResult]:
    out: list[CheckResult] = []
    report = validate(params)
    want_valid = expect.get("valid", True)
    out.append(CheckResult("hopf-parameters-valid", label, report.ok == want_valid, report.summary()))
    if not report.ok:
        return out
    H = HopfAlgebra(params)
    ok = H.dim == params.dimension and expect.get("dim", H.dim) == H.dim
    out.append(CheckResult("hopf-dimension", label, ok, f"dim {H.dim}"))
    if H.dim > opts.max_dim:
        out.append(CheckResult("hopf-axioms", label, True, f"dimension {H.dim} over bound, skipped"))
        return out
    axioms = check_hopf_axioms(H)
    out.append(CheckResult("hopf-axioms", label, axioms.passed, ", ".join(axioms.failures())))
    if params.is_plain:
        out.append(CheckResult("smash-isomorphism", label, verify_smash_iso(H), ""))
        rc = radical_check(H, opts.max_dim)
        ok = bool(rc.equal and rc.baer_equal) if rc.verified else True
        if "radical_dim" in expect:
            ok = ok and rc.predicted.dim == expect["radical_dim"]
        oracle = rc.oracle.dim if rc.oracle is not None else "n/a"
        out.append(CheckResult("hopf-radical", label, ok, f"predicted {rc.predicted.dim}, oracle {oracle}"))
        if params.t:
            ev = truncation_evidence(params, degree=opts.degree, samples=opts.evidence_samples, seed=opts.seed)
            found = sum(r.witness is not None for r in ev.records)
            out.append(
                CheckResult("truncation-evidence", label, ev.ok, f"{found}/{len(ev.records)} witnessed, degree {ev.degree}")
            )
    if expect.get("corruptions", True):
        for kind in CORRUPTIONS:
            verdict = _corruption_detected(H, kind)
            if verdict is not None:
                out.append(CheckResult("corruption-detected", f"{label}:{kind}", *verdict))
    return out


def _run_hopf(path: str, expect: dict, opts: SuiteOptions) -> list[CheckResult]:
    return _hopf_checks(load_hopf(path), Path(path).name, expect, opts)


def _matrix_entries(rows: Any) -> list[list[Any]]:
    return [[parse_scalar(str(x)) for x in row] for row in rows]


def _run_rep(path: str, expect: dict, opts: SuiteOptions) -> list[CheckResult]:
    """A ``.rep.json`` file: ``{"hopf": file, "group": {label: matrix}, "arrows": [matrix], "expect": ...}``."""
    p = Path(path)
    label = p.name
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GmpathError(f"{p}: invalid JSON: {exc}") from None
    H = HopfAlgebra(load_hopf(p.parent / data["hopf"]))
    G = H.params.group
    try:
        images = {G.parse_element(g): _matrix_entries(m) for g, m in data.get("group", {}).items()}
    except KeyError as exc:
        raise GmpathError(f"{p}: {exc}") from None
    arrows = [_matrix_entries(m) for m in data.get("arrows", [])]
    check = representation_to_module(H, images, arrows)
    want = expect.get("result", data.get("expect", "module"))
    got = "module" if check.ok else "violation"
    return [CheckResult("representation-functor", label, got == want, "; ".join(check.violations) or got)]


# -- generated batches -----------------------------------------------------------


def _generated_rng(opts: SuiteOptions, kind: str, k: int) -> random.Random:
    return random.Random(f"{opts.seed}:{kind}:{k}")


def _coefficient_ring(rng: random.Random, blocks: int) -> FinDimAlgebra | None:
    roll = rng.random()
    if roll < 0.3:
        return truncated_polynomial(2)
    if roll < 0.45:
        return direct_sum(FinDimAlgebra.field(), FinDimAlgebra.field())
    if roll < 0.55 and blocks <= 2:
        return tensor_product(truncated_polynomial(2), truncated_polynomial(2))
    return None


GENERATED_GM_CHECKS = ("gm-radical-equals-oracle", "gm-radical-graded", "gm-projections-reassemble")


def _run_generated(kind: str, k: int, opts: SuiteOptions) -> list[CheckResult]:
    rng = _generated_rng(opts, kind, k)
    if kind == "acyclic_quivers":
        q, rejected = draw_acyclic_quiver(rng, max_paths=opts.max_dim)
        results = _quiver_checks(q, f"random-acyclic-{k}", {}, opts)
        return [replace(results[0], rejected=rejected)] + results[1:]
    if kind == "digraphs":
        return _quiver_checks(random_quiver(rng), f"random-digraph-{k}", {}, opts)
    sizes = [rng.randint(1, 2) for _ in range(rng.randint(1, 3))]
    while sum(sizes) > 3:
        sizes.pop()
    pattern = rng.choice(("full", "upper", "diagonal"))
    system = matrix_system(sizes, pattern, _coefficient_ring(rng, sum(sizes)))
    return [r for r in _gm_checks(system, f"gm-block-{k}", {}, opts) if r.check in GENERATED_GM_CHECKS]


RUNNERS: dict[str, Callable[[str, dict, SuiteOptions], list[CheckResult]]] = {
    "quiver": _run_quiver,
    "edges": _run_edges,
    "gmring": _run_gm,
    "algebra": _run_gm,
    "hopf": _run_hopf,
    "rep.json": _run_rep,
}


def _run_task(task: Task) -> list[CheckResult]:
    kind, target, expect, opts = task
    if kind not in RUNNERS:
        return _run_generated(kind, int(target), opts)
    label = Path(target).name
    try:
        results = RUNNERS[kind](target, expect, opts)
    except (GmpathError, OSError, KeyError) as exc:
        return [CheckResult("fixture-loads", label, False, str(exc))]
    return [CheckResult("fixture-loads", label, True)] + results


def run_suite(corpus: str | Path, options: SuiteOptions | None = None) -> SuiteResult:
    opts = options or SuiteOptions()
    tasks = plan(Path(corpus), opts)
    fixtures = sum(1 for t in tasks if t[0] in RUNNERS)
    if not tasks:
        warnings.warn(f"{corpus}: corpus contains no fixtures; the suite passes vacuously", EmptyCorpusWarning)
        return SuiteResult([], 0)
    logger.info("verify: %d fixtures, %d generated instances", fixtures, len(tasks) - fixtures)
    if opts.jobs > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            batches = list(pool.map(_run_task, tasks))
    else:
        batches = [_run_task(t) for t in tasks]
    results = [r for batch in batches for r in batch]
    out = SuiteResult(results, fixtures)
    logger.info("verify: %d checks, %d failed", len(results), len(out.failures()))
    return out
