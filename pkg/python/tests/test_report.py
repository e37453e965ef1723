"""Report rendering and the verification suite.

Run:
    pytest python/tests/test_report.py -q
"""

import json
import shutil

from gmpath.report import Report, check_citation, citations, digest, summarize_basis, table
from gmpath.suite import CHECKS, CheckResult, SuiteOptions, SuiteResult, fixture_kind, plan, run_suite


def test_report_renders_both_formats(tmp_path):
    src = tmp_path / "in.quiver"
    src.write_text("vertex 1\n", encoding="utf-8")
    report = Report("radical", [digest(src)], 7, {"seed": 7}, {"dimension": 0})
    doc = json.loads(report.render("structured"))
    assert doc == {
        "command": "radical",
        "config": {"seed": 7},
        "inputs": [digest(src)],
        "results": {"dimension": 0},
        "seed": 7,
        "status": "pass",
    }
    report.fail()
    assert report.status == "fail"
    md = report.render("text")
    assert md.startswith("# gmpath radical\n")
    assert "- Status: **fail**" in md
    json_path, md_path = report.write(tmp_path / "out")
    assert json_path.read_text(encoding="utf-8") == report.to_json()
    assert md_path.name == "radical.md"


def test_directory_digest_is_order_independent(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for root, order in ((a, ("x", "y")), (b, ("y", "x"))):
        root.mkdir()
        for name in order:
            (root / name).write_text(name, encoding="utf-8")
    assert digest(a)["sha256"] == digest(b)["sha256"]


def test_table_and_basis_summary():
    assert table(("a", "b"), [(1, 2)]) == ["| a | b |", "|---|---|", "| 1 | 2 |"]
    assert summarize_basis(["x", "y"], 2) == ["x", "y"]
    assert summarize_basis(["x", "y", "z"], 2) == {"dimension": 3}


def test_scorecard_lists_failures():
    suite = SuiteResult(
        [
            CheckResult("fixture-loads", "a.quiver", True),
            CheckResult("hopf-axioms", "b.hopf", False, "antipode"),
        ],
        fixtures=2,
    )
    assert not suite.passed
    assert suite.matrix == {
        "fixture-loads": {"pass": 1, "fail": 0, "citation": None},
        "hopf-axioms": {"pass": 0, "fail": 1, "citation": check_citation("hopf-axioms")},
    }
    card = suite.scorecard()
    assert "- Overall: **FAIL**" in card
    assert "| hopf-axioms | b.hopf | antipode |" in card


def test_theorem_matrix_merges_checks_with_one_source():
    suite = SuiteResult(
        [
            CheckResult("fixture-loads", "a.quiver", True),
            CheckResult("radical-equals-regular-paths", "a.quiver", True, rejected=4),
            CheckResult("radical-is-largest-nilpotent", "a.quiver", False),
            CheckResult("prime-iff-single-strong-class", "a.quiver", True, rejected=1),
        ],
        fixtures=1,
    )
    source = check_citation("radical-equals-regular-paths")
    assert source == check_citation("radical-is-largest-nilpotent") != check_citation("prime-iff-single-strong-class")
    assert suite.theorem_matrix[source] == {"pass": 1, "fail": 1}
    assert all(cell["pass"] + cell["fail"] for cell in suite.theorem_matrix.values())
    assert suite.rejected_draws == 5
    assert "- Random acyclic quivers redrawn for exceeding the path bound: 5" in suite.scorecard()


def test_every_check_has_a_citation_entry():
    known = citations()["checks"]
    assert set(CHECKS) == set(known)
    assert [c for c in CHECKS if known[c] is None] == ["fixture-loads", "fixture-expectations"]


def test_fixture_kinds_and_plan(corpus):
    assert fixture_kind(corpus / "taft4_block.rep.json") == "rep.json"
    assert fixture_kind(corpus / "manifest.json") is None
    tasks = plan(corpus, SuiteOptions())
    kinds = {t[0] for t in tasks}
    assert {"quiver", "gmring", "algebra", "hopf", "edges", "rep.json", "acyclic_quivers"} <= kinds
    chain = next(t for t in tasks if t[1].endswith("chain.quiver"))
    assert chain[2]["radical_dim"] == 3


def test_suite_on_quivers_and_generated_instances(corpus, tmp_path):
    target = tmp_path / "corpus"
    target.mkdir()
    for name in ("diamond.quiver", "cycle_tail.quiver", "loop.quiver", "kronecker.quiver"):
        shutil.copy(corpus / name, target / name)
    (target / "manifest.json").write_text(
        json.dumps({"generated": {"acyclic_quivers": 5, "digraphs": 5, "matrix_systems": 3}}), encoding="utf-8"
    )
    serial = run_suite(target, SuiteOptions(seed=3))
    assert serial.passed, serial.failures()
    assert serial.fixtures == 4
    assert set(serial.matrix) <= set(CHECKS)
    assert serial.matrix["gm-radical-graded"]["pass"] == 3
    assert serial.matrix["gm-projections-reassemble"]["pass"] == 3
    parallel = run_suite(target, SuiteOptions(seed=3, jobs=2))
    assert parallel.results == serial.results


def test_suite_reports_unreadable_fixture(tmp_path):
    (tmp_path / "broken.quiver").write_text("arrow a 1 2\n", encoding="utf-8")
    suite = run_suite(tmp_path)
    assert [(r.check, r.passed) for r in suite.results] == [("fixture-loads", False)]
