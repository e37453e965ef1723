"""End-to-end command line runs: exit codes, report contents, determinism.

Run:
    pytest python/tests/test_cli.py -q
"""

import json
import shutil

import pytest

from gmpath.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main
from gmpath.errors import EmptyCorpusWarning


def run_structured(capsys, *argv: str) -> tuple[int, dict]:
    code = main([*argv, "--format", "structured"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out else {}


def test_connectivity_report(corpus, capsys):
    code, doc = run_structured(capsys, "connectivity", str(corpus / "vee.quiver"))
    assert code == EXIT_OK
    assert doc["command"] == "connectivity"
    assert doc["status"] == "pass"
    assert all(doc["results"]["consistency"].values())
    assert doc["inputs"][0]["sha256"]


def test_connectivity_markdown(corpus, capsys):
    assert main(["connectivity", str(corpus / "two_cycle.quiver")]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("# gmpath connectivity")
    assert "Strong components: {1, 2}" in out


def test_quiver_radical_with_oracle(corpus, capsys):
    code, doc = run_structured(capsys, "radical", str(corpus / "chain.quiver"), "jacobson", "--oracle")
    assert code == EXIT_OK
    res = doc["results"]
    assert res["dimension"] == 3
    assert res["basis"] == ["a", "b", "a.b"]
    assert res["oracle"] == {"algebra_dimension": 6, "dimension": 3, "equal": True, "nilpotency_index": 3}


def test_infinite_radical_is_reported_but_has_no_oracle(corpus, capsys):
    code, doc = run_structured(capsys, "radical", str(corpus / "cycle_tail.quiver"), "baer")
    assert code == EXIT_OK
    assert doc["results"]["dimension"] == "infinite"
    assert main(["radical", str(corpus / "cycle_tail.quiver"), "baer", "--oracle"]) == EXIT_INPUT


def test_oracle_dimension_bound(corpus):
    argv = ["radical", str(corpus / "chain.quiver"), "jacobson", "--oracle", "--max-oracle-dim", "4"]
    assert main(argv) == EXIT_INPUT


def test_vn_radical_of_a_quiver(corpus, capsys):
    code, doc = run_structured(capsys, "radical", str(corpus / "isolated.quiver"), "vn", "--oracle")
    assert code == EXIT_OK
    assert doc["results"]["basis"] == ["e(3)"]
    assert doc["results"]["oracle"]["equal"]


def test_gm_radicals(corpus, capsys):
    code, doc = run_structured(capsys, "radical", str(corpus / "upper12.gmring"), "jacobson", "--oracle")
    assert code == EXIT_OK
    assert doc["results"]["basis"] == {"1,2": ["x12"]}
    code, doc = run_structured(capsys, "radical", str(corpus / "m11.gmring"), "vn", "--oracle", "--samples", "20")
    assert code == EXIT_OK
    assert doc["results"]["dimension"] == 4
    assert main(["radical", str(corpus / "upper12.gmring"), "vn"]) == EXIT_INPUT
    assert main(["radical", str(corpus / "upper12.gmring"), "nil"]) == EXIT_INPUT


def test_radical_results_name_their_source(corpus, capsys):
    code, doc = run_structured(capsys, "radical", str(corpus / "onearrow.quiver"), "vn")
    assert code == EXIT_OK
    assert doc["results"]["dimension"] == 0
    assert doc["results"]["citation"] == "Theorem 3.3(ii)"
    cases = [("chain.quiver", "jacobson", "Theorem 3.3(i)"), ("upper12.gmring", "baer", "Theorem 1.4(i)")]
    cases.append(("taft4.hopf", "levitzki", "Corollary 3.3.6(i)"))
    for name, kind, source in cases:
        code, doc = run_structured(capsys, "radical", str(corpus / name), kind)
        assert code == EXIT_OK
        assert doc["results"]["citation"] == source
    assert main(["radical", str(corpus / "onearrow.quiver"), "vn"]) == EXIT_OK
    assert "(span of isolated vertices; Theorem 3.3(ii))" in capsys.readouterr().out


def test_hopf_radical(corpus, capsys):
    code, doc = run_structured(capsys, "radical", str(corpus / "taft4.hopf"), "levitzki", "--oracle")
    assert code == EXIT_OK
    assert doc["results"]["dimension"] == 2
    assert doc["results"]["oracle"]["equal"]
    assert main(["radical", str(corpus / "taft4.hopf"), "vn"]) == EXIT_INPUT
    assert main(["radical", str(corpus / "linked_p3.hopf"), "jacobson"]) == EXIT_INPUT


def test_bad_inputs_exit_with_input_error(corpus, write):
    assert main(["radical", str(corpus / "manifest.json"), "jacobson"]) == EXIT_INPUT
    assert main(["connectivity", str(corpus / "missing.quiver")]) == EXIT_INPUT
    assert main(["connectivity", str(write("bad.quiver", "vertex 1\narrow a 1 2\n"))]) == EXIT_INPUT


def test_reports_are_deterministic(corpus, tmp_path, capsys):
    first, second = tmp_path / "first", tmp_path / "second"
    for out in (first, second):
        argv = ["radical", str(corpus / "diamond.quiver"), "jacobson", "--oracle", "--report-dir", str(out)]
        assert main(argv) == EXIT_OK
    capsys.readouterr()
    for name in ("radical.json", "radical.md"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_net_ingest(corpus, capsys):
    files = [str(corpus / "star.edges"), str(corpus / "noisy.edges")]
    code, doc = run_structured(capsys, "net-ingest", *files)
    assert code == EXIT_OK
    star, noisy = (doc["results"]["networks"][f] for f in files)
    assert star["radical"]["dimension"] == 4
    assert star["radical"]["basis"] == ["report", "report_2", "report_3", "a4"]
    assert not star["semiprime"]
    assert [p["line"] for p in noisy["problems"]] == [3, 5]
    assert noisy["semiprime"]


def test_net_ingest_keeps_colliding_labels_apart(write, capsys):
    path = write("dups.edges", "1 2 b\n1 2 b_3\n1 2 b\n2 3\n")
    code, doc = run_structured(capsys, "net-ingest", str(path))
    assert code == EXIT_OK
    net = doc["results"]["networks"][str(path)]
    assert net["problems"] == []
    assert net["radical"]["dimension"] == 7
    assert sorted(net["radical"]["basis"])[:4] == ["a4", "b", "b.a4", "b_3"]


def test_net_ingest_on_a_deep_layered_network(write, capsys):
    lines = [f"L{d}_{i} L{d + 1}_{j}" for d in range(19) for i in range(10) for j in range(10)]
    path = write("layers.edges", "\n".join(lines) + "\n")
    code, doc = run_structured(capsys, "net-ingest", str(path))
    assert code == EXIT_OK
    net = doc["results"]["networks"][str(path)]
    assert net["unilateral"] == {"count": 10**20}
    assert "strong_refines_unilateral" not in net["consistency"]
    assert all(net["consistency"].values())
    assert net["radical"]["dimension"] == sum(10 * (20 - d) * 10**d for d in range(1, 20))
    assert "basis" not in net["radical"]
    assert not net["semiprime"]


def small_corpus(corpus, tmp_path):
    target = tmp_path / "corpus"
    target.mkdir()
    for name in ("chain.quiver", "upper12.gmring", "taft4.hopf", "taft4_block.rep.json", "star.edges"):
        shutil.copy(corpus / name, target / name)
    manifest = json.loads((corpus / "manifest.json").read_text(encoding="utf-8"))
    keep = {k: v for k, v in manifest["fixtures"].items() if (target / k).exists()}
    (target / "manifest.json").write_text(
        json.dumps({"fixtures": keep, "generated": {"acyclic_quivers": 3, "digraphs": 3, "matrix_systems": 2}}),
        encoding="utf-8",
    )
    return target


def test_verify_small_corpus(corpus, tmp_path, capsys):
    reports = tmp_path / "reports"
    code, doc = run_structured(capsys, "verify", str(small_corpus(corpus, tmp_path)), "--report-dir", str(reports))
    assert code == EXIT_OK, doc["results"]["failures"]
    assert doc["results"]["fixtures"] == 5
    assert doc["results"]["matrix"]["fixture-loads"] == {"pass": 5, "fail": 0, "citation": None}
    by_source = doc["results"]["theorem_matrix"]
    assert by_source["Theorem 1.4(i)"]["fail"] == 0
    assert by_source["Example 3.8(i)"] == {"pass": 1, "fail": 0}
    assert "fixture-loads" not in by_source and None not in by_source
    assert doc["results"]["rejected_acyclic_draws"] >= 0
    assert (reports / "scorecard.md").read_text(encoding="utf-8").startswith("# gmpath verification scorecard")
    assert (reports / "verify.json").exists()


def test_verify_negative_corpus_fails(corpus, capsys):
    code, doc = run_structured(capsys, "verify", str(corpus.parent / "negative"))
    assert code == EXIT_MISMATCH
    assert doc["results"]["failures"]


def test_verify_empty_corpus_warns(tmp_path, capsys):
    with pytest.warns(EmptyCorpusWarning):
        assert main(["verify", str(tmp_path)]) == EXIT_OK
    assert main(["verify", str(tmp_path / "nowhere")]) == EXIT_INPUT
