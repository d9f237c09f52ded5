"""Campaign runners: reduced-bound runs, report schema, corpus mode, errors."""

import json

import pytest

from matchcov.campaigns import (
    CAMPAIGNS,
    CORPUS_CHECKS,
    SCHEMA_VERSION,
    report_json,
    run_campaign,
    run_corpus,
)
from matchcov.errors import BoundExceededError, UnknownCampaignError
from matchcov.zoo import complete_graph, cycle_graph, petersen_graph, prism_graph

REPORT_KEYS = {
    "schema",
    "campaign",
    "parameters",
    "graphs_checked",
    "summary",
    "counterexamples",
    "verdicts",
    "wall_clock_seconds",
}


def _check_shape(report, name):
    # verdicts are recorded only where per-graph rows are meaningful
    assert REPORT_KEYS - {"verdicts"} <= set(report) <= REPORT_KEYS
    assert report["schema"] == SCHEMA_VERSION
    assert report["campaign"] == name
    assert report["summary"]["status"] in ("pass", "fail")
    assert isinstance(report["counterexamples"], list)
    assert report["wall_clock_seconds"] >= 0
    json.loads(report_json(report))


def test_registry_names():
    assert set(CAMPAIGNS) == {
        "thm-1.1",
        "thm-1.3",
        "thm-1.4",
        "lemma-2.16",
        "lemma-2.17",
        "lemma-2.18",
        "lemma-3.6",
        "lemma-3.9",
        "prop-3.13",
        "decomp-unique",
        "fig-r8",
        "fig-nonsolid-6",
        "fig-g3",
    }
    assert set(CORPUS_CHECKS) <= set(CAMPAIGNS)


def test_thm_1_1_reduced():
    rep = run_campaign("thm-1.1", max_n=6)
    _check_shape(rep, "thm-1.1")
    assert rep["summary"]["status"] == "pass"
    assert rep["counterexamples"] == []
    assert rep["summary"]["bricks_by_n"] == {"4": 1, "6": 13}
    assert rep["parameters"] == {"max_n": 6, "population": "simple bricks"}


def test_thm_1_4_reduced():
    rep = run_campaign("thm-1.4", max_n=6, mult_n=4)
    _check_shape(rep, "thm-1.4")
    assert rep["summary"]["status"] == "pass"
    assert rep["summary"]["minimal"] >= 1
    assert rep["graphs_checked"] >= rep["summary"]["matching_covered"]
    # K4 and C4 are minimal at four vertices
    assert sum(1 for ex in rep["summary"]["minimal_examples"] if ex["n"] == 4) == 2


def test_thm_1_3_reduced():
    rep = run_campaign("thm-1.3", max_n=6)
    _check_shape(rep, "thm-1.3")
    assert rep["summary"]["status"] == "pass"
    # W3 and W5 hubs give wheel-like bricks already at this bound
    assert rep["summary"]["wheel_like_bricks"] >= 2
    assert rep["summary"]["closure_bound"] == 6


def test_lemma_2_17_reduced():
    rep = run_campaign("lemma-2.17", max_n=6, mult_n=4)
    _check_shape(rep, "lemma-2.17")
    assert rep["summary"]["status"] == "pass"
    assert rep["summary"]["with_p_set"] + rep["summary"]["without_p_set"] == (
        rep["graphs_checked"]
    )


def test_lemma_2_18_reduced():
    rep = run_campaign("lemma-2.18", max_n=6, mult_n=4)
    _check_shape(rep, "lemma-2.18")
    assert rep["summary"]["status"] == "pass"
    assert rep["summary"]["orientations_tested"] > 0


def test_prop_3_13_reduced():
    rep = run_campaign("prop-3.13", max_n=6)
    _check_shape(rep, "prop-3.13")
    assert rep["summary"]["status"] == "pass"
    assert rep["summary"]["bicritical"] > 0


def test_decomp_unique_reduced():
    rep = run_campaign("decomp-unique", max_n=6, seeds=5)
    _check_shape(rep, "decomp-unique")
    assert rep["summary"]["status"] == "pass"
    assert rep["summary"]["seeds_per_graph"] == 5
    assert rep["summary"]["with_nontrivial_tight_cut"] >= 1


def test_fig_nonsolid_6():
    rep = run_campaign("fig-nonsolid-6")
    _check_shape(rep, "fig-nonsolid-6")
    assert rep["summary"]["status"] == "pass"
    assert rep["summary"]["six_vertex_bricks"] == 13
    assert rep["summary"]["candidates"] == 11


def test_verdict_lines_present():
    rep = run_campaign("thm-1.1", max_n=4)
    assert rep["verdicts"], "per-graph verdicts should be recorded"
    v = rep["verdicts"][0]
    assert isinstance(v, dict) and "canon" in v


def test_unknown_campaign():
    with pytest.raises(UnknownCampaignError):
        run_campaign("thm-9.9")


def test_unknown_parameter():
    with pytest.raises(UnknownCampaignError):
        run_campaign("thm-1.1", bogus=3)


def test_corpus_run():
    rep = run_corpus("thm-1.1", [complete_graph(4), prism_graph()])
    assert rep["campaign"] == "thm-1.1"
    assert rep["summary"]["status"] == "pass"
    assert rep["summary"]["applied"] == 2
    assert rep["graphs_checked"] == 2
    assert rep["parameters"]["graphs"] == 2


def test_corpus_skips_inapplicable():
    # the prism is not wheel-like, so the wheel-like check does not apply
    rep = run_corpus("thm-1.3", [prism_graph()])
    assert rep["summary"]["applied"] == 0
    assert rep["summary"]["skipped_hypotheses"] == 1
    assert rep["summary"]["status"] == "pass"


def test_corpus_petersen():
    rep = run_corpus("decomp-unique", [petersen_graph()], seeds=3)
    assert rep["summary"]["status"] == "pass"


def test_corpus_unsupported_campaign():
    with pytest.raises(UnknownCampaignError):
        run_corpus("lemma-3.9", [complete_graph(4)])
    with pytest.raises(UnknownCampaignError):
        run_corpus("fig-r8", [complete_graph(4)])


def test_corpus_bound():
    with pytest.raises(BoundExceededError):
        run_corpus("thm-1.1", [cycle_graph(12)])
