# Copyright 2026 The stancelab Authors.
# SPDX-License-Identifier: Apache-2.0
import math
import os
import pathlib

import pytest

import stancelab

FIXTURES = pathlib.Path(
    os.environ.get(
        "STANCELAB_FIXTURES_DIR",
        pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures",
    )
)

HELPFUL_SENTENCE = (
    "Observational data from the UK suggest that there has been an increase in "
    "the popularity of e-cigarettes accompanied by a reduction in smoking "
    "cigarettes."
)


def test_canonicalize():
    assert stancelab.canonicalize("a\r\nb\rc") == "a\nb\nc"
    assert stancelab.canonicalize("Vaping is safer.[12]") == "Vaping is safer."
    text = "Body.\nReferences\n1. A paper."
    assert "A paper" not in stancelab.canonicalize(text)
    assert "A paper" in stancelab.canonicalize(text, strip_references=False)


def test_segment_offsets_are_code_points():
    sentences = stancelab.segment("d", "Café rises. Naïve view.")
    assert [(s.start, s.end) for s in sentences] == [(0, 11), (12, 23)]
    assert [s.id for s in sentences] == ["d#0", "d#1"]
    assert len(stancelab.segment("d", "Use ENDS, e.g. vapes, daily.")) == 1
    assert len(stancelab.segment("d", "Dr. Smith.", abbreviations=["Sect."])) == 2


def test_evidence_filter():
    assert stancelab.is_evidence(HELPFUL_SENTENCE)
    assert not stancelab.is_evidence("The ends of the earth are far.")
    matches = stancelab.find_matches(HELPFUL_SENTENCE, "ends")
    assert [m.phrase for m in matches] == ["e-cigarettes"]
    assert [m.phrase for m in stancelab.find_matches("vapes and data", ["data"])] == ["data"]


def test_prompt_and_parse():
    golden = (FIXTURES / "prompt_golden.txt").read_text(encoding="utf-8")
    assert stancelab.render_prompt(HELPFUL_SENTENCE) == golden
    assert stancelab.parse_response(
        "Reasoning: cites cessation evidence. Answer: helpful"
    ) == ("cites cessation evidence.", "helpful")
    assert stancelab.parse_response('Answer: "NEITHER".') == ("", "neither")
    with pytest.raises(stancelab.StancelabError) as err:
        stancelab.parse_response("I think it is fine.")
    assert err.value.code == "MalformedResponse"
    h = stancelab.prompt_hash("gpt-4-0613", "p")
    assert len(h) == 16 and h != stancelab.prompt_hash("gpt-4o", "p")


def test_kappa():
    a = ["helpful", "helpful", "neither", "neither"]
    b = ["helpful", "neither", "neither", "neither"]
    assert abs(stancelab.cohen_kappa(a, b)["kappa"] - 0.5) < 1e-12
    assert stancelab.cohen_kappa(a, a)["kappa"] == 1.0
    with pytest.raises(stancelab.StancelabError):
        stancelab.cohen_kappa(a, ["maybe"] * 4)


def test_metrics():
    counts = [[60, 5, 5], [0, 50, 5], [5, 0, 70]]
    m = stancelab.metrics(counts)
    assert m["micro_f1"] == 0.9 == m["accuracy"]
    cm = stancelab.confusion(["helpful", "harmful"], ["harmful", "harmful"])
    assert cm[0][1] == 1 and cm[1][1] == 1


def test_chi_square():
    observed = [[102, 332], [288, 114]]
    e = stancelab.expected_counts(observed)
    assert e[0][0] == pytest.approx(434 * 390 / 836)
    r = stancelab.pearson_chi_square(observed)
    n, det = 836, 102 * 114 - 332 * 288
    oracle = n * det * det / (434 * 402 * 390 * 446)
    assert r["statistic"] == pytest.approx(oracle, rel=1e-12)
    assert r["df"] == 1 and r["p_value"] < 1e-4
    assert abs(stancelab.chi2_sf(3.841458821) - 0.05) < 1e-6
    assert stancelab.chi2_sf(2.0) == pytest.approx(math.erfc(1.0))
    assert stancelab.format_percent(7, 218) == 3


def test_report_on_breakdown_fixture():
    records = (FIXTURES / "breakdown" / "records.jsonl").read_text(encoding="utf-8")
    manifest = (FIXTURES / "breakdown" / "manifest.csv").read_text(encoding="utf-8")
    index = {}
    lines = (FIXTURES / "breakdown" / "sentence_index.csv").read_text().splitlines()
    for line in lines[1:]:
        sentence_id, doc_id = line.split(",")
        index[sentence_id] = doc_id
    csv = stancelab.report(records, manifest, index, "csv").splitlines()
    assert csv[1].startswith("ERKU,AU,218,7,3,94,43,117")
    assert "202" in stancelab.report(records, manifest, index, "text")


def test_run_all(tmp_path):
    config = str(FIXTURES / "corpus" / "stancelab.conf")
    code, out, err = stancelab.run("all", config, [f"work_dir={tmp_path}"])
    assert code == 0, err
    expected = (FIXTURES / "corpus" / "expected_breakdown.csv").read_text()
    assert (tmp_path / "breakdown.csv").read_text() == expected
    code, _, err = stancelab.run("classify", config, [f"work_dir={tmp_path / 'empty'}"])
    assert code == 3 and "MissingStageOutput" in err
