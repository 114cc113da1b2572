#!/usr/bin/env python3
# Copyright 2026 The stancelab Authors.
# SPDX-License-Identifier: Apache-2.0
"""Regenerate adversarial_responses.jsonl.

Each case lists a raw completion with its hand-derived expected parse:
label None means the parser must reject the response.
"""
import json
from pathlib import Path

CASES = [
    ("plain", "Reasoning: cites cessation evidence. Answer: helpful", "helpful", "cites cessation evidence."),
    ("quoted_upper_no_reasoning", 'Answer: "NEITHER".', "neither", ""),
    ("no_marker", "I think it is fine.", None, None),
    ("empty", "", None, None),
    ("marker_only", "Reasoning: x\nAnswer:", None, None),
    ("marker_then_space", "Answer:    \n\t ", None, None),
    ("lowercase_markers", "reasoning: youth risk\nanswer: harmful", "harmful", "youth risk"),
    ("uppercase_markers", "REASONING: fine\nANSWER: NEITHER", "neither", "fine"),
    ("mixed_case_label", "Reasoning: a\nAnswer: HeLpFuL", "helpful", "a"),
    ("bold_label", "Reasoning: a\nAnswer: **harmful**", "harmful", "a"),
    ("single_quotes", "Reasoning: a\nAnswer: 'neither'", "neither", "a"),
    ("curly_quotes", "Reasoning: a\nAnswer: “helpful”", "helpful", "a"),
    ("curly_single", "Reasoning: a\nAnswer: ‘harmful’.", "harmful", "a"),
    ("brackets", "Reasoning: a\nAnswer: [neither]", "neither", "a"),
    ("parens_period", "Reasoning: a\nAnswer: (helpful).", "helpful", "a"),
    ("backticks", "Reasoning: a\nAnswer: `harmful`", "harmful", "a"),
    ("angle", "Reasoning: a\nAnswer: <neither>", "neither", "a"),
    ("no_space_after_marker", "Reasoning: a\nAnswer:helpful", "helpful", "a"),
    ("label_on_next_line", "Reasoning: a\nAnswer:\n\nharmful", "harmful", "a"),
    ("leading_filler_word", "Reasoning: a\nAnswer: the sentence is neither", "neither", "a"),
    ("trailing_text", "Reasoning: a\nAnswer: helpful because of cessation", "helpful", "a"),
    ("answer_word_in_reasoning", "Reasoning: the answer is not obvious, harmful framing is absent.\nAnswer: neither", "neither", "the answer is not obvious, harmful framing is absent."),
    ("answer_marker_in_reasoning", "Reasoning: a first Answer: harmful was wrong.\nAnswer: helpful", "helpful", "a first Answer: harmful was wrong."),
    ("two_answer_markers_last_wins", "Answer: harmful\nAnswer: neither", "neither", ""),
    ("last_marker_invalid", "Reasoning: a\nAnswer: helpful\nAnswer: unsure", None, None),
    ("invalid_label", "Reasoning: a\nAnswer: maybe", None, None),
    ("slash_combo", "Reasoning: a\nAnswer: helpful/harmful", None, None),
    ("hyphen_suffix", "Reasoning: a\nAnswer: helpful-ish", None, None),
    ("plural", "Reasoning: a\nAnswer: helpfuls", None, None),
    ("first_valid_token_wins", "Reasoning: a\nAnswer: neither helpful nor harmful", "neither", "a"),
    ("combo_then_valid", "Reasoning: a\nAnswer: helpful/harmful, so harmful", "harmful", "a"),
    ("reasoning_after_answer", "Answer: harmful\nReasoning: added later", "harmful", ""),
    ("two_reasoning_markers", "Reasoning: draft\nReasoning: final thoughts\nAnswer: helpful", "helpful", "final thoughts"),
    ("multiline_reasoning", "Reasoning: line one.\nline two.\n\nAnswer: neither", "neither", "line one.\nline two."),
    ("crlf", "Reasoning: a\r\nAnswer: harmful\r\n", "harmful", "a"),
    ("tabs", "Reasoning:\ta\t\nAnswer:\tneither\t", "neither", "a"),
    ("markdown_heading", "### Reasoning: evidence of harm\n### Answer: harmful", "harmful", "evidence of harm\n###"),
    ("trailing_punctuation_run", "Reasoning: a\nAnswer: helpful!!!", "helpful", "a"),
    ("colon_in_label", "Reasoning: a\nAnswer: :neither:", "neither", "a"),
    ("missing_colon", "Reasoning: a\nAnswer helpful", None, None),
    ("spaced_colon", "Reasoning: a\nAnswer : helpful", None, None),
    ("unicode_reasoning", "Reasoning: café — über risk\nAnswer: harmful", "harmful", "café — über risk"),
    ("leading_whitespace", "   \n Reasoning:   padded   \n Answer: helpful", "helpful", "padded"),
    ("label_glued_to_word", "Reasoning: a\nAnswer: unhelpful", None, None),
    ("preamble_text", "Sure! Here is my analysis.\nReasoning: a\nAnswer: neither", "neither", "a"),
    ("reasoning_marker_only", "Reasoning: only reasoning, no verdict", None, None),
    ("answer_embedded_word", "Reasoning: a\nFinalAnswer: harmful", "harmful", "a\nFinal"),
    ("numbered_option", "Reasoning: a\nAnswer: 1. helpful", "helpful", "a"),
    ("long_reasoning", "Reasoning: " + "evidence " * 40 + "\nAnswer: harmful", "harmful", ("evidence " * 40).strip()),
    ("empty_reasoning", "Reasoning:\nAnswer: neither", "neither", ""),
]


def main() -> None:
    assert len(CASES) == 50
    assert len({c[0] for c in CASES}) == 50
    out = Path(__file__).resolve().parent / "adversarial_responses.jsonl"
    with open(out, "w") as f:
        for name, raw, label, reasoning in CASES:
            f.write(json.dumps({"name": name, "raw": raw, "label": label,
                                "reasoning": reasoning}, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
