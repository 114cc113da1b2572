# Copyright 2026 The stancelab Authors.
# SPDX-License-Identifier: Apache-2.0
"""Evidence-stance pipeline for ENDS policy documents."""

from ._core import (
    Sentence,
    StancelabError,
    TermMatch,
    canonicalize,
    chi2_sf,
    cohen_kappa,
    confusion,
    expected_counts,
    extract_witness_text,
    find_matches,
    format_percent,
    is_evidence,
    metrics,
    parse_response,
    pearson_chi_square,
    prompt_hash,
    prompt_template,
    render_prompt,
    report,
    run,
    sample_for_annotation,
    segment,
)

__all__ = [
    "Sentence",
    "StancelabError",
    "TermMatch",
    "canonicalize",
    "chi2_sf",
    "cohen_kappa",
    "confusion",
    "expected_counts",
    "extract_witness_text",
    "find_matches",
    "format_percent",
    "is_evidence",
    "metrics",
    "parse_response",
    "pearson_chi_square",
    "prompt_hash",
    "prompt_template",
    "render_prompt",
    "report",
    "run",
    "sample_for_annotation",
    "segment",
]
