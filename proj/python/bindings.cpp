// Copyright 2026 The stancelab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stancelab/annotation.hpp"
#include "stancelab/artifacts.hpp"
#include "stancelab/config.hpp"
#include "stancelab/corpus.hpp"
#include "stancelab/error.hpp"
#include "stancelab/evidence_filter.hpp"
#include "stancelab/pipeline.hpp"
#include "stancelab/prompt.hpp"
#include "stancelab/report.hpp"
#include "stancelab/segmenter.hpp"
#include "stancelab/stats.hpp"

namespace py = pybind11;
using namespace stancelab;

namespace {

Label ToLabel(const std::string& token) {
  if (auto label = ParseLabelToken(token)) return *label;
  throw Error(ErrorCode::kInvalidEnum, "unknown label '" + token + "'");
}

std::vector<Label> ToLabels(const std::vector<std::string>& tokens) {
  std::vector<Label> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(ToLabel(t));
  return out;
}

ContingencyTable2x2 ToTable(const std::array<std::array<std::int64_t, 2>, 2>& observed) {
  ContingencyTable2x2 t;
  t.observed = observed;
  return t;
}

Lexicon ToLexicon(const py::object& lexicon) {
  if (py::isinstance<py::str>(lexicon)) {
    const auto name = lexicon.cast<std::string>();
    if (name == "ends") return Lexicon::DefaultEnds();
    if (name == "evidence") return Lexicon::DefaultEvidence();
    throw Error(ErrorCode::kInvalidArgument,
                "lexicon must be 'ends', 'evidence' or a list of phrases");
  }
  std::vector<LexiconEntry> entries;
  for (const auto& phrase : lexicon.cast<std::vector<std::string>>()) {
    entries.push_back(LexiconEntry{phrase});
  }
  return Lexicon("custom", std::move(entries));
}

py::dict ScoresDict(const ClassScores& s) {
  py::dict d;
  d["precision"] = s.precision;
  d["recall"] = s.recall;
  d["f1"] = s.f1;
  return d;
}

py::dict ChiSquareDict(const ChiSquareResult& r) {
  py::dict d;
  d["statistic"] = r.statistic;
  d["df"] = r.df;
  d["p_value"] = r.p_value;
  d["expected"] = r.expected;
  d["low_expected_count"] = r.low_expected_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "stancelab core bindings";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() -> py::object {
    return py::exception<Error>(m, "StancelabError", PyExc_RuntimeError);
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      const std::string name(ErrorCodeName(e.code()));
      py::object exc = type(name + ": " + e.what());
      exc.attr("code") = name;
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Sentence>(m, "Sentence")
      .def_readonly("doc_id", &Sentence::doc_id)
      .def_readonly("index", &Sentence::index)
      .def_readonly("text", &Sentence::text)
      .def_readonly("start", &Sentence::start)
      .def_readonly("end", &Sentence::end)
      .def_property_readonly("id", &Sentence::id)
      .def("__repr__", [](const Sentence& s) { return "<Sentence " + s.id() + ">"; });

  py::class_<TermMatch>(m, "TermMatch")
      .def_readonly("phrase", &TermMatch::phrase)
      .def_readonly("start", &TermMatch::start)
      .def_readonly("end", &TermMatch::end);

  m.def(
      "canonicalize",
      [](std::string_view raw, bool strip_references, bool strip_footnote_markers) {
        return Canonicalize(raw, {strip_references, strip_footnote_markers});
      },
      py::arg("raw"), py::arg("strip_references") = true,
      py::arg("strip_footnote_markers") = true);

  m.def(
      "extract_witness_text",
      [](std::string_view tsv) { return ExtractWitnessText(ParseTranscriptTurns(tsv)); },
      py::arg("turns_tsv"));

  m.def(
      "segment",
      [](std::string_view doc_id, std::string_view text,
         std::optional<std::vector<std::string>> abbreviations) {
        const Segmenter seg = abbreviations ? Segmenter(*abbreviations) : Segmenter();
        return seg.Segment(doc_id, text);
      },
      py::arg("doc_id"), py::arg("text"), py::arg("abbreviations") = std::nullopt);

  m.def(
      "find_matches",
      [](std::string_view text, const py::object& lexicon) {
        return FindMatches(text, ToLexicon(lexicon));
      },
      py::arg("text"), py::arg("lexicon"));

  m.def(
      "is_evidence",
      [](std::string_view text) {
        const Sentence s{.doc_id = "s", .index = 0, .text = std::string(text)};
        return IsEvidence(s, Lexicon::DefaultEnds(), Lexicon::DefaultEvidence()).has_value();
      },
      py::arg("text"));

  m.def("render_prompt", &RenderPrompt, py::arg("sentence"));
  m.def("prompt_template", [] { return std::string(PromptTemplate()); });
  m.def(
      "parse_response",
      [](std::string_view raw) {
        const ParsedResponse r = ParseResponse(raw);
        return py::make_tuple(r.reasoning, std::string(LabelToken(r.label)));
      },
      py::arg("raw"));
  m.def("prompt_hash", &PromptHash, py::arg("model_id"), py::arg("prompt"));

  m.def(
      "cohen_kappa",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        if (a.size() != b.size()) {
          throw Error(ErrorCode::kLengthMismatch, "label lists differ in length");
        }
        std::vector<std::string> items;
        for (std::size_t i = 0; i < a.size(); ++i) items.push_back(std::to_string(i));
        AnnotationSession sa("a", "a", items), sb("b", "b", items);
        for (std::size_t i = 0; i < a.size(); ++i) {
          sa = sa.WithLabel(items[i], ToLabel(a[i]), "");
          sb = sb.WithLabel(items[i], ToLabel(b[i]), "");
        }
        const AgreementResult r = CohenKappa(sa, sb);
        py::dict d;
        d["kappa"] = r.kappa;
        d["observed_agreement"] = r.observed_agreement;
        d["expected_agreement"] = r.expected_agreement;
        d["n_items"] = r.n_items;
        d["cross_table"] = r.cross_table;
        return d;
      },
      py::arg("labels_a"), py::arg("labels_b"));

  m.def(
      "sample_for_annotation",
      [](const std::vector<std::string>& ids, std::size_t n, std::uint64_t seed) {
        return SampleForAnnotation(ids, n, seed);
      },
      py::arg("sentence_ids"), py::arg("n"), py::arg("seed"));

  m.def(
      "confusion",
      [](const std::vector<std::string>& gold, const std::vector<std::string>& predicted) {
        const auto g = ToLabels(gold), p = ToLabels(predicted);
        return Confusion(g, p).counts;
      },
      py::arg("gold"), py::arg("predicted"));

  m.def(
      "metrics",
      [](const std::array<std::array<std::int64_t, kNumLabels>, kNumLabels>& counts) {
        ConfusionMatrix cm;
        cm.counts = counts;
        const ClassMetrics r = Metrics(cm);
        py::dict per_class;
        for (Label l : kAllLabels) {
          per_class[py::str(std::string(LabelToken(l)))] = ScoresDict(r.per_class[LabelIndex(l)]);
        }
        py::dict d;
        d["per_class"] = per_class;
        d["accuracy"] = r.accuracy;
        d["micro_precision"] = r.micro_precision;
        d["micro_recall"] = r.micro_recall;
        d["micro_f1"] = r.micro_f1;
        d["macro_precision"] = r.macro_precision;
        d["macro_recall"] = r.macro_recall;
        d["macro_f1"] = r.macro_f1;
        return d;
      },
      py::arg("counts"));

  m.def(
      "expected_counts",
      [](const std::array<std::array<std::int64_t, 2>, 2>& observed) {
        return ExpectedCounts(ToTable(observed));
      },
      py::arg("observed"));

  m.def(
      "pearson_chi_square",
      [](const std::array<std::array<std::int64_t, 2>, 2>& observed, bool yates) {
        return ChiSquareDict(PearsonChiSquare(ToTable(observed), {yates}));
      },
      py::arg("observed"), py::arg("yates_correction") = false);

  m.def("chi2_sf", &Chi2Sf, py::arg("x"), py::arg("df") = 1);
  m.def("format_percent", &FormatPercent, py::arg("num"), py::arg("den"));

  m.def(
      "report",
      [](const std::string& records_jsonl, const std::string& manifest_csv,
         const std::map<std::string, std::string>& sentence_to_doc, const std::string& format) {
        std::vector<ClassificationRecord> records;
        std::istringstream in(records_jsonl);
        for (std::string line; std::getline(in, line);) {
          if (!line.empty()) records.push_back(ParseRecord(line));
        }
        const Breakdown b = Aggregate(records, ParseManifest(manifest_csv), sentence_to_doc);
        if (format == "text") return Render(b, ReportFormat::kText);
        if (format == "csv") return Render(b, ReportFormat::kCsv);
        if (format == "json") return Render(b, ReportFormat::kMachine);
        throw Error(ErrorCode::kInvalidArgument, "format must be text, csv or json");
      },
      py::arg("records_jsonl"), py::arg("manifest_csv"), py::arg("sentence_to_doc"),
      py::arg("format") = "text");

  m.def(
      "run",
      [](const std::string& subcommand, const std::string& config_path,
         const std::vector<std::string>& overrides) {
        const auto command = ParseSubcommand(subcommand);
        if (!command) {
          throw Error(ErrorCode::kInvalidConfig, "unknown subcommand '" + subcommand + "'");
        }
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = RunSubcommand(*command, LoadConfig(config_path, overrides), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("subcommand"), py::arg("config"),
      py::arg("overrides") = std::vector<std::string>{});
}
