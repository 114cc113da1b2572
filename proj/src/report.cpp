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

#include "stancelab/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "stancelab/csv.hpp"
#include "stancelab/error.hpp"

namespace stancelab {

namespace {

std::size_t RowIndex(CorpusKind kind, Country country) {
  return static_cast<std::size_t>(kind) * 2 + static_cast<std::size_t>(country);
}

std::string_view DisplayName(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::kErku: return "Erku Corpus";
    case CorpusKind::kInquirySubmission: return "ID Corpus";
    case CorpusKind::kInquiryTranscript: return "IT Corpus";
  }
  return "";
}

std::int64_t RoundHalfUp(double value) {
  return static_cast<std::int64_t>(std::floor(value + 0.5));
}

void FillPercentages(BreakdownRow& row) {
  const std::int64_t den = row.n_evidence - row.n_failed;
  if (den <= 0) {
    row.pct_helpful.reset();
    row.pct_harmful.reset();
    return;
  }
  row.pct_helpful = FormatPercent(row.n_helpful, den);
  row.pct_harmful = FormatPercent(row.n_harmful, den);
}

std::string CountWithPercent(std::int64_t n, const std::optional<int>& pct) {
  std::string out = std::to_string(n);
  if (pct) out += " (" + std::to_string(*pct) + "%)";
  return out;
}

std::string OptionalInt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string PadRight(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string PadLeft(std::string_view s, std::size_t width) {
  std::string out;
  if (s.size() < width) out.append(width - s.size(), ' ');
  out.append(s);
  return out;
}

std::string RenderText(const Breakdown& b) {
  std::ostringstream out;
  auto line = [&](std::string_view corpus, std::string_view country,
                  std::string_view n, std::string_view helpful,
                  std::string_view harmful, std::string_view neither,
                  std::string_view failed) {
    out << PadRight(corpus, 17) << PadRight(country, 9) << PadLeft(n, 11)
        << "  " << PadRight(helpful, 12) << PadRight(harmful, 12)
        << PadLeft(neither, 9) << PadLeft(failed, 10) << '\n';
  };
  line("Corpus Type", "Country", "# Ev. Sent.", "# Helpful", "# Harmful",
       "# Neither", "# Failed");
  out << std::string(82, '-') << '\n';
  for (const BreakdownRow& row : b.rows) {
    const bool first_of_pair = row.country == Country::kAU;
    std::string_view corpus;
    if (first_of_pair) corpus = row.corpus ? DisplayName(*row.corpus)
                                           : std::string_view("Total observed");
    line(corpus, CountryToken(row.country), std::to_string(row.n_evidence),
         CountWithPercent(row.n_helpful, row.pct_helpful),
         CountWithPercent(row.n_harmful, row.pct_harmful),
         std::to_string(row.n_neither), std::to_string(row.n_failed));
    if (!first_of_pair && row.corpus) out << std::string(82, '-') << '\n';
  }
  for (Country country : kAllCountries) {
    const std::size_t r = static_cast<std::size_t>(country);
    std::string helpful = "-";
    std::string harmful = "-";
    if (b.expected) {
      helpful = std::to_string((*b.expected)[r][kColHelpful]);
      harmful = std::to_string((*b.expected)[r][kColHarmful]);
    }
    line(country == Country::kAU ? "Expected values" : "",
         CountryToken(country), "-", helpful, harmful, "-", "-");
  }
  out << std::string(82, '-') << '\n';
  if (b.chi_square) {
    std::ostringstream p;
    p << std::setprecision(3) << b.chi_square->p_value;
    out << "Chi-square (helpful/harmful x country): statistic = " << std::fixed
        << std::setprecision(2) << b.chi_square->statistic
        << ", df = " << b.chi_square->df << ", p = " << p.str();
    if (b.chi_square->low_expected_count) out << " (expected count < 5)";
    out << '\n';
  } else {
    out << "Chi-square: not computed (" << b.chi_square_note << ")\n";
  }
  return out.str();
}

std::string RenderCsv(const Breakdown& b) {
  std::string out(kBreakdownCsvHeader);
  out.push_back('\n');
  for (const BreakdownRow& row : b.rows) {
    out += csv::FormatRow(
        {row.corpus ? std::string(CorpusKindToken(*row.corpus)) : "TOTAL",
         std::string(CountryToken(row.country)), std::to_string(row.n_evidence),
         std::to_string(row.n_helpful), OptionalInt(row.pct_helpful),
         std::to_string(row.n_harmful), OptionalInt(row.pct_harmful),
         std::to_string(row.n_neither), std::to_string(row.n_failed)});
  }
  return out;
}

nlohmann::ordered_json OptionalJson(const std::optional<int>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string RenderMachine(const Breakdown& b) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const BreakdownRow& row : b.rows) {
    nlohmann::ordered_json r;
    r["corpus"] = row.corpus ? std::string(CorpusKindToken(*row.corpus))
                             : std::string("TOTAL");
    r["country"] = std::string(CountryToken(row.country));
    r["n_evidence"] = row.n_evidence;
    r["n_helpful"] = row.n_helpful;
    r["pct_helpful"] = OptionalJson(row.pct_helpful);
    r["n_harmful"] = row.n_harmful;
    r["pct_harmful"] = OptionalJson(row.pct_harmful);
    r["n_neither"] = row.n_neither;
    r["n_failed"] = row.n_failed;
    j["rows"].push_back(std::move(r));
  }
  if (b.expected) {
    nlohmann::ordered_json e;
    for (Country country : kAllCountries) {
      const std::size_t r = static_cast<std::size_t>(country);
      e[std::string(CountryToken(country))] = {
          {"helpful", (*b.expected)[r][kColHelpful]},
          {"harmful", (*b.expected)[r][kColHarmful]}};
    }
    j["expected"] = std::move(e);
  } else {
    j["expected"] = nullptr;
  }
  if (b.chi_square) {
    const ChiSquareResult& c = *b.chi_square;
    nlohmann::ordered_json cj;
    cj["statistic"] = c.statistic;
    cj["df"] = c.df;
    cj["p_value"] = c.p_value;
    cj["expected"] = {{c.expected[0][0], c.expected[0][1]},
                      {c.expected[1][0], c.expected[1][1]}};
    cj["low_expected_count"] = c.low_expected_count;
    j["chi_square"] = std::move(cj);
  } else {
    j["chi_square"] = nullptr;
    j["chi_square_note"] = b.chi_square_note;
  }
  return j.dump(2) + "\n";
}

std::int64_t ParseCount(const std::string& field) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "not an integer: '" + field + "'");
  }
}

}  // namespace

const BreakdownRow& Breakdown::total(Country country) const {
  return rows.at(6 + static_cast<std::size_t>(country));
}

int FormatPercent(std::int64_t num, std::int64_t den) {
  if (den < 1 || num < 0 || num > den) {
    throw Error(ErrorCode::kInvalidArgument,
                "percentage needs 0 <= num <= den and den >= 1");
  }
  return static_cast<int>((200 * num + den) / (2 * den));
}

Breakdown Aggregate(const std::vector<ClassificationRecord>& records,
                    const std::vector<DocumentMeta>& metas,
                    const std::map<std::string, std::string>& sentence_to_doc,
                    const ChiSquareOptions& chi_square_options) {
  std::unordered_map<std::string, const DocumentMeta*> doc_by_id;
  for (const DocumentMeta& m : metas) doc_by_id.emplace(m.id, &m);

  Breakdown b;
  for (CorpusKind kind : kAllCorpusKinds) {
    for (Country country : kAllCountries) {
      b.rows.push_back({.corpus = kind, .country = country});
    }
  }
  for (Country country : kAllCountries) {
    b.rows.push_back({.corpus = std::nullopt, .country = country});
  }

  for (const ClassificationRecord& record : records) {
    auto sit = sentence_to_doc.find(record.sentence_id);
    if (sit == sentence_to_doc.end()) {
      throw Error(ErrorCode::kUnresolvedSentence,
                  "record for unknown sentence '" + record.sentence_id + "'");
    }
    auto dit = doc_by_id.find(sit->second);
    if (dit == doc_by_id.end()) {
      throw Error(ErrorCode::kUnresolvedSentence,
                  "sentence '" + record.sentence_id +
                      "' belongs to unknown document '" + sit->second + "'");
    }
    const DocumentMeta& meta = *dit->second;
    for (BreakdownRow* row :
         {&b.rows[RowIndex(meta.corpus_kind, meta.country)],
          &b.rows[6 + static_cast<std::size_t>(meta.country)]}) {
      ++row->n_evidence;
      if (const auto label = record.label()) {
        switch (*label) {
          case Label::kHelpful: ++row->n_helpful; break;
          case Label::kHarmful: ++row->n_harmful; break;
          case Label::kNeither: ++row->n_neither; break;
        }
      } else {
        ++row->n_failed;
      }
    }
  }
  for (BreakdownRow& row : b.rows) FillPercentages(row);

  const ContingencyTable2x2 table = TotalsTable(b);
  try {
    const Matrix2x2 expected = ExpectedCounts(table);
    std::array<std::array<std::int64_t, 2>, 2> rounded{};
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        rounded[r][c] = RoundHalfUp(expected[r][c]);
      }
    }
    b.expected = rounded;
    b.chi_square = PearsonChiSquare(table, chi_square_options);
  } catch (const Error& e) {
    b.chi_square_note = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  return b;
}

ContingencyTable2x2 TotalsTable(const Breakdown& breakdown) {
  ContingencyTable2x2 table;
  for (Country country : kAllCountries) {
    const BreakdownRow& row = breakdown.total(country);
    const std::size_t r = static_cast<std::size_t>(country);
    table.observed[r][kColHelpful] = row.n_helpful;
    table.observed[r][kColHarmful] = row.n_harmful;
  }
  return table;
}

std::string Render(const Breakdown& breakdown, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText: return RenderText(breakdown);
    case ReportFormat::kCsv: return RenderCsv(breakdown);
    case ReportFormat::kMachine: return RenderMachine(breakdown);
  }
  return {};
}

std::vector<BreakdownRow> ParseBreakdownCsv(std::string_view csv_text) {
  const std::vector<csv::Row> rows = csv::Parse(csv_text);
  if (rows.empty() ||
      csv::FormatRow(rows.front()) != std::string(kBreakdownCsvHeader) + "\n") {
    throw Error(ErrorCode::kParse, "breakdown CSV header mismatch");
  }
  std::vector<BreakdownRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& f = rows[i];
    if (f.size() != 9) {
      throw Error(ErrorCode::kParse, "breakdown CSV row " +
                                         std::to_string(i + 1) +
                                         " needs 9 fields");
    }
    BreakdownRow row;
    if (f[0] != "TOTAL") {
      auto kind = ParseCorpusKind(f[0]);
      if (!kind) throw Error(ErrorCode::kInvalidEnum, "corpus '" + f[0] + "'");
      row.corpus = *kind;
    }
    auto country = ParseCountry(f[1]);
    if (!country) throw Error(ErrorCode::kInvalidEnum, "country '" + f[1] + "'");
    row.country = *country;
    row.n_evidence = ParseCount(f[2]);
    row.n_helpful = ParseCount(f[3]);
    if (!f[4].empty()) row.pct_helpful = static_cast<int>(ParseCount(f[4]));
    row.n_harmful = ParseCount(f[5]);
    if (!f[6].empty()) row.pct_harmful = static_cast<int>(ParseCount(f[6]));
    row.n_neither = ParseCount(f[7]);
    row.n_failed = ParseCount(f[8]);
    out.push_back(row);
  }
  return out;
}

}  // namespace stancelab
