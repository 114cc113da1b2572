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

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stancelab/classifier.hpp"
#include "stancelab/corpus.hpp"
#include "stancelab/stats.hpp"

namespace stancelab {

struct BreakdownRow {
  std::optional<CorpusKind> corpus = std::nullopt;  // absent for totals
  Country country = Country::kAU;
  std::int64_t n_evidence = 0;
  std::int64_t n_helpful = 0;
  std::optional<int> pct_helpful = std::nullopt;  // absent if all failed
  std::int64_t n_harmful = 0;
  std::optional<int> pct_harmful = std::nullopt;
  std::int64_t n_neither = 0;
  std::int64_t n_failed = 0;

  bool operator==(const BreakdownRow&) const = default;
};

struct Breakdown {
  // ERKU/AU, ERKU/UK, ID/AU, ID/UK, IT/AU, IT/UK, TOTAL/AU, TOTAL/UK.
  std::vector<BreakdownRow> rows;
  // [country][helpful, harmful], rounded half-up; absent when the totals
  // table has an empty margin.
  std::optional<std::array<std::array<std::int64_t, 2>, 2>> expected;
  std::optional<ChiSquareResult> chi_square;
  std::string chi_square_note;  // why chi_square is absent, if it is

  const BreakdownRow& total(Country country) const;
};

// round(100 * num / den), halves rounded up. Requires 0 <= num <= den and
// den >= 1.
int FormatPercent(std::int64_t num, std::int64_t den);

// Groups records by (corpus kind, country) of their source document. Failed
// records are counted but excluded from percentage denominators and from the
// contingency table. Throws UnresolvedSentence.
Breakdown Aggregate(const std::vector<ClassificationRecord>& records,
                    const std::vector<DocumentMeta>& metas,
                    const std::map<std::string, std::string>& sentence_to_doc,
                    const ChiSquareOptions& chi_square_options = {});

// Observed helpful/harmful totals per country.
ContingencyTable2x2 TotalsTable(const Breakdown& breakdown);

enum class ReportFormat { kText, kCsv, kMachine };

inline constexpr std::string_view kBreakdownCsvHeader =
    "corpus,country,n_evidence,n_helpful,pct_helpful,n_harmful,pct_harmful,"
    "n_neither,n_failed";

std::string Render(const Breakdown& breakdown, ReportFormat format);

// Inverse of the CSV rendering (rows only).
std::vector<BreakdownRow> ParseBreakdownCsv(std::string_view csv_text);

}  // namespace stancelab
