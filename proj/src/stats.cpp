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

#include "stancelab/stats.hpp"

#include <cmath>
#include <string>

#include "stancelab/error.hpp"

namespace stancelab {

std::int64_t ConfusionMatrix::total() const {
  std::int64_t sum = 0;
  for (const auto& row : counts) {
    for (std::int64_t v : row) sum += v;
  }
  return sum;
}

std::int64_t ConfusionMatrix::trace() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < kNumLabels; ++i) sum += counts[i][i];
  return sum;
}

ConfusionMatrix Confusion(std::span<const Label> gold,
                          std::span<const Label> predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " labels, predictions " + std::to_string(predicted.size()));
  }
  if (gold.empty()) throw Error(ErrorCode::kEmptyInput, "no labels");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++cm.counts[LabelIndex(gold[i])][LabelIndex(predicted[i])];
  }
  return cm;
}

namespace {

std::optional<double> Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> MeanOfDefined(
    const std::array<ClassScores, kNumLabels>& scores,
    std::optional<double> ClassScores::*field) {
  double sum = 0.0;
  int n = 0;
  for (const ClassScores& s : scores) {
    if (const auto& v = s.*field) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

}  // namespace

ClassMetrics Metrics(const ConfusionMatrix& cm) {
  const std::int64_t total = cm.total();
  if (total == 0) throw Error(ErrorCode::kEmptyInput, "empty confusion matrix");
  ClassMetrics m;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      row += cm.counts[c][k];
      col += cm.counts[k][c];
    }
    ClassScores& s = m.per_class[c];
    s.precision = Ratio(cm.counts[c][c], col);
    s.recall = Ratio(cm.counts[c][c], row);
    if (s.precision && s.recall && *s.precision + *s.recall > 0.0) {
      s.f1 = 2.0 * *s.precision * *s.recall / (*s.precision + *s.recall);
    }
  }
  // Pooled over classes: TP = trace, FP = FN = total - trace, so all four
  // reduce to the same quotient.
  const std::int64_t trace = cm.trace();
  m.accuracy = static_cast<double>(trace) / static_cast<double>(total);
  m.micro_precision = static_cast<double>(trace) / static_cast<double>(total);
  m.micro_recall = static_cast<double>(trace) / static_cast<double>(total);
  m.micro_f1 = (2.0 * static_cast<double>(trace)) /
               (2.0 * static_cast<double>(trace) +
                2.0 * static_cast<double>(total - trace));
  m.macro_precision = MeanOfDefined(m.per_class, &ClassScores::precision);
  m.macro_recall = MeanOfDefined(m.per_class, &ClassScores::recall);
  m.macro_f1 = MeanOfDefined(m.per_class, &ClassScores::f1);
  return m;
}

Matrix2x2 ExpectedCounts(const ContingencyTable2x2& table) {
  const auto& o = table.observed;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      if (o[r][c] < 0) {
        throw Error(ErrorCode::kInvalidArgument, "negative observed count");
      }
    }
  }
  const std::int64_t rows[2] = {o[0][0] + o[0][1], o[1][0] + o[1][1]};
  const std::int64_t cols[2] = {o[0][0] + o[1][0], o[0][1] + o[1][1]};
  if (rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) {
    throw Error(ErrorCode::kDegenerateMargin,
                "every row and column of the contingency table needs a "
                "non-zero total");
  }
  const double total = static_cast<double>(rows[0] + rows[1]);
  Matrix2x2 expected{};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      expected[r][c] =
          static_cast<double>(rows[r]) * static_cast<double>(cols[c]) / total;
    }
  }
  return expected;
}

ChiSquareResult PearsonChiSquare(const ContingencyTable2x2& table,
                                 const ChiSquareOptions& options) {
  ChiSquareResult result;
  result.expected = ExpectedCounts(table);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      const double e = result.expected[r][c];
      if (e < 1.0) {
        throw Error(ErrorCode::kLowExpectedCount,
                    "expected count below 1; the chi-square approximation "
                    "does not hold");
      }
      if (e < 5.0) result.low_expected_count = true;
      double diff = std::abs(static_cast<double>(table.observed[r][c]) - e);
      if (options.yates_correction) diff = std::max(0.0, diff - 0.5);
      result.statistic += diff * diff / e;
    }
  }
  result.df = 1;
  result.p_value = Chi2Sf(result.statistic, result.df);
  return result;
}

double Chi2Sf(double x, int df) {
  if (df != 1) {
    throw Error(ErrorCode::kUnsupportedDf,
                "chi-square survival function supports df = 1 only, got " +
                    std::to_string(df));
  }
  if (std::isnan(x) || x < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "chi-square statistic must be a non-negative number");
  }
  return std::erfc(std::sqrt(x / 2.0));
}

}  // namespace stancelab
