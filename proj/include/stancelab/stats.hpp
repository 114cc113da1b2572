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
#include <optional>
#include <span>

#include "stancelab/label.hpp"

namespace stancelab {

// Rows are gold labels, columns predicted labels.
struct ConfusionMatrix {
  std::array<std::array<std::int64_t, kNumLabels>, kNumLabels> counts{};

  std::int64_t total() const;
  std::int64_t trace() const;
};

// Throws LengthMismatch or EmptyInput.
ConfusionMatrix Confusion(std::span<const Label> gold,
                          std::span<const Label> predicted);

// Absent values mean the ratio is undefined (zero denominator).
struct ClassScores {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

struct ClassMetrics {
  std::array<ClassScores, kNumLabels> per_class;
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  double accuracy = 0.0;
  // Unweighted means over the classes whose score is defined.
  std::optional<double> macro_precision;
  std::optional<double> macro_recall;
  std::optional<double> macro_f1;
};

// Throws EmptyInput when the matrix is empty.
ClassMetrics Metrics(const ConfusionMatrix& cm);

inline constexpr std::size_t kRowAU = 0;
inline constexpr std::size_t kRowUK = 1;
inline constexpr std::size_t kColHelpful = 0;
inline constexpr std::size_t kColHarmful = 1;

// Country (AU, UK) x stance (helpful, harmful). NEITHER is not a column.
struct ContingencyTable2x2 {
  std::array<std::array<std::int64_t, 2>, 2> observed{};
};

using Matrix2x2 = std::array<std::array<double, 2>, 2>;

// E[r][c] = row_r * col_c / total. Throws DegenerateMargin if any row or
// column sums to zero.
Matrix2x2 ExpectedCounts(const ContingencyTable2x2& table);

struct ChiSquareOptions {
  bool yates_correction = false;
};

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 1;
  double p_value = 1.0;
  Matrix2x2 expected{};
  bool low_expected_count = false;  // some expected count below 5
};

// Pearson's test of independence. Throws DegenerateMargin, and
// LowExpectedCount when an expected count is below 1.
ChiSquareResult PearsonChiSquare(const ContingencyTable2x2& table,
                                 const ChiSquareOptions& options = {});

// Chi-square survival function. Only df = 1 is supported, where
// P(X > x) = erfc(sqrt(x / 2)). Throws UnsupportedDf, InvalidArgument for
// negative or NaN x.
double Chi2Sf(double x, int df);

}  // namespace stancelab
