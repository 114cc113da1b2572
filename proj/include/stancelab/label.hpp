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
#include <cstddef>
#include <optional>
#include <string_view>

namespace stancelab {

// Stance of an evidence sentence towards the public-health effect of ENDS.
enum class Label { kHelpful = 0, kHarmful = 1, kNeither = 2 };

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::kHelpful, Label::kHarmful, Label::kNeither};

inline constexpr std::size_t LabelIndex(Label label) {
  return static_cast<std::size_t>(label);
}

// Lowercase wire token: "helpful", "harmful" or "neither".
std::string_view LabelToken(Label label);

// Accepts the wire token in any letter case.
std::optional<Label> ParseLabelToken(std::string_view token);

}  // namespace stancelab
