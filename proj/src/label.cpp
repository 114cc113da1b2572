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

#include "stancelab/label.hpp"

#include "stancelab/text_util.hpp"

namespace stancelab {

std::string_view LabelToken(Label label) {
  switch (label) {
    case Label::kHelpful: return "helpful";
    case Label::kHarmful: return "harmful";
    case Label::kNeither: return "neither";
  }
  return "neither";
}

std::optional<Label> ParseLabelToken(std::string_view token) {
  for (Label label : kAllLabels) {
    if (EqualsIgnoreAsciiCase(token, LabelToken(label))) return label;
  }
  return std::nullopt;
}

}  // namespace stancelab
