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

#include <string>
#include <string_view>

#include "stancelab/label.hpp"

namespace stancelab {

inline constexpr std::string_view kPromptTemplateVersion = "v1";
inline constexpr std::string_view kPromptSlot = "[INPUT SENTENCE]";

// The classification prompt with its single input slot unfilled.
std::string_view PromptTemplate();

// Throws EmptySentence for an empty sentence.
std::string RenderPrompt(std::string_view sentence_text);

struct ParsedResponse {
  std::string reasoning;
  Label label = Label::kNeither;

  bool operator==(const ParsedResponse&) const = default;
};

// Reads a "Reasoning: ... Answer: ..." completion. The label is taken from
// the first helpful/harmful/neither token after the last "Answer:" marker;
// reasoning is the trimmed text between the last preceding "Reasoning:"
// marker and that "Answer:". Throws MalformedResponse.
ParsedResponse ParseResponse(std::string_view raw);

// Cache key: FNV-1a 64 over model_id, a NUL separator and the prompt.
std::string PromptHash(std::string_view model_id, std::string_view prompt);

}  // namespace stancelab
