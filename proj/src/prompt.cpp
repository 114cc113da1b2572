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

#include "stancelab/prompt.hpp"

#include "stancelab/error.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

namespace internal {
extern const std::string_view kPromptTemplateV1;
}  // namespace internal

namespace {

constexpr std::string_view kAnswerMarker = "Answer:";
constexpr std::string_view kReasoningMarker = "Reasoning:";

bool IsStrippable(std::string_view token, std::size_t i) {
  const char c = token[i];
  return c == '"' || c == '\'' || c == '.' || c == ',' || c == ';' ||
         c == ':' || c == '!' || c == '?' || c == '(' || c == ')' ||
         c == '[' || c == ']' || c == '*' || c == '`' || c == '_' ||
         c == '<' || c == '>' || c == '{' || c == '}';
}

// Strips ASCII punctuation and curly quotes from both ends of a token.
std::string_view StripPunctuation(std::string_view token) {
  static constexpr std::string_view kCurly[] = {
      "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x99"};
  bool changed = true;
  while (changed && !token.empty()) {
    changed = false;
    if (IsStrippable(token, 0)) {
      token.remove_prefix(1);
      changed = true;
    } else if (IsStrippable(token, token.size() - 1)) {
      token.remove_suffix(1);
      changed = true;
    } else {
      for (std::string_view q : kCurly) {
        if (token.starts_with(q)) {
          token.remove_prefix(q.size());
          changed = true;
        } else if (token.ends_with(q)) {
          token.remove_suffix(q.size());
          changed = true;
        }
      }
    }
  }
  return token;
}

}  // namespace

std::string_view PromptTemplate() { return internal::kPromptTemplateV1; }

std::string RenderPrompt(std::string_view sentence_text) {
  if (sentence_text.empty()) {
    throw Error(ErrorCode::kEmptySentence, "cannot render an empty sentence");
  }
  const std::string_view tmpl = PromptTemplate();
  const std::size_t slot = tmpl.find(kPromptSlot);
  std::string out;
  out.reserve(tmpl.size() + sentence_text.size());
  out.append(tmpl.substr(0, slot));
  out.append(sentence_text);
  out.append(tmpl.substr(slot + kPromptSlot.size()));
  return out;
}

ParsedResponse ParseResponse(std::string_view raw) {
  const std::size_t answer = RFindIgnoreAsciiCase(raw, kAnswerMarker);
  if (answer == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedResponse, "no \"Answer:\" marker");
  }
  std::string_view tail = raw.substr(answer + kAnswerMarker.size());
  std::optional<Label> label;
  while (!tail.empty() && !label) {
    std::size_t begin = 0;
    while (begin < tail.size() && IsAsciiSpace(tail[begin])) ++begin;
    std::size_t end = begin;
    while (end < tail.size() && !IsAsciiSpace(tail[end])) ++end;
    if (begin == end) break;
    label = ParseLabelToken(StripPunctuation(tail.substr(begin, end - begin)));
    tail.remove_prefix(end);
  }
  if (!label) {
    throw Error(ErrorCode::kMalformedResponse,
                "no helpful/harmful/neither token after \"Answer:\"");
  }
  ParsedResponse parsed;
  parsed.label = *label;
  const std::size_t reasoning =
      RFindIgnoreAsciiCase(raw, kReasoningMarker, answer);
  if (reasoning != std::string_view::npos) {
    const std::size_t begin = reasoning + kReasoningMarker.size();
    parsed.reasoning = std::string(TrimAscii(raw.substr(begin, answer - begin)));
  }
  return parsed;
}

std::string PromptHash(std::string_view model_id, std::string_view prompt) {
  std::string keyed(model_id);
  keyed.push_back('\0');
  keyed.append(prompt);
  return HexU64(Fnv1a64(keyed));
}

}  // namespace stancelab
