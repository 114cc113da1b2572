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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stancelab/corpus.hpp"

namespace stancelab {

// A sentence anchored in its document. `start`/`end` are code point offsets
// into the canonical document text and delimit exactly `text`.
struct Sentence {
  std::string doc_id;
  std::size_t index = 0;
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  // "<doc_id>#<index>"
  std::string id() const;

  bool operator==(const Sentence&) const = default;
};

std::string MakeSentenceId(std::string_view doc_id, std::size_t index);

// Rule-based sentence boundary detector.
//
// A boundary follows `.`, `!` or `?` (plus any closing quotes or brackets)
// when the next non-space character is an uppercase letter, a digit or an
// opening quote, unless the period closes a known abbreviation, a single
// capital initial, or an ellipsis. Blank lines always end a sentence.
class Segmenter {
 public:
  Segmenter();
  explicit Segmenter(std::vector<std::string> abbreviations);

  static const std::vector<std::string>& DefaultAbbreviations();

  // One abbreviation per line; blank lines and lines starting with '#' are
  // ignored.
  static std::vector<std::string> ParseAbbreviations(std::string_view text);
  static Segmenter FromFile(const std::filesystem::path& path);

  std::vector<Sentence> Segment(const Document& doc) const;
  std::vector<Sentence> Segment(std::string_view doc_id,
                                std::string_view text) const;

  const std::vector<std::string>& abbreviations() const {
    return abbreviations_;
  }

 private:
  bool IsBoundary(std::string_view text, std::size_t terminator_begin,
                  std::size_t terminator_end, std::size_t next) const;
  bool EndsWithAbbreviation(std::string_view text, std::size_t dot) const;

  std::vector<std::string> abbreviations_;
};

}  // namespace stancelab
