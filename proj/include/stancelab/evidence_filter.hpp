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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stancelab/segmenter.hpp"

namespace stancelab {

enum class CaseMode { kFold, kExact };

struct LexiconEntry {
  std::string phrase;
  CaseMode case_mode = CaseMode::kFold;

  bool operator==(const LexiconEntry&) const = default;
};

class Lexicon {
 public:
  // Throws InvalidArgument when entries are empty or a phrase is blank or
  // padded with whitespace.
  Lexicon(std::string name, std::vector<LexiconEntry> entries);

  static Lexicon DefaultEnds();
  static Lexicon DefaultEvidence();

  // One entry per line, optional "<TAB>exact" suffix. Blank lines and lines
  // starting with '#' are skipped.
  static Lexicon Parse(std::string name, std::string_view text);
  static Lexicon FromFile(const std::filesystem::path& path);

  const std::string& name() const { return name_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }

 private:
  std::string name_;
  std::vector<LexiconEntry> entries_;
};

// Offsets are code points within the sentence text.
struct TermMatch {
  std::string phrase;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const TermMatch&) const = default;
};

struct EvidenceSentence {
  Sentence sentence;
  std::vector<TermMatch> ends_matches;
  std::vector<TermMatch> evidence_matches;
};

// All occurrences of every lexicon phrase delimited on both sides by the
// text edge or a character that is not ASCII-alphanumeric. Sorted by start
// offset, then by end offset.
std::vector<TermMatch> FindMatches(std::string_view sentence_text,
                                   const Lexicon& lexicon);

std::optional<EvidenceSentence> IsEvidence(const Sentence& sentence,
                                           const Lexicon& ends_lexicon,
                                           const Lexicon& evidence_lexicon);

std::vector<EvidenceSentence> FilterEvidence(
    const std::vector<Sentence>& sentences, const Lexicon& ends_lexicon,
    const Lexicon& evidence_lexicon);

}  // namespace stancelab
