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

#include "stancelab/evidence_filter.hpp"

#include <algorithm>
#include <utility>

#include "stancelab/error.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

namespace {

std::vector<LexiconEntry> FoldEntries(std::initializer_list<const char*> words) {
  std::vector<LexiconEntry> out;
  for (const char* w : words) out.push_back({w, CaseMode::kFold});
  return out;
}

bool PhraseMatchesAt(std::string_view text, std::size_t pos,
                     const LexiconEntry& entry) {
  const std::string_view candidate = text.substr(pos, entry.phrase.size());
  if (candidate.size() != entry.phrase.size()) return false;
  return entry.case_mode == CaseMode::kExact
             ? candidate == entry.phrase
             : EqualsIgnoreAsciiCase(candidate, entry.phrase);
}

}  // namespace

Lexicon::Lexicon(std::string name, std::vector<LexiconEntry> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "lexicon '" + name_ + "' has no entries");
  }
  for (const LexiconEntry& e : entries_) {
    if (e.phrase.empty() || TrimAscii(e.phrase).size() != e.phrase.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon '" + name_ + "' has a blank or padded phrase: '" +
                      e.phrase + "'");
    }
  }
}

Lexicon Lexicon::DefaultEnds() {
  std::vector<LexiconEntry> entries = FoldEntries(
      {"e-cig", "e-cigs", "ecig", "ecigs", "e cig", "e cigs", "e-cigarette",
       "e-cigarettes", "electronic cigarette", "electronic cigarettes", "e-pen",
       "e-pens", "vape", "vapes", "vaper", "vapers", "vaping", "vaporizer",
       "vaporizers", "vaporiser", "vaporisers"});
  for (const char* acronym : {"EC", "ECs", "ENDS"}) {
    entries.push_back({acronym, CaseMode::kExact});
  }
  return Lexicon("ends", std::move(entries));
}

Lexicon Lexicon::DefaultEvidence() {
  return Lexicon("evidence",
                 FoldEntries({"evidence", "study", "studies", "research",
                              "report", "reports", "finding", "findings",
                              "analysis", "analyses", "literature", "data",
                              "survey", "surveys"}));
}

Lexicon Lexicon::Parse(std::string name, std::string_view text) {
  std::vector<LexiconEntry> entries;
  for (std::string_view line : SplitLines(text)) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (TrimAscii(line).empty() || TrimAscii(line).front() == '#') continue;
    LexiconEntry entry;
    const std::size_t tab = line.find('\t');
    if (tab != std::string_view::npos) {
      const std::string_view mode = TrimAscii(line.substr(tab + 1));
      if (mode == "exact") {
        entry.case_mode = CaseMode::kExact;
      } else if (mode != "fold" && !mode.empty()) {
        throw Error(ErrorCode::kParse, "lexicon '" + name +
                                           "': unknown case mode '" +
                                           std::string(mode) + "'");
      }
      line = line.substr(0, tab);
    }
    entry.phrase = std::string(TrimAscii(line));
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(name), std::move(entries));
}

Lexicon Lexicon::FromFile(const std::filesystem::path& path) {
  return Parse(path.stem().string(), ReadFile(path));
}

std::vector<TermMatch> FindMatches(std::string_view sentence_text,
                                   const Lexicon& lexicon) {
  std::vector<std::pair<std::size_t, std::size_t>> byte_spans;
  std::vector<const std::string*> phrases;
  for (const LexiconEntry& entry : lexicon.entries()) {
    const std::size_t n = entry.phrase.size();
    if (n > sentence_text.size()) continue;
    for (std::size_t pos = 0; pos + n <= sentence_text.size(); ++pos) {
      if (!PhraseMatchesAt(sentence_text, pos, entry)) continue;
      const bool left_ok = pos == 0 || !IsAsciiAlnum(sentence_text[pos - 1]);
      const bool right_ok = pos + n == sentence_text.size() ||
                            !IsAsciiAlnum(sentence_text[pos + n]);
      if (left_ok && right_ok) {
        byte_spans.emplace_back(pos, pos + n);
        phrases.push_back(&entry.phrase);
      }
    }
  }
  const CodepointIndex index(sentence_text);
  std::vector<TermMatch> matches;
  matches.reserve(byte_spans.size());
  for (std::size_t i = 0; i < byte_spans.size(); ++i) {
    matches.push_back({*phrases[i], index.ToCodepoint(byte_spans[i].first),
                       index.ToCodepoint(byte_spans[i].second)});
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const TermMatch& a, const TermMatch& b) {
                     return a.start != b.start ? a.start < b.start
                                               : a.end < b.end;
                   });
  return matches;
}

std::optional<EvidenceSentence> IsEvidence(const Sentence& sentence,
                                           const Lexicon& ends_lexicon,
                                           const Lexicon& evidence_lexicon) {
  std::vector<TermMatch> ends = FindMatches(sentence.text, ends_lexicon);
  if (ends.empty()) return std::nullopt;
  std::vector<TermMatch> evidence = FindMatches(sentence.text, evidence_lexicon);
  if (evidence.empty()) return std::nullopt;
  return EvidenceSentence{sentence, std::move(ends), std::move(evidence)};
}

std::vector<EvidenceSentence> FilterEvidence(
    const std::vector<Sentence>& sentences, const Lexicon& ends_lexicon,
    const Lexicon& evidence_lexicon) {
  std::vector<EvidenceSentence> out;
  for (const Sentence& s : sentences) {
    if (auto ev = IsEvidence(s, ends_lexicon, evidence_lexicon)) {
      out.push_back(std::move(*ev));
    }
  }
  return out;
}

}  // namespace stancelab
