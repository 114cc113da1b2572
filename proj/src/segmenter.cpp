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

#include "stancelab/segmenter.hpp"

#include <utility>

#include "stancelab/text_util.hpp"

namespace stancelab {

namespace {

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Length of a closing quote or bracket at `i`, or 0.
std::size_t ClosingLength(std::string_view s, std::size_t i) {
  if (i >= s.size()) return 0;
  const char c = s[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+201D right double quote, U+2019 right single quote.
  if (s.substr(i, 3) == "\xE2\x80\x9D" || s.substr(i, 3) == "\xE2\x80\x99") {
    return 3;
  }
  return 0;
}

bool StartsWithOpeningQuote(std::string_view s) {
  return s.starts_with('"') || s.starts_with('\'') ||
         s.starts_with("\xE2\x80\x9C") ||  // U+201C
         s.starts_with("\xE2\x80\x98");    // U+2018
}

bool IsEllipsisAt(std::string_view s, std::size_t i) {
  return s.substr(i, 3) == "\xE2\x80\xA6";  // U+2026
}

bool IsWordChar(char c) {
  return IsAsciiAlnum(c) || (static_cast<unsigned char>(c) & 0x80) != 0;
}

// Byte ranges of blank-line-separated blocks.
std::vector<std::pair<std::size_t, std::size_t>> Blocks(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t block_start = 0;
  std::size_t line_start = 0;
  bool in_block = false;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    const std::size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    const bool blank =
        TrimAscii(text.substr(line_start, line_end - line_start)).empty();
    if (blank) {
      if (in_block) blocks.emplace_back(block_start, line_start);
      in_block = false;
    } else if (!in_block) {
      block_start = line_start;
      in_block = true;
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  if (in_block) blocks.emplace_back(block_start, text.size());
  return blocks;
}

}  // namespace

std::string MakeSentenceId(std::string_view doc_id, std::size_t index) {
  std::string id(doc_id);
  id.push_back('#');
  id += std::to_string(index);
  return id;
}

std::string Sentence::id() const { return MakeSentenceId(doc_id, index); }

const std::vector<std::string>& Segmenter::DefaultAbbreviations() {
  static const std::vector<std::string> kDefaults = {
      "e.g.",  "i.e.",  "et al.", "etc.",  "vs.",   "cf.",  "Dr.",
      "Mr.",   "Mrs.",  "Ms.",    "Prof.", "No.",   "Fig.", "Eq.",
      "approx.", "Jan.", "Feb.",  "Mar.",  "Apr.",  "Jun.", "Jul.",
      "Aug.",  "Sep.",  "Sept.",  "Oct.",  "Nov.",  "Dec."};
  return kDefaults;
}

Segmenter::Segmenter() : abbreviations_(DefaultAbbreviations()) {}

Segmenter::Segmenter(std::vector<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

std::vector<std::string> Segmenter::ParseAbbreviations(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view line : SplitLines(text)) {
    line = TrimAscii(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(line);
  }
  return out;
}

Segmenter Segmenter::FromFile(const std::filesystem::path& path) {
  return Segmenter(ParseAbbreviations(ReadFile(path)));
}

bool Segmenter::EndsWithAbbreviation(std::string_view text,
                                     std::size_t dot) const {
  const std::string_view prefix = text.substr(0, dot + 1);
  for (const std::string& abbr : abbreviations_) {
    if (abbr.size() > prefix.size()) continue;
    const std::size_t begin = prefix.size() - abbr.size();
    const std::string_view candidate = prefix.substr(begin);
    bool match = candidate == abbr;
    // A sentence-initial "E.g." is the same abbreviation as "e.g.".
    if (!match && IsAsciiLower(abbr.front()) &&
        candidate.front() == static_cast<char>(abbr.front() - 'a' + 'A')) {
      match = candidate.substr(1) == std::string_view(abbr).substr(1);
    }
    if (match && (begin == 0 || !IsWordChar(prefix[begin - 1]))) return true;
  }
  return false;
}

bool Segmenter::IsBoundary(std::string_view text, std::size_t terminator_begin,
                           std::size_t terminator_end,
                           std::size_t next) const {
  const std::string_view run =
      text.substr(terminator_begin, terminator_end - terminator_begin);
  if (run.find("..") != std::string_view::npos) return false;
  if (run == "." || run.back() == '.') {
    const std::size_t dot = terminator_end - 1;
    if (run.size() == 1) {
      if (EndsWithAbbreviation(text, dot)) return false;
      // Single capital initial such as "J."
      if (dot >= 1 && IsAsciiUpper(text[dot - 1]) &&
          (dot == 1 || !IsWordChar(text[dot - 2]))) {
        return false;
      }
    }
  }
  const std::string_view rest = text.substr(next);
  if (rest.empty()) return true;
  return IsAsciiUpper(rest.front()) || IsAsciiDigit(rest.front()) ||
         StartsWithOpeningQuote(rest);
}

std::vector<Sentence> Segmenter::Segment(const Document& doc) const {
  return Segment(doc.meta.id, doc.text);
}

std::vector<Sentence> Segmenter::Segment(std::string_view doc_id,
                                         std::string_view text) const {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  auto push_span = [&](std::size_t begin, std::size_t end) {
    while (begin < end && IsAsciiSpace(text[begin])) ++begin;
    while (end > begin && IsAsciiSpace(text[end - 1])) --end;
    if (begin < end) spans.emplace_back(begin, end);
  };

  for (const auto& [block_begin, block_end] : Blocks(text)) {
    const std::string_view block = text.substr(0, block_end);
    std::size_t sentence_begin = block_begin;
    std::size_t i = block_begin;
    while (i < block_end) {
      if (IsEllipsisAt(block, i)) {
        i += 3;
        continue;
      }
      if (!IsTerminator(block[i])) {
        ++i;
        continue;
      }
      std::size_t run_end = i;
      while (run_end < block_end && IsTerminator(block[run_end])) ++run_end;
      std::size_t after = run_end;
      while (std::size_t len = ClosingLength(block, after)) after += len;
      if (after < block_end && !IsAsciiSpace(block[after])) {
        i = run_end;
        continue;
      }
      std::size_t next = after;
      while (next < block_end && IsAsciiSpace(block[next])) ++next;
      if (IsBoundary(block, i, run_end, next)) {
        push_span(sentence_begin, after);
        sentence_begin = after;
      }
      i = next > run_end ? next : run_end;
    }
    push_span(sentence_begin, block_end);
  }

  std::vector<Sentence> sentences;
  sentences.reserve(spans.size());
  const CodepointIndex index(text);
  for (const auto& [begin, end] : spans) {
    Sentence s;
    s.doc_id = std::string(doc_id);
    s.index = sentences.size();
    s.text = std::string(text.substr(begin, end - begin));
    s.start = index.ToCodepoint(begin);
    s.end = index.ToCodepoint(end);
    sentences.push_back(std::move(s));
  }
  return sentences;
}

}  // namespace stancelab
