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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stancelab/classifier.hpp"
#include "stancelab/corpus.hpp"
#include "stancelab/evidence_filter.hpp"
#include "stancelab/segmenter.hpp"

namespace stancelab {

// One JSON object per line, keys in a fixed order so equal values always
// serialize to equal bytes.
std::string FormatDocument(const Document& doc);
Document ParseDocument(std::string_view line);

std::string FormatSentence(const Sentence& sentence);
Sentence ParseSentence(std::string_view line);

std::string FormatEvidence(const EvidenceSentence& evidence);
EvidenceSentence ParseEvidence(std::string_view line);

// Timestamps are not part of this line; see FormatRecordTimestamp.
std::string FormatRecord(const ClassificationRecord& record);
ClassificationRecord ParseRecord(std::string_view line);
std::string FormatRecordTimestamp(const ClassificationRecord& record);

void WriteJsonl(const std::filesystem::path& path,
                const std::vector<std::string>& lines);

// Parses each non-blank line with `parse`; errors carry the line number.
template <typename Parse>
auto ReadJsonl(const std::filesystem::path& path, Parse parse)
    -> std::vector<decltype(parse(std::string_view()))>;

std::vector<std::string_view> NonBlankLines(std::string_view content);
[[noreturn]] void ThrowAtLine(const std::filesystem::path& path,
                              std::size_t line_no, const std::exception& e);

}  // namespace stancelab

#include "stancelab/text_util.hpp"

template <typename Parse>
auto stancelab::ReadJsonl(const std::filesystem::path& path, Parse parse)
    -> std::vector<decltype(parse(std::string_view()))> {
  const std::string content = ReadFile(path);
  std::vector<decltype(parse(std::string_view()))> out;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    try {
      out.push_back(parse(line));
    } catch (const std::exception& e) {
      ThrowAtLine(path, line_no, e);
    }
  }
  return out;
}
