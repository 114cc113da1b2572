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
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace stancelab {

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }
inline bool IsAsciiAlnum(char c) { return IsAsciiAlpha(c) || IsAsciiDigit(c); }
inline char ToAsciiLower(char c) {
  return IsAsciiUpper(c) ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string_view TrimAscii(std::string_view s);
std::string ToAsciiLower(std::string_view s);
bool EqualsIgnoreAsciiCase(std::string_view a, std::string_view b);

// Position of the last case-insensitive occurrence of `needle`, or npos.
std::size_t RFindIgnoreAsciiCase(std::string_view haystack,
                                 std::string_view needle,
                                 std::size_t before = std::string_view::npos);

std::vector<std::string_view> SplitLines(std::string_view text);

// Maps UTF-8 byte offsets to code point offsets and back. Offsets exposed by
// the public API (sentence spans, term matches) are code point offsets.
class CodepointIndex {
 public:
  explicit CodepointIndex(std::string_view text);

  std::size_t ToCodepoint(std::size_t byte_offset) const;
  std::size_t ToByte(std::size_t codepoint_offset) const;
  std::size_t size() const { return starts_.size() - 1; }

 private:
  std::vector<std::size_t> starts_;  // byte offset of each code point + end
};

std::size_t CodepointLength(std::string_view text);

// True if text is well-formed UTF-8 (no overlongs, surrogates or values
// above U+10FFFF).
bool IsValidUtf8(std::string_view text);

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::uint64_t Fnv1a64(std::string_view data);
std::string HexU64(std::uint64_t value);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view content);

// RFC 3339 UTC timestamp with millisecond precision, e.g.
// "2026-01-02T03:04:05.678Z".
std::string UtcNow();

}  // namespace stancelab
