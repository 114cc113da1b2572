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

#include "stancelab/corpus.hpp"

#include <array>
#include <unordered_set>
#include <utility>

#include "stancelab/csv.hpp"
#include "stancelab/error.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

namespace {

constexpr std::array<std::pair<Country, std::string_view>, 2> kCountryTokens = {
    {{Country::kAU, "AU"}, {Country::kUK, "UK"}}};

constexpr std::array<std::pair<CorpusKind, std::string_view>, 3>
    kCorpusKindTokens = {{{CorpusKind::kErku, "ERKU"},
                          {CorpusKind::kInquirySubmission, "INQUIRY_SUBMISSION"},
                          {CorpusKind::kInquiryTranscript,
                           "INQUIRY_TRANSCRIPT"}}};

constexpr std::array<std::pair<OrgCategory, std::string_view>, 5>
    kOrgCategoryTokens = {{{OrgCategory::kGovernment, "government"},
                           {OrgCategory::kCharity, "charity"},
                           {OrgCategory::kProfessionalBody, "professional_body"},
                           {OrgCategory::kResearchGroup, "research_group"},
                           {OrgCategory::kOther, "other"}}};

template <typename Enum, std::size_t N>
std::string_view TokenOf(
    const std::array<std::pair<Enum, std::string_view>, N>& table, Enum value) {
  for (const auto& [e, token] : table) {
    if (e == value) return token;
  }
  return {};
}

template <typename Enum, std::size_t N>
std::optional<Enum> EnumOf(
    const std::array<std::pair<Enum, std::string_view>, N>& table,
    std::string_view token) {
  for (const auto& [e, t] : table) {
    if (t == token) return e;
  }
  return std::nullopt;
}

const std::array<std::string_view, 3> kReferenceHeadings = {
    "references", "bibliography", "endnotes"};

bool IsBlank(std::string_view line) { return TrimAscii(line).empty(); }

// Superscript digits as UTF-8: U+00B9, U+00B2, U+00B3, U+2070, U+2074-U+2079.
std::size_t SuperscriptDigitLength(std::string_view s, std::size_t i) {
  auto byte = [&](std::size_t k) {
    return k < s.size() ? static_cast<unsigned char>(s[k]) : 0;
  };
  if (byte(i) == 0xC2 && (byte(i + 1) == 0xB9 || byte(i + 1) == 0xB2 ||
                          byte(i + 1) == 0xB3)) {
    return 2;
  }
  if (byte(i) == 0xE2 && byte(i + 1) == 0x81 &&
      (byte(i + 2) == 0xB0 || (byte(i + 2) >= 0xB4 && byte(i + 2) <= 0xB9))) {
    return 3;
  }
  return 0;
}

// One pass of marker removal; returns true when something was removed.
bool StripFootnoteMarkersOnce(std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool changed = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '[') {
      std::size_t j = i + 1;
      while (j < text.size() && IsAsciiDigit(text[j])) ++j;
      if (j > i + 1 && j < text.size() && text[j] == ']') {
        // "safer [12]." loses the space as well as the marker.
        const bool followed_by_break =
            j + 1 >= text.size() || IsAsciiSpace(text[j + 1]) ||
            text[j + 1] == '.' || text[j + 1] == ',' || text[j + 1] == ';' ||
            text[j + 1] == ':';
        if (followed_by_break && !out.empty() &&
            (out.back() == ' ' || out.back() == '\t') && out.size() >= 2 &&
            !IsAsciiSpace(out[out.size() - 2])) {
          out.pop_back();
        }
        i = j + 1;
        changed = true;
        continue;
      }
    }
    if (std::size_t len = SuperscriptDigitLength(text, i); len > 0) {
      const bool attached = !out.empty() && !IsAsciiSpace(out.back()) &&
                            !IsAsciiDigit(out.back());
      if (attached) {
        std::size_t j = i;
        while (std::size_t l = SuperscriptDigitLength(text, j)) j += l;
        i = j;
        changed = true;
        continue;
      }
    }
    out.push_back(c);
    ++i;
  }
  if (changed) text = std::move(out);
  return changed;
}

std::string StripReferenceSection(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  for (std::size_t n = lines.size(); n-- > 0;) {
    const std::string_view trimmed = TrimAscii(lines[n]);
    for (std::string_view heading : kReferenceHeadings) {
      if (EqualsIgnoreAsciiCase(trimmed, heading)) {
        const std::size_t cut =
            static_cast<std::size_t>(lines[n].data() - text.data());
        std::string_view kept = text.substr(0, cut);
        while (!kept.empty() && IsAsciiSpace(kept.back())) kept.remove_suffix(1);
        return std::string(kept);
      }
    }
  }
  return std::string(text);
}

std::string CollapseBlankRuns(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  bool first = true;
  auto emit = [&](std::string_view line) {
    if (!first) out.push_back('\n');
    out.append(line);
    first = false;
  };
  while (i < lines.size()) {
    if (!IsBlank(lines[i])) {
      emit(lines[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < lines.size() && IsBlank(lines[j])) ++j;
    if (j - i >= 3) {
      emit("");
    } else {
      for (std::size_t k = i; k < j; ++k) emit(lines[k]);
    }
    i = j;
  }
  return out;
}

}  // namespace

std::string_view CountryToken(Country country) {
  return TokenOf(kCountryTokens, country);
}
std::string_view CorpusKindToken(CorpusKind kind) {
  return TokenOf(kCorpusKindTokens, kind);
}
std::string_view OrgCategoryToken(OrgCategory category) {
  return TokenOf(kOrgCategoryTokens, category);
}
std::optional<Country> ParseCountry(std::string_view token) {
  return EnumOf(kCountryTokens, token);
}
std::optional<CorpusKind> ParseCorpusKind(std::string_view token) {
  return EnumOf(kCorpusKindTokens, token);
}
std::optional<OrgCategory> ParseOrgCategory(std::string_view token) {
  return EnumOf(kOrgCategoryTokens, token);
}

std::vector<DocumentMeta> ParseManifest(std::string_view csv_text) {
  if (csv_text.starts_with("\xEF\xBB\xBF")) csv_text.remove_prefix(3);
  const std::vector<csv::Row> rows = csv::Parse(csv_text);
  if (rows.empty()) throw Error(ErrorCode::kParse, "manifest is empty");
  const csv::Row expected_header = {"id",       "country",      "corpus_kind",
                                    "org_name", "org_category", "source_path"};
  if (rows.front() != expected_header) {
    throw Error(ErrorCode::kParse, "manifest header must be: " +
                                       std::string(kManifestHeader));
  }
  std::vector<DocumentMeta> metas;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (row.size() == 1 && TrimAscii(row[0]).empty()) continue;
    const std::string where = "manifest row " + std::to_string(r + 1);
    if (row.size() != expected_header.size()) {
      throw Error(ErrorCode::kParse, where + ": expected 6 fields, got " +
                                         std::to_string(row.size()));
    }
    DocumentMeta meta;
    meta.id = row[0];
    if (meta.id.empty()) throw Error(ErrorCode::kParse, where + ": empty id");
    auto country = ParseCountry(row[1]);
    if (!country) {
      throw Error(ErrorCode::kInvalidEnum, where + ": unknown country '" +
                                               row[1] + "' (expected AU|UK)");
    }
    auto kind = ParseCorpusKind(row[2]);
    if (!kind) {
      throw Error(ErrorCode::kInvalidEnum,
                  where + ": unknown corpus_kind '" + row[2] + "'");
    }
    auto category = ParseOrgCategory(row[4]);
    if (!category) {
      throw Error(ErrorCode::kInvalidEnum,
                  where + ": unknown org_category '" + row[4] + "'");
    }
    meta.country = *country;
    meta.corpus_kind = *kind;
    meta.org_name = row[3];
    meta.org_category = *category;
    meta.source_path = row[5];
    if (meta.source_path.empty()) {
      throw Error(ErrorCode::kParse, where + ": empty source_path");
    }
    if (!seen.insert(meta.id).second) {
      throw Error(ErrorCode::kDuplicateId, where + ": duplicate id '" +
                                               meta.id + "'");
    }
    metas.push_back(std::move(meta));
  }
  return metas;
}

std::vector<DocumentMeta> LoadManifest(const std::filesystem::path& path) {
  return ParseManifest(ReadFile(path));
}

std::string FormatManifest(const std::vector<DocumentMeta>& metas) {
  std::string out(kManifestHeader);
  out.push_back('\n');
  for (const DocumentMeta& m : metas) {
    out += csv::FormatRow({m.id, std::string(CountryToken(m.country)),
                           std::string(CorpusKindToken(m.corpus_kind)),
                           m.org_name,
                           std::string(OrgCategoryToken(m.org_category)),
                           m.source_path});
  }
  return out;
}

void WriteManifest(const std::filesystem::path& path,
                   const std::vector<DocumentMeta>& metas) {
  WriteFile(path, FormatManifest(metas));
}

std::string Canonicalize(std::string_view raw, const CanonicalizeOptions& opts) {
  std::string text;
  text.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      text.push_back('\n');
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      text.push_back(raw[i]);
    }
  }
  if (opts.strip_footnote_markers) {
    while (StripFootnoteMarkersOnce(text)) {
    }
  }
  if (opts.strip_references) text = StripReferenceSection(text);
  return CollapseBlankRuns(text);
}

std::vector<TranscriptTurn> ParseTranscriptTurns(std::string_view text) {
  std::vector<TranscriptTurn> turns;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (TrimAscii(line).empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 =
        t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "transcript line " +
                                         std::to_string(line_no) +
                                         ": expected role<TAB>speaker<TAB>utterance");
    }
    const std::string_view role = line.substr(0, t1);
    TranscriptTurn turn;
    if (role == "witness") {
      turn.role = TurnRole::kWitness;
    } else if (role == "questioner") {
      turn.role = TurnRole::kQuestioner;
    } else {
      throw Error(ErrorCode::kInvalidEnum,
                  "transcript line " + std::to_string(line_no) +
                      ": unknown role '" + std::string(role) + "'");
    }
    turn.speaker = std::string(line.substr(t1 + 1, t2 - t1 - 1));
    turn.utterance = std::string(TrimAscii(line.substr(t2 + 1)));
    if (turn.utterance.empty()) {
      throw Error(ErrorCode::kParse, "transcript line " +
                                         std::to_string(line_no) +
                                         ": empty utterance");
    }
    turns.push_back(std::move(turn));
  }
  return turns;
}

std::string ExtractWitnessText(const std::vector<TranscriptTurn>& turns) {
  std::string out;
  bool any = false;
  for (const TranscriptTurn& turn : turns) {
    if (turn.role != TurnRole::kWitness) continue;
    if (any) out.push_back('\n');
    out += turn.utterance;
    any = true;
  }
  if (!any) {
    throw Error(ErrorCode::kEmptyResult,
                "transcript has no witness turns (mis-tagged roles?)");
  }
  return out;
}

Document LoadDocument(const DocumentMeta& meta,
                      const std::filesystem::path& base_dir,
                      const CanonicalizeOptions& opts) {
  std::filesystem::path source(meta.source_path);
  if (source.is_relative()) source = base_dir / source;
  std::string raw = ReadFile(source);
  if (raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
  if (!IsValidUtf8(raw)) {
    throw Error(ErrorCode::kParse,
                "document '" + meta.id + "' is not valid UTF-8");
  }
  if (meta.corpus_kind == CorpusKind::kInquiryTranscript &&
      source.extension() == ".tsv") {
    raw = ExtractWitnessText(ParseTranscriptTurns(raw));
  }
  Document doc{meta, Canonicalize(raw, opts)};
  if (TrimAscii(doc.text).empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                "document '" + meta.id + "' is empty after canonicalization");
  }
  return doc;
}

}  // namespace stancelab
