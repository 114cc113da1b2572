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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stancelab {

enum class Country { kAU, kUK };
enum class CorpusKind { kErku, kInquirySubmission, kInquiryTranscript };
enum class OrgCategory {
  kGovernment,
  kCharity,
  kProfessionalBody,
  kResearchGroup,
  kOther,
};

std::string_view CountryToken(Country country);
std::string_view CorpusKindToken(CorpusKind kind);
std::string_view OrgCategoryToken(OrgCategory category);
std::optional<Country> ParseCountry(std::string_view token);
std::optional<CorpusKind> ParseCorpusKind(std::string_view token);
std::optional<OrgCategory> ParseOrgCategory(std::string_view token);

inline constexpr Country kAllCountries[] = {Country::kAU, Country::kUK};
inline constexpr CorpusKind kAllCorpusKinds[] = {
    CorpusKind::kErku, CorpusKind::kInquirySubmission,
    CorpusKind::kInquiryTranscript};

struct DocumentMeta {
  std::string id;
  Country country = Country::kAU;
  CorpusKind corpus_kind = CorpusKind::kErku;
  std::string org_name;
  OrgCategory org_category = OrgCategory::kOther;
  std::string source_path;  // as written in the manifest

  bool operator==(const DocumentMeta&) const = default;
};

struct Document {
  DocumentMeta meta;
  std::string text;  // canonical: LF line endings only, non-empty
};

enum class TurnRole { kWitness, kQuestioner };

struct TranscriptTurn {
  TurnRole role = TurnRole::kWitness;
  std::string speaker;
  std::string utterance;
};

struct CanonicalizeOptions {
  bool strip_references = true;
  bool strip_footnote_markers = true;
};

inline constexpr std::string_view kManifestHeader =
    "id,country,corpus_kind,org_name,org_category,source_path";

// Manifest CSV. Throws MissingFile, ParseError, DuplicateId, InvalidEnum.
std::vector<DocumentMeta> ParseManifest(std::string_view csv_text);
std::vector<DocumentMeta> LoadManifest(const std::filesystem::path& path);
std::string FormatManifest(const std::vector<DocumentMeta>& metas);
void WriteManifest(const std::filesystem::path& path,
                   const std::vector<DocumentMeta>& metas);

// Normalizes line endings, optionally drops footnote markers and a trailing
// reference section, and collapses runs of three or more blank lines into a
// single empty line. Nothing else in the text is altered.
std::string Canonicalize(std::string_view raw,
                         const CanonicalizeOptions& opts = {});

// Transcript turns: one `role<TAB>speaker<TAB>utterance` per line. Blank
// lines are skipped. Throws ParseError on malformed lines.
std::vector<TranscriptTurn> ParseTranscriptTurns(std::string_view text);

// Witness utterances joined by LF in their original order. Throws
// EmptyResult when no witness turn exists.
std::string ExtractWitnessText(const std::vector<TranscriptTurn>& turns);

// Reads and canonicalizes one manifest entry. `source_path` is resolved
// against `base_dir` when relative. Transcript documents whose source file
// ends in ".tsv" are parsed as turns and reduced to witness text first.
Document LoadDocument(const DocumentMeta& meta,
                      const std::filesystem::path& base_dir,
                      const CanonicalizeOptions& opts = {});

}  // namespace stancelab
