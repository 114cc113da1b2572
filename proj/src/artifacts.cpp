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

#include "stancelab/artifacts.hpp"

#include <json.hpp>

#include "stancelab/error.hpp"

namespace stancelab {

namespace {

using ojson = nlohmann::ordered_json;

template <typename T>
T Get(const nlohmann::json& j, const char* key) {
  return j.at(key).get<T>();
}

template <typename Enum>
Enum Require(std::optional<Enum> value, std::string_view what,
             const std::string& token) {
  if (!value) {
    throw Error(ErrorCode::kInvalidEnum,
                "unknown " + std::string(what) + " '" + token + "'");
  }
  return *value;
}

ojson SentenceJson(const Sentence& s) {
  ojson j;
  j["id"] = s.id();
  j["doc_id"] = s.doc_id;
  j["index"] = s.index;
  j["start"] = s.start;
  j["end"] = s.end;
  j["text"] = s.text;
  return j;
}

Sentence SentenceFrom(const nlohmann::json& j) {
  Sentence s;
  s.doc_id = Get<std::string>(j, "doc_id");
  s.index = Get<std::size_t>(j, "index");
  s.start = Get<std::size_t>(j, "start");
  s.end = Get<std::size_t>(j, "end");
  s.text = Get<std::string>(j, "text");
  if (j.contains("id") && Get<std::string>(j, "id") != s.id()) {
    throw Error(ErrorCode::kParse, "sentence id '" + Get<std::string>(j, "id") +
                                       "' does not match doc_id#index");
  }
  return s;
}

ojson MatchesJson(const std::vector<TermMatch>& matches) {
  ojson arr = ojson::array();
  for (const TermMatch& m : matches) {
    ojson j;
    j["phrase"] = m.phrase;
    j["start"] = m.start;
    j["end"] = m.end;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<TermMatch> MatchesFrom(const nlohmann::json& arr) {
  std::vector<TermMatch> out;
  for (const auto& j : arr) {
    out.push_back({Get<std::string>(j, "phrase"), Get<std::size_t>(j, "start"),
                   Get<std::size_t>(j, "end")});
  }
  return out;
}

nlohmann::json ParseJson(std::string_view line) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

template <typename F>
auto Guard(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace

std::string FormatDocument(const Document& doc) {
  ojson j;
  j["id"] = doc.meta.id;
  j["country"] = std::string(CountryToken(doc.meta.country));
  j["corpus_kind"] = std::string(CorpusKindToken(doc.meta.corpus_kind));
  j["org_name"] = doc.meta.org_name;
  j["org_category"] = std::string(OrgCategoryToken(doc.meta.org_category));
  j["source_path"] = doc.meta.source_path;
  j["text"] = doc.text;
  return j.dump();
}

Document ParseDocument(std::string_view line) {
  const auto j = ParseJson(line);
  return Guard([&] {
    Document doc;
    doc.meta.id = Get<std::string>(j, "id");
    const auto country = Get<std::string>(j, "country");
    doc.meta.country = Require(ParseCountry(country), "country", country);
    const auto kind = Get<std::string>(j, "corpus_kind");
    doc.meta.corpus_kind = Require(ParseCorpusKind(kind), "corpus_kind", kind);
    doc.meta.org_name = Get<std::string>(j, "org_name");
    const auto category = Get<std::string>(j, "org_category");
    doc.meta.org_category =
        Require(ParseOrgCategory(category), "org_category", category);
    doc.meta.source_path = Get<std::string>(j, "source_path");
    doc.text = Get<std::string>(j, "text");
    return doc;
  });
}

std::string FormatSentence(const Sentence& sentence) {
  return SentenceJson(sentence).dump();
}

Sentence ParseSentence(std::string_view line) {
  const auto j = ParseJson(line);
  return Guard([&] { return SentenceFrom(j); });
}

std::string FormatEvidence(const EvidenceSentence& evidence) {
  ojson j = SentenceJson(evidence.sentence);
  j["ends_matches"] = MatchesJson(evidence.ends_matches);
  j["evidence_matches"] = MatchesJson(evidence.evidence_matches);
  return j.dump();
}

EvidenceSentence ParseEvidence(std::string_view line) {
  const auto j = ParseJson(line);
  return Guard([&] {
    EvidenceSentence ev;
    ev.sentence = SentenceFrom(j);
    ev.ends_matches = MatchesFrom(j.at("ends_matches"));
    ev.evidence_matches = MatchesFrom(j.at("evidence_matches"));
    if (ev.ends_matches.empty() || ev.evidence_matches.empty()) {
      throw Error(ErrorCode::kParse,
                  "evidence sentence needs both ENDS and evidence matches");
    }
    return ev;
  });
}

std::string FormatRecord(const ClassificationRecord& record) {
  ojson j;
  j["sentence_id"] = record.sentence_id;
  j["model_id"] = record.model_id;
  j["prompt_hash"] = record.prompt_hash;
  if (const auto label = record.label()) {
    j["outcome"] = "labeled";
    j["label"] = std::string(LabelToken(*label));
    j["failure_reason"] = nullptr;
  } else {
    j["outcome"] = "failed";
    j["label"] = nullptr;
    j["failure_reason"] = std::get<Failed>(record.outcome).reason;
  }
  j["attempts"] = record.attempts;
  j["reasoning"] = record.reasoning;
  j["raw_response"] = record.raw_response;
  // Completions are external input; invalid UTF-8 is replaced, not fatal.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

ClassificationRecord ParseRecord(std::string_view line) {
  const auto j = ParseJson(line);
  return Guard([&] {
    ClassificationRecord r;
    r.sentence_id = Get<std::string>(j, "sentence_id");
    r.model_id = Get<std::string>(j, "model_id");
    r.prompt_hash = Get<std::string>(j, "prompt_hash");
    const auto outcome = Get<std::string>(j, "outcome");
    if (outcome == "labeled") {
      const auto token = Get<std::string>(j, "label");
      r.outcome = Require(ParseLabelToken(token), "label", token);
    } else if (outcome == "failed") {
      r.outcome = Failed{j.value("failure_reason", std::string())};
    } else {
      throw Error(ErrorCode::kInvalidEnum, "unknown outcome '" + outcome + "'");
    }
    r.attempts = Get<int>(j, "attempts");
    r.reasoning = j.value("reasoning", std::string());
    r.raw_response = j.value("raw_response", std::string());
    r.timestamp = j.value("timestamp", std::string());
    return r;
  });
}

std::string FormatRecordTimestamp(const ClassificationRecord& record) {
  ojson j;
  j["sentence_id"] = record.sentence_id;
  j["timestamp"] = record.timestamp;
  return j.dump();
}

void WriteJsonl(const std::filesystem::path& path,
                const std::vector<std::string>& lines) {
  std::string content;
  for (const std::string& line : lines) {
    content += line;
    content.push_back('\n');
  }
  WriteFile(path, content);
}

std::vector<std::string_view> NonBlankLines(std::string_view content) {
  std::vector<std::string_view> out;
  for (std::string_view line : SplitLines(content)) {
    if (!TrimAscii(line).empty()) out.push_back(line);
  }
  return out;
}

void ThrowAtLine(const std::filesystem::path& path, std::size_t line_no,
                 const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  throw Error(err ? err->code() : ErrorCode::kParse,
              path.filename().string() + " line " + std::to_string(line_no) +
                  ": " + e.what());
}

}  // namespace stancelab
