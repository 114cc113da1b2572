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

#include "stancelab/annotation.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "stancelab/error.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

namespace {

// Unbiased draw in [0, bound) by rejection.
std::uint64_t BoundedDraw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

AnnotationSession::AnnotationSession(std::string session_id,
                                     std::string annotator_id,
                                     std::vector<std::string> items)
    : session_id_(std::move(session_id)),
      annotator_id_(std::move(annotator_id)),
      items_(std::move(items)) {
  std::unordered_set<std::string> seen;
  for (const std::string& item : items_) {
    if (!seen.insert(item).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "session '" + session_id_ + "' lists item '" + item +
                      "' twice");
    }
  }
}

bool AnnotationSession::contains(const std::string& sentence_id) const {
  return std::find(items_.begin(), items_.end(), sentence_id) != items_.end();
}

std::optional<std::string> AnnotationSession::next_unlabeled() const {
  for (const std::string& item : items_) {
    if (!labels_.contains(item)) return item;
  }
  return std::nullopt;
}

AnnotationSession AnnotationSession::WithLabel(const std::string& sentence_id,
                                               Label label,
                                               std::string at) const {
  if (!contains(sentence_id)) {
    throw Error(ErrorCode::kUnknownSentence,
                "sentence '" + sentence_id + "' is not in session '" +
                    session_id_ + "'");
  }
  AnnotationSession next = *this;
  next.labels_[sentence_id] = label;
  next.updated_at_ = std::move(at);
  return next;
}

AnnotationSession RecordLabel(const AnnotationSession& session,
                              const std::string& sentence_id, Label label) {
  return session.WithLabel(sentence_id, label, UtcNow());
}

std::vector<std::string> SampleForAnnotation(
    const std::vector<std::string>& sentence_ids, std::size_t n,
    std::uint64_t seed) {
  if (n > sentence_ids.size()) {
    throw Error(ErrorCode::kSampleTooLarge,
                "cannot sample " + std::to_string(n) + " of " +
                    std::to_string(sentence_ids.size()) + " sentences");
  }
  std::vector<std::string> pool = sentence_ids;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(BoundedDraw(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

std::vector<std::string> SampleForAnnotation(
    const std::vector<EvidenceSentence>& sentences, std::size_t n,
    std::uint64_t seed) {
  std::vector<std::string> ids;
  ids.reserve(sentences.size());
  for (const EvidenceSentence& s : sentences) ids.push_back(s.sentence.id());
  return SampleForAnnotation(ids, n, seed);
}

AgreementResult CohenKappa(const AnnotationSession& a,
                           const AnnotationSession& b) {
  const std::set<std::string> items_a(a.items().begin(), a.items().end());
  const std::set<std::string> items_b(b.items().begin(), b.items().end());
  if (items_a != items_b) {
    throw Error(ErrorCode::kItemSetMismatch,
                "sessions '" + a.session_id() + "' and '" + b.session_id() +
                    "' cover different items");
  }
  for (const AnnotationSession* s : {&a, &b}) {
    if (!s->complete()) {
      throw Error(ErrorCode::kIncompleteSession,
                  "session '" + s->session_id() + "' has " +
                      std::to_string(s->items().size() - s->labeled_count()) +
                      " unlabelled items");
    }
  }
  if (items_a.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no items to compare");
  }

  AgreementResult result;
  result.n_items = items_a.size();
  for (const std::string& item : items_a) {
    ++result.cross_table[LabelIndex(a.labels().at(item))]
                        [LabelIndex(b.labels().at(item))];
  }
  const auto n = static_cast<std::int64_t>(result.n_items);
  std::int64_t agree = 0;
  std::int64_t chance = 0;  // sum over labels of marginal_a * marginal_b
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    agree += result.cross_table[c][c];
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      row += result.cross_table[c][k];
      col += result.cross_table[k][c];
    }
    chance += row * col;
  }
  result.observed_agreement =
      static_cast<double>(agree) / static_cast<double>(n);
  result.expected_agreement =
      static_cast<double>(chance) / static_cast<double>(n * n);
  if (chance == n * n) {
    if (agree != n) {
      throw Error(ErrorCode::kDegenerateMarginals,
                  "chance agreement is 1 but observed agreement is not");
    }
    result.kappa = 1.0;
    return result;
  }
  // (p_o - p_e) / (1 - p_e), scaled by n^2 to stay in integers.
  result.kappa = static_cast<double>(n * agree - chance) /
                 static_cast<double>(n * n - chance);
  return result;
}

std::map<std::string, Label> BuildGold(const AnnotationSession& a,
                                       const AnnotationSession& b,
                                       const AnnotationSession* adjudication) {
  CohenKappa(a, b);  // same item set, both complete
  std::map<std::string, Label> gold;
  for (const std::string& item : a.items()) {
    const Label la = a.labels().at(item);
    const Label lb = b.labels().at(item);
    if (la == lb) {
      gold[item] = la;
      continue;
    }
    if (adjudication != nullptr) {
      auto it = adjudication->labels().find(item);
      if (it != adjudication->labels().end()) {
        gold[item] = it->second;
        continue;
      }
    }
    throw Error(ErrorCode::kIncompleteSession,
                "disagreement on '" + item + "' has no adjudicated label");
  }
  return gold;
}

std::string FormatLabelEvent(const LabelEvent& event) {
  // Field order is part of the log format.
  nlohmann::ordered_json j;
  j["session_id"] = event.session_id;
  j["annotator_id"] = event.annotator_id;
  j["sentence_id"] = event.sentence_id;
  j["label"] = std::string(LabelToken(event.label));
  j["at"] = event.at;
  return j.dump();
}

LabelEvent ParseLabelEvent(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    LabelEvent event;
    event.session_id = j.at("session_id").get<std::string>();
    event.annotator_id = j.at("annotator_id").get<std::string>();
    event.sentence_id = j.at("sentence_id").get<std::string>();
    const std::string token = j.at("label").get<std::string>();
    auto label = ParseLabelToken(token);
    if (!label) {
      throw Error(ErrorCode::kInvalidEnum, "unknown label '" + token + "'");
    }
    event.label = *label;
    event.at = j.value("at", std::string());
    return event;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("label event: ") + e.what());
  }
}

void ApplyEvents(std::map<std::string, AnnotationSession>& sessions,
                 const std::vector<LabelEvent>& events) {
  for (const LabelEvent& event : events) {
    auto it = sessions.find(event.session_id);
    if (it == sessions.end()) {
      throw Error(ErrorCode::kUnknownSession,
                  "event for unknown session '" + event.session_id + "'");
    }
    it->second = it->second.WithLabel(event.sentence_id, event.label, event.at);
  }
}

SessionEventLog::SessionEventLog(std::filesystem::path path)
    : path_(std::move(path)) {}

std::vector<LabelEvent> SessionEventLog::ReadAll() const {
  std::lock_guard lock(mu_);
  std::vector<LabelEvent> events;
  if (!std::filesystem::exists(path_)) return events;
  const std::string content = ReadFile(path_);
  for (std::string_view line : SplitLines(content)) {
    if (TrimAscii(line).empty()) continue;
    events.push_back(ParseLabelEvent(line));
  }
  return events;
}

void SessionEventLog::Append(const LabelEvent& event) {
  std::lock_guard lock(mu_);
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  // One write per event so a line is never interleaved with another.
  const std::string line = FormatLabelEvent(event) + "\n";
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kMissingFile,
                "cannot append to session log " + path_.string());
  }
}

}  // namespace stancelab
