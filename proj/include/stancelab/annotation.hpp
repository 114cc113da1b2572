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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stancelab/evidence_filter.hpp"
#include "stancelab/label.hpp"

namespace stancelab {

class AnnotationSession {
 public:
  AnnotationSession() = default;
  // Throws InvalidArgument on duplicate items.
  AnnotationSession(std::string session_id, std::string annotator_id,
                    std::vector<std::string> items);

  const std::string& session_id() const { return session_id_; }
  const std::string& annotator_id() const { return annotator_id_; }
  const std::vector<std::string>& items() const { return items_; }
  const std::map<std::string, Label>& labels() const { return labels_; }
  const std::string& updated_at() const { return updated_at_; }

  bool contains(const std::string& sentence_id) const;
  std::size_t labeled_count() const { return labels_.size(); }
  bool complete() const { return labels_.size() == items_.size(); }
  // First item in session order without a label.
  std::optional<std::string> next_unlabeled() const;

  // Overwrites any earlier label for the item. Throws UnknownSentence.
  AnnotationSession WithLabel(const std::string& sentence_id, Label label,
                              std::string at) const;

 private:
  std::string session_id_;
  std::string annotator_id_;
  std::vector<std::string> items_;
  std::map<std::string, Label> labels_;
  std::string updated_at_;
};

// Value-semantics update stamped with the current time.
AnnotationSession RecordLabel(const AnnotationSession& session,
                              const std::string& sentence_id, Label label);

// Uniform sample without replacement in sampled order; deterministic in
// `seed`. Throws SampleTooLarge when n exceeds the population.
std::vector<std::string> SampleForAnnotation(
    const std::vector<std::string>& sentence_ids, std::size_t n,
    std::uint64_t seed);
std::vector<std::string> SampleForAnnotation(
    const std::vector<EvidenceSentence>& sentences, std::size_t n,
    std::uint64_t seed);

using CrossTable = std::array<std::array<std::int64_t, kNumLabels>, kNumLabels>;

struct AgreementResult {
  double kappa = 0.0;
  double observed_agreement = 0.0;
  double expected_agreement = 0.0;
  std::size_t n_items = 0;
  CrossTable cross_table{};  // rows: annotator A, columns: annotator B
};

// Cohen's kappa over two fully labelled sessions sharing one item set.
// Throws ItemSetMismatch, IncompleteSession, DegenerateMarginals.
AgreementResult CohenKappa(const AnnotationSession& a,
                           const AnnotationSession& b);

// Gold labels: items both annotators agree on, plus the adjudicator's label
// for each disagreement. Throws IncompleteSession when a disagreement is not
// adjudicated.
std::map<std::string, Label> BuildGold(
    const AnnotationSession& a, const AnnotationSession& b,
    const AnnotationSession* adjudication = nullptr);

struct LabelEvent {
  std::string session_id;
  std::string annotator_id;
  std::string sentence_id;
  Label label = Label::kNeither;
  std::string at;

  bool operator==(const LabelEvent&) const = default;
};

std::string FormatLabelEvent(const LabelEvent& event);
LabelEvent ParseLabelEvent(std::string_view line);

// Applies events in order (last write wins per sentence). Events for a
// session not in `sessions` throw UnknownSession.
void ApplyEvents(std::map<std::string, AnnotationSession>& sessions,
                 const std::vector<LabelEvent>& events);

// Append-only JSON-lines log of label events with a single writer.
class SessionEventLog {
 public:
  explicit SessionEventLog(std::filesystem::path path);

  std::vector<LabelEvent> ReadAll() const;
  void Append(const LabelEvent& event);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
};

}  // namespace stancelab
