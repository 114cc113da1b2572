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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stancelab/backend.hpp"
#include "stancelab/completion_cache.hpp"
#include "stancelab/evidence_filter.hpp"
#include "stancelab/label.hpp"

namespace stancelab {

struct Failed {
  std::string reason;
  bool operator==(const Failed&) const = default;
};

struct ClassificationRecord {
  std::string sentence_id;
  std::string model_id;
  std::string prompt_hash;
  std::string raw_response;
  std::string reasoning;
  std::variant<Label, Failed> outcome = Failed{};
  int attempts = 0;
  std::string timestamp;

  bool labeled() const { return std::holds_alternative<Label>(outcome); }
  std::optional<Label> label() const {
    if (const Label* l = std::get_if<Label>(&outcome)) return *l;
    return std::nullopt;
  }
};

// One sentence, at most retry_limit + 1 attempts. Backend failures and
// malformed responses are recorded in the outcome, never thrown. When a
// cache is given it is consulted first and every fresh completion is
// appended to it; CacheWriteFailure does propagate.
ClassificationRecord ClassifySentence(const EvidenceSentence& sentence,
                                      Backend& backend,
                                      const DecodingParams& params,
                                      int retry_limit,
                                      CompletionCache* cache = nullptr);

struct ClassifyOptions {
  int retry_limit = 3;
  int concurrency_limit = 4;
};

// Records come back in input order. At most concurrency_limit completions
// are in flight.
std::vector<ClassificationRecord> ClassifyCorpus(
    const std::vector<EvidenceSentence>& sentences, Backend& backend,
    const DecodingParams& params, CompletionCache& cache,
    const ClassifyOptions& options = {});

}  // namespace stancelab
