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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stancelab/backend.hpp"
#include "stancelab/corpus.hpp"

namespace stancelab {

enum class BackendKind { kLive, kReplay, kScripted };

struct SessionSpec {
  std::string session_id;
  std::string annotator_id;
};

struct PipelineConfig {
  std::filesystem::path manifest_path;
  std::filesystem::path work_dir;
  std::optional<std::filesystem::path> ends_lexicon_path;
  std::optional<std::filesystem::path> evidence_lexicon_path;
  std::optional<std::filesystem::path> abbreviations_path;
  CanonicalizeOptions canonicalize;

  DecodingParams decoding;
  int retry_limit = 3;
  int concurrency_limit = 4;
  std::uint64_t seed = 0;
  BackendKind backend = BackendKind::kReplay;
  std::optional<std::filesystem::path> scripted_fixture_path;
  std::optional<std::filesystem::path> cache_path;  // default work_dir/cache.jsonl
  std::chrono::milliseconds live_backoff_base{1000};
  std::chrono::seconds live_timeout{60};

  bool yates_correction = false;

  std::size_t annotation_sample_size = 200;
  std::vector<SessionSpec> sessions = {{"a", "annotator_a"},
                                       {"b", "annotator_b"},
                                       {"adjudication", "adjudicator"}};
  std::string server_host = "127.0.0.1";
  int server_port = 8750;
  std::optional<std::filesystem::path> static_dir;

  std::string agree_a = "a";
  std::string agree_b = "b";
  std::string evaluate_a = "a";
  std::string evaluate_b = "b";
  std::optional<std::string> evaluate_adjudication = "adjudication";

  std::filesystem::path cache_file() const;

  // Throws InvalidConfig.
  void Validate() const;
};

// `key = value` lines; '#' starts a comment line. Throws InvalidConfig on
// malformed lines or repeated keys.
std::map<std::string, std::string> ParseKeyValues(std::string_view text);

// Applies key/value settings onto `config`, resolving relative paths against
// `base_dir`. Unknown keys throw InvalidConfig.
void ApplySettings(PipelineConfig& config,
                   const std::map<std::string, std::string>& settings,
                   const std::filesystem::path& base_dir);

// Reads `path` (relative paths resolve against its directory), then applies
// each "key=value" override (relative paths resolve against the current
// directory), then validates.
PipelineConfig LoadConfig(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides = {});

}  // namespace stancelab
