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
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stancelab {

struct CacheEntry {
  std::string prompt_hash;
  std::string model_id;
  std::string raw_response;
  std::string created_at;
};

// Append-only JSON-lines store of raw completions keyed by
// (prompt_hash, model_id). Every completion is kept; lookups return the most
// recent one that parses as a labelled response.
class CompletionCache {
 public:
  // In-memory only.
  CompletionCache() = default;

  // Loads `path` if it exists and appends new entries to it. A truncated
  // final line (interrupted write) is ignored; any other bad line throws
  // ParseError.
  explicit CompletionCache(const std::filesystem::path& path);

  CompletionCache(const CompletionCache&) = delete;
  CompletionCache& operator=(const CompletionCache&) = delete;

  std::optional<std::string> Lookup(const std::string& prompt_hash,
                                    const std::string& model_id) const;

  // Persists and flushes before returning. Throws CacheWriteFailure.
  void Append(CacheEntry entry);

  std::size_t size() const;

 private:
  void Index(CacheEntry entry);

  mutable std::mutex mu_;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      responses_;
  std::size_t count_ = 0;
  std::optional<std::filesystem::path> path_;
  std::ofstream out_;
};

}  // namespace stancelab
