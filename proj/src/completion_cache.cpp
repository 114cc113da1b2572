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

#include "stancelab/completion_cache.hpp"

#include <json.hpp>

#include "stancelab/error.hpp"
#include "stancelab/prompt.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

CompletionCache::CompletionCache(const std::filesystem::path& path)
    : path_(path) {
  if (std::filesystem::is_regular_file(path)) {
    const std::string content = ReadFile(path);
    const std::vector<std::string_view> lines = SplitLines(content);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (TrimAscii(lines[i]).empty()) continue;
      try {
        const auto j = nlohmann::json::parse(lines[i]);
        Index({j.at("prompt_hash").get<std::string>(),
               j.at("model_id").get<std::string>(),
               j.at("raw_response").get<std::string>(),
               j.value("created_at", std::string())});
      } catch (const nlohmann::json::exception& e) {
        if (i + 1 == lines.size() && !content.ends_with('\n')) break;
        throw Error(ErrorCode::kParse, "cache " + path.string() + " line " +
                                           std::to_string(i + 1) + ": " +
                                           e.what());
      }
    }
  }
  out_.open(path, std::ios::binary | std::ios::app);
  if (!out_) {
    throw Error(ErrorCode::kCacheWriteFailure,
                "cannot open cache for append: " + path.string());
  }
}

void CompletionCache::Index(CacheEntry entry) {
  responses_[{std::move(entry.prompt_hash), std::move(entry.model_id)}]
      .push_back(std::move(entry.raw_response));
  ++count_;
}

std::optional<std::string> CompletionCache::Lookup(
    const std::string& prompt_hash, const std::string& model_id) const {
  std::lock_guard lock(mu_);
  auto it = responses_.find({prompt_hash, model_id});
  if (it == responses_.end()) return std::nullopt;
  for (auto r = it->second.rbegin(); r != it->second.rend(); ++r) {
    try {
      ParseResponse(*r);
      return *r;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

void CompletionCache::Append(CacheEntry entry) {
  std::lock_guard lock(mu_);
  if (path_) {
    const nlohmann::json j = {{"prompt_hash", entry.prompt_hash},
                              {"model_id", entry.model_id},
                              {"raw_response", entry.raw_response},
                              {"created_at", entry.created_at}};
    out_ << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
         << '\n';
    out_.flush();
    if (!out_) {
      throw Error(ErrorCode::kCacheWriteFailure,
                  "failed to append to cache " + path_->string());
    }
  }
  Index(std::move(entry));
}

std::size_t CompletionCache::size() const {
  std::lock_guard lock(mu_);
  return count_;
}

}  // namespace stancelab
