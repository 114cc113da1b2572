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

#include "stancelab/backend.hpp"

#include <cmath>

#include <json.hpp>

#include "stancelab/completion_cache.hpp"
#include "stancelab/prompt.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

void DecodingParams::Validate() const {
  if (model_id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "model_id must not be empty");
  }
  if (!std::isfinite(temperature) || temperature < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "temperature must be finite and >= 0");
  }
  if (max_tokens < 16) {
    throw Error(ErrorCode::kInvalidArgument, "max_tokens must be >= 16");
  }
}

ScriptedBackend::ScriptedBackend(
    const std::map<std::string, std::string>& responses) {
  for (const auto& [sentence, response] : responses) {
    by_prompt_.emplace(RenderPrompt(sentence), response);
  }
}

ScriptedBackend ScriptedBackend::FromJsonl(std::string_view jsonl) {
  std::map<std::string, std::string> responses;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(jsonl)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      responses[j.at("sentence_text").get<std::string>()] =
          j.at("response_text").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, "scripted fixture line " +
                                         std::to_string(line_no) + ": " +
                                         e.what());
    }
  }
  return ScriptedBackend(responses);
}

ScriptedBackend ScriptedBackend::FromFile(const std::filesystem::path& path) {
  return FromJsonl(ReadFile(path));
}

std::string ScriptedBackend::Complete(std::string_view prompt,
                                      const DecodingParams& /*params*/) {
  calls_.fetch_add(1);
  auto it = by_prompt_.find(prompt);
  if (it == by_prompt_.end()) {
    throw BackendError("no scripted response for prompt", false);
  }
  return it->second;
}

std::string ReplayBackend::Complete(std::string_view prompt,
                                    const DecodingParams& params) {
  if (auto hit = cache_.Lookup(PromptHash(params.model_id, prompt),
                               params.model_id)) {
    return *hit;
  }
  throw BackendError("cache miss", false);
}

}  // namespace stancelab
