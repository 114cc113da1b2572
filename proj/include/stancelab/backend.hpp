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

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "stancelab/error.hpp"

namespace stancelab {

class CompletionCache;

struct DecodingParams {
  std::string model_id = "gpt-4-0613";
  double temperature = 0.0;
  int max_tokens = 512;

  // Throws InvalidArgument: temperature must be finite and >= 0, max_tokens
  // at least 16, model_id non-empty.
  void Validate() const;
};

// Raised by backends. Non-retryable failures end the retry loop early.
class BackendError : public Error {
 public:
  BackendError(const std::string& message, bool retryable)
      : Error(ErrorCode::kBackend, message), retryable_(retryable) {}
  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

class Backend {
 public:
  virtual ~Backend() = default;

  // Must be safe to call from several threads at once.
  virtual std::string Complete(std::string_view prompt,
                               const DecodingParams& params) = 0;

  // Pause before retry number `retry` (1-based).
  virtual std::chrono::milliseconds RetryDelay(int /*retry*/) const {
    return std::chrono::milliseconds(0);
  }

  virtual std::string_view name() const = 0;
};

// Answers from a fixed sentence -> response map. Prompts are matched by
// rendering each fixture sentence, so the backend sees exactly what a live
// model would see.
class ScriptedBackend : public Backend {
 public:
  explicit ScriptedBackend(const std::map<std::string, std::string>& responses);
  ScriptedBackend(ScriptedBackend&& other) noexcept
      : by_prompt_(std::move(other.by_prompt_)), calls_(other.calls_.load()) {}

  // JSON lines of {"sentence_text": ..., "response_text": ...}.
  static ScriptedBackend FromJsonl(std::string_view jsonl);
  static ScriptedBackend FromFile(const std::filesystem::path& path);

  std::string Complete(std::string_view prompt,
                       const DecodingParams& params) override;
  std::string_view name() const override { return "scripted"; }

  std::size_t calls() const { return calls_.load(); }

 private:
  std::map<std::string, std::string, std::less<>> by_prompt_;
  std::atomic<std::size_t> calls_{0};
};

// Answers only from the completion cache; a miss is a non-retryable
// "cache miss" failure.
class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(const CompletionCache& cache) : cache_(cache) {}

  std::string Complete(std::string_view prompt,
                       const DecodingParams& params) override;
  std::string_view name() const override { return "replay"; }

 private:
  const CompletionCache& cache_;
};

struct LiveBackendOptions {
  std::string api_base;  // e.g. "https://api.openai.com/v1"
  std::string api_key;
  std::chrono::seconds timeout{60};
  std::chrono::milliseconds backoff_base{1000};
  double backoff_factor = 2.0;
  std::chrono::milliseconds backoff_max{30000};
  double jitter = 0.25;  // fraction of the delay added at random
};

// OpenAI-compatible chat completions over HTTP(S). The rendered prompt is
// sent as a single user message.
class LiveBackend : public Backend {
 public:
  explicit LiveBackend(LiveBackendOptions options);

  // Reads STANCELAB_API_BASE and STANCELAB_API_KEY. Throws InvalidConfig
  // when either is unset.
  static LiveBackendOptions OptionsFromEnvironment();

  std::string Complete(std::string_view prompt,
                       const DecodingParams& params) override;
  std::chrono::milliseconds RetryDelay(int retry) const override;
  std::string_view name() const override { return "live"; }

 private:
  LiveBackendOptions options_;
  std::string scheme_host_port_;
  std::string path_prefix_;
};

}  // namespace stancelab
