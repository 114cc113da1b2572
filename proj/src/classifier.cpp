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

#include "stancelab/classifier.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "stancelab/prompt.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

ClassificationRecord ClassifySentence(const EvidenceSentence& sentence,
                                      Backend& backend,
                                      const DecodingParams& params,
                                      int retry_limit, CompletionCache* cache) {
  ClassificationRecord record;
  record.sentence_id = sentence.sentence.id();
  record.model_id = params.model_id;
  const std::string prompt = RenderPrompt(sentence.sentence.text);
  record.prompt_hash = PromptHash(params.model_id, prompt);

  std::string last_reason;
  for (int attempt = 0; attempt <= retry_limit; ++attempt) {
    record.attempts = attempt + 1;
    std::optional<std::string> raw;
    if (attempt == 0 && cache != nullptr) {
      raw = cache->Lookup(record.prompt_hash, params.model_id);
    }
    if (!raw) {
      if (attempt > 0) std::this_thread::sleep_for(backend.RetryDelay(attempt));
      try {
        raw = backend.Complete(prompt, params);
      } catch (const BackendError& e) {
        last_reason = e.what();
        if (!e.retryable()) break;
        continue;
      } catch (const std::exception& e) {
        last_reason = std::string("backend: ") + e.what();
        continue;
      }
      if (cache != nullptr) {
        cache->Append(
            {record.prompt_hash, params.model_id, *raw, UtcNow()});
      }
    }
    record.raw_response = *raw;
    try {
      ParsedResponse parsed = ParseResponse(*raw);
      record.reasoning = std::move(parsed.reasoning);
      record.outcome = parsed.label;
      record.timestamp = UtcNow();
      return record;
    } catch (const Error& e) {
      last_reason = std::string("malformed response: ") + e.what();
    }
  }
  record.outcome = Failed{last_reason};
  record.timestamp = UtcNow();
  return record;
}

std::vector<ClassificationRecord> ClassifyCorpus(
    const std::vector<EvidenceSentence>& sentences, Backend& backend,
    const DecodingParams& params, CompletionCache& cache,
    const ClassifyOptions& options) {
  if (options.concurrency_limit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "concurrency_limit must be >= 1");
  }
  if (options.retry_limit < 0) {
    throw Error(ErrorCode::kInvalidArgument, "retry_limit must be >= 0");
  }
  std::vector<ClassificationRecord> records(sentences.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker = [&] {
    while (!abort.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sentences.size()) return;
      try {
        records[i] = ClassifySentence(sentences[i], backend, params,
                                      options.retry_limit, &cache);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        abort.store(true);
      }
    }
  };

  const std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(options.concurrency_limit), sentences.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

}  // namespace stancelab
