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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include <httplib.h>
#include <json.hpp>

#include "stancelab/backend.hpp"

namespace stancelab {

namespace {

bool IsRetryableStatus(int status) { return status == 429 || status >= 500; }

}  // namespace

LiveBackend::LiveBackend(LiveBackendOptions options)
    : options_(std::move(options)) {
  const std::string& base = options_.api_base;
  const std::size_t scheme_end = base.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidConfig,
                "API base must include a scheme: " + base);
  }
  const std::size_t path_start = base.find('/', scheme_end + 3);
  scheme_host_port_ = base.substr(0, path_start);
  if (path_start != std::string::npos) path_prefix_ = base.substr(path_start);
  while (!path_prefix_.empty() && path_prefix_.back() == '/') {
    path_prefix_.pop_back();
  }
}

LiveBackendOptions LiveBackend::OptionsFromEnvironment() {
  LiveBackendOptions options;
  const char* base = std::getenv("STANCELAB_API_BASE");
  const char* key = std::getenv("STANCELAB_API_KEY");
  if (base == nullptr || *base == '\0') {
    throw Error(ErrorCode::kInvalidConfig, "STANCELAB_API_BASE is not set");
  }
  if (key == nullptr || *key == '\0') {
    throw Error(ErrorCode::kInvalidConfig, "STANCELAB_API_KEY is not set");
  }
  options.api_base = base;
  options.api_key = key;
  return options;
}

std::string LiveBackend::Complete(std::string_view prompt,
                                  const DecodingParams& params) {
  nlohmann::json body = {
      {"model", params.model_id},
      {"temperature", params.temperature},
      {"max_tokens", params.max_tokens},
      {"messages", nlohmann::json::array(
                       {{{"role", "user"}, {"content", std::string(prompt)}}})}};

  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_write_timeout(options_.timeout);
  httplib::Headers headers = {
      {"Authorization", "Bearer " + options_.api_key}};

  auto res = client.Post(path_prefix_ + "/chat/completions", headers,
                         body.dump(), "application/json");
  if (!res) {
    throw BackendError("transport: " + httplib::to_string(res.error()), true);
  }
  if (res->status < 200 || res->status >= 300) {
    throw BackendError("http status " + std::to_string(res->status),
                       IsRetryableStatus(res->status));
  }
  try {
    const auto reply = nlohmann::json::parse(res->body);
    return reply.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw BackendError(std::string("unreadable completion body: ") + e.what(),
                       true);
  }
}

std::chrono::milliseconds LiveBackend::RetryDelay(int retry) const {
  double delay = static_cast<double>(options_.backoff_base.count()) *
                 std::pow(options_.backoff_factor, std::max(0, retry - 1));
  thread_local std::mt19937_64 rng{std::random_device{}()};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  delay *= 1.0 + options_.jitter * unit(rng);
  delay = std::min(delay, static_cast<double>(options_.backoff_max.count()));
  return std::chrono::milliseconds(static_cast<long long>(delay));
}

}  // namespace stancelab
