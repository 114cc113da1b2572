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

#include "stancelab/config.hpp"

#include <charconv>
#include <functional>

#include "stancelab/error.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

namespace {

[[noreturn]] void Bad(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::kInvalidConfig, "config '" + key + "': " + why);
}

template <typename Int>
Int ParseInt(const std::string& key, const std::string& value) {
  Int out{};
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    Bad(key, "expected an integer, got '" + value + "'");
  }
  return out;
}

double ParseDouble(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    Bad(key, "expected a number, got '" + value + "'");
  }
}

bool ParseBool(const std::string& key, const std::string& value) {
  const std::string v = ToAsciiLower(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  Bad(key, "expected true/false, got '" + value + "'");
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  return p.is_relative() ? (base / p).lexically_normal() : p;
}

std::vector<SessionSpec> ParseSessions(const std::string& key,
                                       const std::string& value) {
  std::vector<SessionSpec> specs;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    if (comma == std::string::npos) comma = value.size();
    const std::string_view item =
        TrimAscii(std::string_view(value).substr(start, comma - start));
    if (!item.empty()) {
      const std::size_t colon = item.find(':');
      if (colon == std::string_view::npos || colon == 0 ||
          colon + 1 == item.size()) {
        Bad(key, "expected session_id:annotator_id entries");
      }
      specs.push_back({std::string(item.substr(0, colon)),
                       std::string(item.substr(colon + 1))});
    }
    start = comma + 1;
  }
  return specs;
}

}  // namespace

std::filesystem::path PipelineConfig::cache_file() const {
  return cache_path ? *cache_path : work_dir / "cache.jsonl";
}

void PipelineConfig::Validate() const {
  if (work_dir.empty()) Bad("work_dir", "is required");
  if (concurrency_limit < 1) Bad("concurrency_limit", "must be >= 1");
  if (retry_limit < 0) Bad("retry_limit", "must be >= 0");
  if (backend == BackendKind::kScripted && !scripted_fixture_path) {
    Bad("scripted_fixture", "is required when backend = scripted");
  }
  if (server_port < 0 || server_port > 65535) {
    Bad("annotation.port", "out of range");
  }
  try {
    decoding.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
}

std::map<std::string, std::string> ParseKeyValues(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = TrimAscii(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "config line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    std::string key(TrimAscii(line.substr(0, eq)));
    std::string value(TrimAscii(line.substr(eq + 1)));
    if (key.empty()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "config line " + std::to_string(line_no) + ": empty key");
    }
    if (!out.emplace(key, std::move(value)).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "config line " + std::to_string(line_no) + ": key '" + key +
                      "' set twice");
    }
  }
  return out;
}

void ApplySettings(PipelineConfig& c,
                   const std::map<std::string, std::string>& settings,
                   const std::filesystem::path& base) {
  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto path = [&](std::filesystem::path& field) -> Setter {
    return [&field, &base](const std::string&, const std::string& v) {
      field = Resolve(base, v);
    };
  };
  auto opt_path = [&](std::optional<std::filesystem::path>& field) -> Setter {
    return [&field, &base](const std::string&, const std::string& v) {
      if (v.empty()) {
        field.reset();
      } else {
        field = Resolve(base, v);
      }
    };
  };
  const std::map<std::string, Setter, std::less<>> setters = {
      {"manifest", path(c.manifest_path)},
      {"work_dir", path(c.work_dir)},
      {"ends_lexicon", opt_path(c.ends_lexicon_path)},
      {"evidence_lexicon", opt_path(c.evidence_lexicon_path)},
      {"abbreviations", opt_path(c.abbreviations_path)},
      {"scripted_fixture", opt_path(c.scripted_fixture_path)},
      {"cache", opt_path(c.cache_path)},
      {"annotation.static_dir", opt_path(c.static_dir)},
      {"strip_references",
       [&](const auto& k, const auto& v) {
         c.canonicalize.strip_references = ParseBool(k, v);
       }},
      {"strip_footnote_markers",
       [&](const auto& k, const auto& v) {
         c.canonicalize.strip_footnote_markers = ParseBool(k, v);
       }},
      {"model_id", [&](const auto&, const auto& v) { c.decoding.model_id = v; }},
      {"temperature",
       [&](const auto& k, const auto& v) {
         c.decoding.temperature = ParseDouble(k, v);
       }},
      {"max_tokens",
       [&](const auto& k, const auto& v) {
         c.decoding.max_tokens = ParseInt<int>(k, v);
       }},
      {"retry_limit",
       [&](const auto& k, const auto& v) { c.retry_limit = ParseInt<int>(k, v); }},
      {"concurrency_limit",
       [&](const auto& k, const auto& v) {
         c.concurrency_limit = ParseInt<int>(k, v);
       }},
      {"seed",
       [&](const auto& k, const auto& v) {
         c.seed = ParseInt<std::uint64_t>(k, v);
       }},
      {"backend",
       [&](const auto& k, const auto& v) {
         if (v == "live") {
           c.backend = BackendKind::kLive;
         } else if (v == "replay") {
           c.backend = BackendKind::kReplay;
         } else if (v == "scripted") {
           c.backend = BackendKind::kScripted;
         } else {
           Bad(k, "expected live|replay|scripted, got '" + v + "'");
         }
       }},
      {"live.backoff_ms",
       [&](const auto& k, const auto& v) {
         c.live_backoff_base = std::chrono::milliseconds(ParseInt<long>(k, v));
       }},
      {"live.timeout_s",
       [&](const auto& k, const auto& v) {
         c.live_timeout = std::chrono::seconds(ParseInt<long>(k, v));
       }},
      {"yates_correction",
       [&](const auto& k, const auto& v) { c.yates_correction = ParseBool(k, v); }},
      {"annotation.sample_size",
       [&](const auto& k, const auto& v) {
         c.annotation_sample_size = ParseInt<std::size_t>(k, v);
       }},
      {"annotation.sessions",
       [&](const auto& k, const auto& v) { c.sessions = ParseSessions(k, v); }},
      {"annotation.host", [&](const auto&, const auto& v) { c.server_host = v; }},
      {"annotation.port",
       [&](const auto& k, const auto& v) { c.server_port = ParseInt<int>(k, v); }},
      {"agree.a", [&](const auto&, const auto& v) { c.agree_a = v; }},
      {"agree.b", [&](const auto&, const auto& v) { c.agree_b = v; }},
      {"evaluate.a", [&](const auto&, const auto& v) { c.evaluate_a = v; }},
      {"evaluate.b", [&](const auto&, const auto& v) { c.evaluate_b = v; }},
      {"evaluate.adjudication",
       [&](const auto&, const auto& v) {
         if (v.empty()) {
           c.evaluate_adjudication.reset();
         } else {
           c.evaluate_adjudication = v;
         }
       }},
  };
  for (const auto& [key, value] : settings) {
    auto it = setters.find(key);
    if (it == setters.end()) Bad(key, "unknown key");
    it->second(key, value);
  }
}

PipelineConfig LoadConfig(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides) {
  PipelineConfig config;
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const Error&) {
    throw Error(ErrorCode::kInvalidConfig,
                "cannot read config file " + path.string());
  }
  const std::filesystem::path base =
      std::filesystem::absolute(path).parent_path();
  ApplySettings(config, ParseKeyValues(text), base);

  std::map<std::string, std::string> cli;
  for (const std::string& kv : overrides) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidConfig,
                  "--set expects key=value, got '" + kv + "'");
    }
    cli[std::string(TrimAscii(std::string_view(kv).substr(0, eq)))] =
        std::string(TrimAscii(std::string_view(kv).substr(eq + 1)));
  }
  ApplySettings(config, cli, std::filesystem::current_path());
  config.Validate();
  return config;
}

}  // namespace stancelab
