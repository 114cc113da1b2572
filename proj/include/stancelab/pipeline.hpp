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
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stancelab/annot_server.hpp"
#include "stancelab/config.hpp"

namespace stancelab {

enum class Subcommand {
  kIngest,
  kSegment,
  kFilter,
  kClassify,
  kAnnotate,
  kAgree,
  kEvaluate,
  kAnalyze,
  kReport,
  kAll,
};

std::optional<Subcommand> ParseSubcommand(std::string_view name);
std::string_view SubcommandName(Subcommand command);

// Stage artifact names under work_dir.
namespace artifact {
inline constexpr std::string_view kDocuments = "documents.jsonl";
inline constexpr std::string_view kSentences = "sentences.jsonl";
inline constexpr std::string_view kEvidence = "evidence.jsonl";
inline constexpr std::string_view kRecords = "records.jsonl";
inline constexpr std::string_view kRecordsMeta = "records.meta.jsonl";
inline constexpr std::string_view kSessions = "sessions.jsonl";
inline constexpr std::string_view kAgreement = "agreement.json";
inline constexpr std::string_view kEvaluation = "evaluation.json";
inline constexpr std::string_view kAnalysis = "analysis.json";
inline constexpr std::string_view kBreakdown = "breakdown.csv";
inline constexpr std::string_view kReportText = "report.txt";
}  // namespace artifact

// Direct label entry for `annotate` without starting the server.
struct LabelCommand {
  std::string session_id;
  std::string sentence_id;
  std::string label;
};

struct RunOptions {
  std::optional<LabelCommand> label;
  // Invoked with the bound server before serving; lets callers stop it.
  std::function<void(AnnotationServer&, int port)> on_server_ready;
};

// Each stage reads its input artifact(s) from work_dir and writes its output
// there. Errors are thrown as stancelab::Error.
void RunIngest(const PipelineConfig& config);
void RunSegment(const PipelineConfig& config);
void RunFilter(const PipelineConfig& config);
// Returns the number of FAILED records.
std::size_t RunClassify(const PipelineConfig& config);
void RunAnnotate(const PipelineConfig& config, const RunOptions& options,
                 std::ostream& out);
void RunAgree(const PipelineConfig& config);
void RunEvaluate(const PipelineConfig& config);
void RunAnalyze(const PipelineConfig& config);
void RunReport(const PipelineConfig& config);

// Builds the annotation session store over the sampled evidence sentences.
SessionStore OpenSessionStore(const PipelineConfig& config);

// Exit status: 0 ok, 1 internal error, 2 bad configuration or arguments,
// 3 missing prior-stage output, 4 backend or cache failure. A one-line
// diagnostic goes to `err` on failure.
int ExitCodeFor(ErrorCode code);
int RunSubcommand(Subcommand command, const PipelineConfig& config,
                  std::ostream& out, std::ostream& err,
                  const RunOptions& options = {});

}  // namespace stancelab
