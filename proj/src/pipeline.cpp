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

#include "stancelab/pipeline.hpp"

#include <iostream>
#include <memory>

#include <json.hpp>

#include "stancelab/artifacts.hpp"
#include "stancelab/classifier.hpp"
#include "stancelab/error.hpp"
#include "stancelab/report.hpp"
#include "stancelab/segmenter.hpp"
#include "stancelab/stats.hpp"

namespace stancelab {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

constexpr std::pair<Subcommand, std::string_view> kSubcommands[] = {
    {Subcommand::kIngest, "ingest"},     {Subcommand::kSegment, "segment"},
    {Subcommand::kFilter, "filter"},     {Subcommand::kClassify, "classify"},
    {Subcommand::kAnnotate, "annotate"}, {Subcommand::kAgree, "agree"},
    {Subcommand::kEvaluate, "evaluate"}, {Subcommand::kAnalyze, "analyze"},
    {Subcommand::kReport, "report"},     {Subcommand::kAll, "all"},
};

fs::path WorkPath(const PipelineConfig& config, std::string_view name) {
  return config.work_dir / name;
}

// Path of a prior-stage artifact; throws MissingStageOutput if absent.
fs::path Require(const PipelineConfig& config, std::string_view name,
                 std::string_view producer) {
  fs::path p = WorkPath(config, name);
  if (!fs::exists(p)) {
    throw Error(ErrorCode::kMissingStageOutput,
                p.string() + " not found; run `" + std::string(producer) +
                    "` first");
  }
  return p;
}

void EnsureWorkDir(const PipelineConfig& config) {
  std::error_code ec;
  fs::create_directories(config.work_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kInvalidConfig,
                "cannot create work_dir " + config.work_dir.string() + ": " +
                    ec.message());
  }
}

std::vector<Document> ReadDocuments(const PipelineConfig& config) {
  return ReadJsonl(Require(config, artifact::kDocuments, "ingest"),
                   ParseDocument);
}

std::vector<EvidenceSentence> ReadEvidence(const PipelineConfig& config) {
  return ReadJsonl(Require(config, artifact::kEvidence, "filter"),
                   ParseEvidence);
}

std::vector<ClassificationRecord> ReadRecords(const PipelineConfig& config) {
  return ReadJsonl(Require(config, artifact::kRecords, "classify"),
                   ParseRecord);
}

Breakdown BuildBreakdown(const PipelineConfig& config) {
  const std::vector<ClassificationRecord> records = ReadRecords(config);
  std::vector<DocumentMeta> metas;
  for (Document& doc : ReadDocuments(config)) metas.push_back(std::move(doc.meta));
  std::map<std::string, std::string> sentence_to_doc;
  for (const EvidenceSentence& ev : ReadEvidence(config)) {
    sentence_to_doc.emplace(ev.sentence.id(), ev.sentence.doc_id);
  }
  return Aggregate(records, metas, sentence_to_doc,
                   {.yates_correction = config.yates_correction});
}

ojson OptionalNumber(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

void WriteJsonFile(const fs::path& path, const ojson& j) {
  WriteFile(path, j.dump(2) + "\n");
}

}  // namespace

std::optional<Subcommand> ParseSubcommand(std::string_view name) {
  for (const auto& [command, token] : kSubcommands) {
    if (token == name) return command;
  }
  return std::nullopt;
}

std::string_view SubcommandName(Subcommand command) {
  for (const auto& [c, token] : kSubcommands) {
    if (c == command) return token;
  }
  return "";
}

void RunIngest(const PipelineConfig& config) {
  if (config.manifest_path.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "config 'manifest' is required");
  }
  EnsureWorkDir(config);
  const std::vector<DocumentMeta> metas = LoadManifest(config.manifest_path);
  const fs::path base = config.manifest_path.parent_path();
  std::vector<std::string> lines;
  lines.reserve(metas.size());
  for (const DocumentMeta& meta : metas) {
    lines.push_back(FormatDocument(LoadDocument(meta, base, config.canonicalize)));
  }
  WriteJsonl(WorkPath(config, artifact::kDocuments), lines);
}

void RunSegment(const PipelineConfig& config) {
  const std::vector<Document> docs = ReadDocuments(config);
  const Segmenter segmenter = config.abbreviations_path
                                  ? Segmenter::FromFile(*config.abbreviations_path)
                                  : Segmenter();
  std::vector<std::string> lines;
  for (const Document& doc : docs) {
    for (const Sentence& s : segmenter.Segment(doc)) {
      lines.push_back(FormatSentence(s));
    }
  }
  WriteJsonl(WorkPath(config, artifact::kSentences), lines);
}

void RunFilter(const PipelineConfig& config) {
  const std::vector<Sentence> sentences = ReadJsonl(
      Require(config, artifact::kSentences, "segment"), ParseSentence);
  const Lexicon ends = config.ends_lexicon_path
                           ? Lexicon::FromFile(*config.ends_lexicon_path)
                           : Lexicon::DefaultEnds();
  const Lexicon evidence = config.evidence_lexicon_path
                               ? Lexicon::FromFile(*config.evidence_lexicon_path)
                               : Lexicon::DefaultEvidence();
  std::vector<std::string> lines;
  for (const EvidenceSentence& ev : FilterEvidence(sentences, ends, evidence)) {
    lines.push_back(FormatEvidence(ev));
  }
  WriteJsonl(WorkPath(config, artifact::kEvidence), lines);
}

std::size_t RunClassify(const PipelineConfig& config) {
  const std::vector<EvidenceSentence> evidence = ReadEvidence(config);
  CompletionCache cache(config.cache_file());
  std::unique_ptr<Backend> backend;
  switch (config.backend) {
    case BackendKind::kScripted:
      backend = std::make_unique<ScriptedBackend>(
          ScriptedBackend::FromFile(*config.scripted_fixture_path));
      break;
    case BackendKind::kReplay:
      backend = std::make_unique<ReplayBackend>(cache);
      break;
    case BackendKind::kLive: {
      LiveBackendOptions options = LiveBackend::OptionsFromEnvironment();
      options.backoff_base = config.live_backoff_base;
      options.timeout = config.live_timeout;
      backend = std::make_unique<LiveBackend>(std::move(options));
      break;
    }
  }
  const std::vector<ClassificationRecord> records =
      ClassifyCorpus(evidence, *backend, config.decoding, cache,
                     {.retry_limit = config.retry_limit,
                      .concurrency_limit = config.concurrency_limit});
  std::vector<std::string> lines;
  std::vector<std::string> meta;
  std::size_t failed = 0;
  for (const ClassificationRecord& r : records) {
    lines.push_back(FormatRecord(r));
    meta.push_back(FormatRecordTimestamp(r));
    if (!r.labeled()) ++failed;
  }
  WriteJsonl(WorkPath(config, artifact::kRecords), lines);
  WriteJsonl(WorkPath(config, artifact::kRecordsMeta), meta);
  return failed;
}

SessionStore OpenSessionStore(const PipelineConfig& config) {
  const std::vector<EvidenceSentence> evidence = ReadEvidence(config);
  std::map<std::string, std::string> texts;
  for (const EvidenceSentence& ev : evidence) {
    texts.emplace(ev.sentence.id(), ev.sentence.text);
  }
  std::vector<std::string> items;
  try {
    items = SampleForAnnotation(evidence, config.annotation_sample_size,
                                config.seed);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string("annotation.sample_size: ") + e.what());
  }
  return SessionStore(config.sessions, items, std::move(texts),
                      WorkPath(config, artifact::kSessions));
}

void RunAnnotate(const PipelineConfig& config, const RunOptions& options,
                 std::ostream& out) {
  SessionStore store = OpenSessionStore(config);
  if (options.label) {
    const SessionView view = store.PostLabel(
        options.label->session_id, options.label->sentence_id,
        options.label->label);
    out << SessionViewJson(view) << '\n';
    return;
  }
  AnnotationServer server(store, config.static_dir);
  int port = config.server_port;
  if (port == 0) {
    port = server.BindToAnyPort(config.server_host);
  } else if (!server.Bind(config.server_host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(ErrorCode::kInvalidConfig,
                "cannot bind " + config.server_host + ":" +
                    std::to_string(config.server_port));
  }
  out << "annotation server on http://" << config.server_host << ':' << port
      << "/\n"
      << std::flush;
  if (options.on_server_ready) options.on_server_ready(server, port);
  server.ListenAfterBind();
}

void RunAgree(const PipelineConfig& config) {
  Require(config, artifact::kSessions, "annotate");
  const SessionStore store = OpenSessionStore(config);
  const AgreementResult result = store.Agreement(config.agree_a, config.agree_b);
  ojson j = ojson::parse(AgreementJson(result));
  j["session_a"] = config.agree_a;
  j["session_b"] = config.agree_b;
  WriteJsonFile(WorkPath(config, artifact::kAgreement), j);
}

void RunEvaluate(const PipelineConfig& config) {
  Require(config, artifact::kSessions, "annotate");
  const SessionStore store = OpenSessionStore(config);
  const AnnotationSession a = store.Session(config.evaluate_a);
  const AnnotationSession b = store.Session(config.evaluate_b);
  std::optional<AnnotationSession> adjudication;
  if (config.evaluate_adjudication) {
    adjudication = store.Session(*config.evaluate_adjudication);
  }
  const std::map<std::string, Label> gold =
      BuildGold(a, b, adjudication ? &*adjudication : nullptr);

  std::map<std::string, Label> predicted;
  std::size_t failed = 0;
  for (const ClassificationRecord& r : ReadRecords(config)) {
    if (!gold.contains(r.sentence_id)) continue;
    if (const auto label = r.label()) {
      predicted[r.sentence_id] = *label;
    } else {
      ++failed;
    }
  }
  std::vector<Label> gold_labels;
  std::vector<Label> predicted_labels;
  std::size_t unclassified = 0;
  for (const auto& [id, label] : gold) {
    auto it = predicted.find(id);
    if (it == predicted.end()) {
      ++unclassified;
      continue;
    }
    gold_labels.push_back(label);
    predicted_labels.push_back(it->second);
  }
  const ConfusionMatrix cm = Confusion(gold_labels, predicted_labels);
  const ClassMetrics m = Metrics(cm);

  ojson j;
  j["n_gold"] = gold.size();
  j["n_evaluated"] = gold_labels.size();
  j["n_failed"] = failed;
  j["n_missing"] = unclassified - failed;
  j["labels"] = {"helpful", "harmful", "neither"};
  j["confusion"] = ojson::array();
  for (const auto& row : cm.counts) j["confusion"].push_back(ojson(row));
  j["per_class"] = ojson::object();
  for (Label label : kAllLabels) {
    const ClassScores& s = m.per_class[LabelIndex(label)];
    j["per_class"][std::string(LabelToken(label))] = {
        {"precision", OptionalNumber(s.precision)},
        {"recall", OptionalNumber(s.recall)},
        {"f1", OptionalNumber(s.f1)}};
  }
  j["accuracy"] = m.accuracy;
  j["micro"] = {{"precision", m.micro_precision},
                {"recall", m.micro_recall},
                {"f1", m.micro_f1}};
  j["macro"] = {{"precision", OptionalNumber(m.macro_precision)},
                {"recall", OptionalNumber(m.macro_recall)},
                {"f1", OptionalNumber(m.macro_f1)}};
  WriteJsonFile(WorkPath(config, artifact::kEvaluation), j);
}

void RunAnalyze(const PipelineConfig& config) {
  WriteFile(WorkPath(config, artifact::kAnalysis),
            Render(BuildBreakdown(config), ReportFormat::kMachine));
}

void RunReport(const PipelineConfig& config) {
  const Breakdown breakdown = BuildBreakdown(config);
  WriteFile(WorkPath(config, artifact::kBreakdown),
            Render(breakdown, ReportFormat::kCsv));
  WriteFile(WorkPath(config, artifact::kReportText),
            Render(breakdown, ReportFormat::kText));
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kMissingFile:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kInvalidEnum:
    case ErrorCode::kSampleTooLarge:
    case ErrorCode::kUnknownSession:
    case ErrorCode::kUnknownSentence:
      return 2;
    case ErrorCode::kMissingStageOutput:
      return 3;
    case ErrorCode::kBackend:
    case ErrorCode::kCacheWriteFailure:
      return 4;
    default:
      return 1;
  }
}

int RunSubcommand(Subcommand command, const PipelineConfig& config,
                  std::ostream& out, std::ostream& err,
                  const RunOptions& options) {
  try {
    switch (command) {
      case Subcommand::kIngest: RunIngest(config); break;
      case Subcommand::kSegment: RunSegment(config); break;
      case Subcommand::kFilter: RunFilter(config); break;
      case Subcommand::kClassify: {
        if (const std::size_t failed = RunClassify(config); failed > 0) {
          err << "stancelab: classify: " << failed
              << " record(s) FAILED; they are excluded from analysis\n";
        }
        break;
      }
      case Subcommand::kAnnotate: RunAnnotate(config, options, out); break;
      case Subcommand::kAgree: RunAgree(config); break;
      case Subcommand::kEvaluate: RunEvaluate(config); break;
      case Subcommand::kAnalyze: RunAnalyze(config); break;
      case Subcommand::kReport: RunReport(config); break;
      case Subcommand::kAll:
        RunIngest(config);
        RunSegment(config);
        RunFilter(config);
        if (const std::size_t failed = RunClassify(config); failed > 0) {
          err << "stancelab: classify: " << failed
              << " record(s) FAILED; they are excluded from analysis\n";
        }
        RunAnalyze(config);
        RunReport(config);
        break;
    }
    return 0;
  } catch (const Error& e) {
    err << "stancelab: " << SubcommandName(command) << ": "
        << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "stancelab: " << SubcommandName(command) << ": internal error: "
        << e.what() << '\n';
    return 1;
  }
}

}  // namespace stancelab
