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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stancelab/config.hpp"
#include "stancelab/error.hpp"
#include "stancelab/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"stancelab: evidence-sentence stance pipeline"};
  app.set_help_flag("-h,--help");

  std::string subcommand;
  std::string config_path;
  std::vector<std::string> overrides;
  std::vector<std::string> label;

  app.add_option("subcommand", subcommand,
                 "ingest | segment | filter | classify | annotate | agree | "
                 "evaluate | analyze | report | all")
      ->required()
      ->check(CLI::IsMember({"ingest", "segment", "filter", "classify",
                             "annotate", "agree", "evaluate", "analyze",
                             "report", "all"}));
  app.add_option("--config", config_path, "key=value configuration file")
      ->required();
  app.add_option("--set", overrides, "override a configuration key (key=value)")
      ->take_all();
  app.add_option("--label", label,
                 "annotate only: record SESSION SENTENCE_ID LABEL and exit")
      ->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto command = stancelab::ParseSubcommand(subcommand);
  if (!label.empty() && command != stancelab::Subcommand::kAnnotate) {
    std::cerr << "stancelab: --label is only valid with annotate\n";
    return 2;
  }

  stancelab::PipelineConfig config;
  try {
    config = stancelab::LoadConfig(config_path, overrides);
  } catch (const stancelab::Error& e) {
    std::cerr << "stancelab: " << stancelab::ErrorCodeName(e.code()) << ": "
              << e.what() << '\n';
    return 2;
  }

  stancelab::RunOptions options;
  if (!label.empty()) options.label = {label[0], label[1], label[2]};
  return stancelab::RunSubcommand(*command, config, std::cout, std::cerr,
                                  options);
}
