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

#include "test_support.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <set>
#include <sstream>

#include "stancelab/text_util.hpp"

namespace stancelab::testing {

GoldDocument LoadSegmentationGold(const std::filesystem::path& path) {
  const std::string content = ReadFile(path);
  GoldDocument gold;
  bool paragraph_open = false;
  bool pending_break = false;
  for (std::string_view line : SplitLines(content)) {
    if (TrimAscii(line).empty()) {
      if (paragraph_open) pending_break = true;
      continue;
    }
    if (pending_break) {
      gold.text += "\n\n";
      pending_break = false;
    } else if (paragraph_open) {
      gold.text += ' ';
    }
    gold.text += line;
    gold.sentences.emplace_back(line);
    paragraph_open = true;
  }
  gold.text += '\n';
  return gold;
}

std::vector<std::size_t> GoldBoundaries(const GoldDocument& gold) {
  std::vector<std::size_t> ends;
  std::size_t from = 0;
  for (const std::string& s : gold.sentences) {
    const std::size_t at = gold.text.find(s, from);
    from = at + s.size();
    ends.push_back(CodepointLength(std::string_view(gold.text).substr(0, from)));
  }
  return ends;
}

double BoundaryF1(const std::vector<std::size_t>& predicted,
                  const std::vector<std::size_t>& gold) {
  const std::set<std::size_t> p(predicted.begin(), predicted.end());
  const std::set<std::size_t> g(gold.begin(), gold.end());
  std::size_t tp = 0;
  for (std::size_t b : p) tp += g.count(b);
  if (p.empty() || g.empty()) return p.empty() && g.empty() ? 1.0 : 0.0;
  const double precision = static_cast<double>(tp) / p.size();
  const double recall = static_cast<double>(tp) / g.size();
  if (precision + recall == 0) return 0.0;
  return 2 * precision * recall / (precision + recall);
}

namespace {

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

}  // namespace

CommandResult RunCli(const std::vector<std::string>& args,
                     const std::filesystem::path& scratch) {
  std::filesystem::create_directories(scratch);
  const auto out_path = scratch / "cli.stdout";
  const auto err_path = scratch / "cli.stderr";
  std::ostringstream cmd;
  cmd << ShellQuote(STANCELAB_BINARY);
  for (const std::string& a : args) cmd << ' ' << ShellQuote(a);
  cmd << " >" << ShellQuote(out_path.string()) << " 2>"
      << ShellQuote(err_path.string());
  const int status = std::system(cmd.str().c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = ReadFile(out_path);
  result.err = ReadFile(err_path);
  return result;
}

}  // namespace stancelab::testing
