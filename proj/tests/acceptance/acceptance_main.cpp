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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <json.hpp>

#include "stancelab/annotation.hpp"
#include "stancelab/artifacts.hpp"
#include "stancelab/corpus.hpp"
#include "stancelab/csv.hpp"
#include "stancelab/error.hpp"
#include "stancelab/evidence_filter.hpp"
#include "stancelab/prompt.hpp"
#include "stancelab/report.hpp"
#include "stancelab/segmenter.hpp"
#include "stancelab/stats.hpp"
#include "stancelab/text_util.hpp"
#include "test_support.hpp"

using namespace stancelab;
using stancelab::testing::FixturePath;
namespace fs = std::filesystem;

namespace {

// Collects the reasons a criterion failed.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string Summary() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) {
      s += (i ? "; " : "") + failures_[i];
    }
    if (failures_.size() > 3) s += "; +" + std::to_string(failures_.size() - 3) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

int g_failed = 0;

void Run(const std::string& name, const std::function<void(Check&)>& body) {
  Check check;
  try {
    body(check);
  } catch (const std::exception& e) {
    check.Expect(false, std::string("exception: ") + e.what());
  }
  if (check.ok()) {
    std::cout << "PASS " << name << "\n";
  } else {
    ++g_failed;
    std::cout << "FAIL " << name << ": " << check.Summary() << "\n";
  }
}

Breakdown FixtureBreakdown() {
  const auto records = ReadJsonl(FixturePath("breakdown/records.jsonl"), ParseRecord);
  const auto metas = LoadManifest(FixturePath("breakdown/manifest.csv"));
  std::map<std::string, std::string> index;
  const auto rows = csv::Parse(ReadFile(FixturePath("breakdown/sentence_index.csv")));
  for (std::size_t i = 1; i < rows.size(); ++i) index[rows[i][0]] = rows[i][1];
  return Aggregate(records, metas, index);
}

AnnotationSession Labeled(const std::string& id, const std::vector<std::string>& items,
                          const std::vector<Label>& labels) {
  AnnotationSession s(id, "annotator_" + id, items);
  for (std::size_t i = 0; i < labels.size(); ++i) s = RecordLabel(s, items[i], labels[i]);
  return s;
}

std::vector<std::string> Ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("s" + std::to_string(i));
  return ids;
}

void BreakdownCounts(Check& c) {
  // evidence, helpful, % helpful, harmful, % harmful, neither
  const std::array<std::array<std::int64_t, 6>, 8> reference = {{
      {218, 7, 3, 94, 43, 117},
      {848, 159, 19, 86, 10, 603},
      {560, 78, 14, 203, 36, 279},
      {384, 118, 31, 26, 7, 240},
      {88, 17, 19, 35, 40, 36},
      {54, 11, 20, 2, 4, 41},
      {866, 102, 12, 332, 38, 432},
      {1286, 288, 22, 114, 9, 884},
  }};
  const auto start = std::chrono::steady_clock::now();
  const Breakdown b = FixtureBreakdown();
  const auto elapsed = std::chrono::steady_clock::now() - start;
  c.Expect(elapsed < std::chrono::seconds(5), "aggregation took 5 s or more");
  c.Expect(b.rows.size() == 8, "expected 8 rows");
  for (std::size_t i = 0; i < b.rows.size() && i < 8; ++i) {
    const BreakdownRow& r = b.rows[i];
    const auto& p = reference[i];
    const bool match = r.n_evidence == p[0] && r.n_helpful == p[1] && r.pct_helpful == p[2] &&
                       r.n_harmful == p[3] && r.pct_harmful == p[4] && r.n_neither == p[5];
    c.Expect(match, "row " + std::to_string(i) + " differs");
  }
}

void ExpectedValues(Check& c) {
  const Breakdown b = FixtureBreakdown();
  c.Expect(b.expected.has_value(), "no expected values");
  if (!b.expected) return;
  const std::array<std::int64_t, 4> want = {202, 231, 188, 214};
  const std::array<std::int64_t, 4> got = {(*b.expected)[0][0], (*b.expected)[0][1],
                                           (*b.expected)[1][0], (*b.expected)[1][1]};
  for (std::size_t i = 0; i < 4; ++i) {
    c.Expect(got[i] == want[i], "cell " + std::to_string(i) + ": got " +
                                    std::to_string(got[i]) + ", reference " +
                                    std::to_string(want[i]));
  }
}

void ChiSquare(Check& c) {
  const Breakdown b = FixtureBreakdown();
  c.Expect(b.chi_square.has_value(), "no chi-square");
  if (!b.chi_square) return;
  const double oracle = testing::OracleChiSquare2x2(102, 332, 288, 114);
  c.Expect(std::abs(b.chi_square->statistic - oracle) < 1e-9, "statistic differs from oracle");
  c.Expect(std::abs(b.chi_square->statistic - 194.3) <= 0.5, "statistic not 194.3 +/- 0.5");
  c.Expect(b.chi_square->df == 1, "df != 1");
  c.Expect(b.chi_square->p_value < 1e-4, "p >= 1e-4");
  c.Expect(std::abs(Chi2Sf(3.841458821, 1) - 0.05) < 1e-6, "sf at the 0.05 critical value");
  const boost::math::chi_squared dist(1.0);
  for (double x : {0.5, 1.0, 3.841458821, 10.0, 50.0}) {
    const double ref = boost::math::cdf(boost::math::complement(dist, x));
    c.Expect(std::abs(Chi2Sf(x, 1) - ref) <= 1e-10 * ref, "sf differs from boost");
  }
}

void Kappa(Check& c) {
  constexpr Label H = Label::kHelpful, M = Label::kHarmful, N = Label::kNeither;
  const auto items = Ids(4);
  const auto a = Labeled("a", items, {H, H, N, N});
  const auto b = Labeled("b", items, {H, N, N, N});
  c.Expect(std::abs(CohenKappa(a, b).kappa - 0.5) < 1e-12, "kappa 0.5 case");
  c.Expect(std::abs(CohenKappa(Labeled("c", items, {H, H, M, M}),
                               Labeled("d", items, {M, M, H, H}))
                        .kappa +
                    1.0) < 1e-12,
           "kappa -1 case");
  c.Expect(CohenKappa(a, a).kappa == 1.0, "identical sessions");
  std::mt19937_64 rng(99);
  int pairs = 0;
  while (pairs < 1000) {
    const std::size_t n = rng() % 30 + 2;
    const auto ids = Ids(n);
    const auto la = testing::RandomLabels(rng, n);
    const auto lb = testing::RandomLabels(rng, n);
    AgreementResult ab;
    try {
      ab = CohenKappa(Labeled("a", ids, la), Labeled("b", ids, lb));
    } catch (const Error&) {
      continue;
    }
    ++pairs;
    c.Expect(ab.kappa == CohenKappa(Labeled("b", ids, lb), Labeled("a", ids, la)).kappa,
             "asymmetric");
    c.Expect(std::abs(ab.kappa - testing::OracleKappa(la, lb)) < 1e-12, "differs from oracle");
    auto relabel = [](std::vector<Label> v) {
      for (Label& l : v) l = kAllLabels[(LabelIndex(l) + 1) % kNumLabels];
      return v;
    };
    c.Expect(CohenKappa(Labeled("a", ids, relabel(la)), Labeled("b", ids, relabel(lb))).kappa ==
                 ab.kappa,
             "not permutation invariant");
  }
}

void MicroMetrics(Check& c) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    ConfusionMatrix cm;
    for (auto& row : cm.counts) {
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 300);
    }
    if (cm.total() == 0) cm.counts[0][0] = 1;
    const auto m = Metrics(cm);
    const double acc = static_cast<double>(cm.trace()) / static_cast<double>(cm.total());
    c.Expect(m.micro_precision == acc && m.micro_recall == acc && m.micro_f1 == acc &&
                 m.accuracy == acc,
             "micro identity broken at trial " + std::to_string(trial));
  }
  ConfusionMatrix cm;
  cm.counts = {{{60, 5, 5}, {0, 50, 5}, {5, 0, 70}}};
  c.Expect(cm.trace() == 180 && cm.total() == 200, "fixture matrix");
  c.Expect(Metrics(cm).micro_f1 == 0.9, "micro F1 != 0.90");
}

void Prompt(Check& c) {
  const std::string sentence =
      "Observational data from the UK suggest that there has been an increase in the "
      "popularity of e-cigarettes accompanied by a reduction in smoking cigarettes.";
  c.Expect(RenderPrompt(sentence) == ReadFile(FixturePath("prompt_golden.txt")),
           "prompt differs from golden file");
  std::mt19937_64 rng(77);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz ABC.,;!?()-0123456789";
  int checked = 0;
  while (checked < 1000) {
    std::string r;
    const std::size_t len = rng() % 60 + 1;
    for (std::size_t k = 0; k < len; ++k) r.push_back(alphabet[rng() % alphabet.size()]);
    r = std::string(TrimAscii(r));
    if (RFindIgnoreAsciiCase(r, "answer:") != std::string::npos ||
        RFindIgnoreAsciiCase(r, "reasoning:") != std::string::npos) {
      continue;
    }
    const Label label = kAllLabels[rng() % kNumLabels];
    const ParsedResponse parsed =
        ParseResponse("Reasoning: " + r + "\nAnswer: " + std::string(LabelToken(label)));
    c.Expect(parsed.label == label && parsed.reasoning == r, "round-trip failed");
    ++checked;
  }
}

void Determinism(Check& c) {
  testing::TempDir dir;
  const std::string conf = FixturePath("corpus/stancelab.conf").string();
  for (const char* run : {"run1", "run2"}) {
    const auto r = testing::RunCli(
        {"all", "--config", conf, "--set", "work_dir=" + (dir / run).string()},
        dir / (std::string(run) + ".io"));
    c.Expect(r.exit_code == 0, std::string(run) + " exited " + std::to_string(r.exit_code));
  }
  for (const char* name : {"documents.jsonl", "sentences.jsonl", "evidence.jsonl",
                           "records.jsonl", "analysis.json", "breakdown.csv", "report.txt"}) {
    c.Expect(ReadFile(dir / "run1" / name) == ReadFile(dir / "run2" / name),
             std::string(name) + " differs between runs");
  }
  std::ifstream in(FixturePath("adversarial_responses.jsonl"));
  int cases = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    const std::string name = j.at("name");
    ++cases;
    try {
      const ParsedResponse parsed = ParseResponse(j.at("raw").get<std::string>());
      c.Expect(!j.at("label").is_null() &&
                   LabelToken(parsed.label) == j.at("label").get<std::string>() &&
                   parsed.reasoning == j.at("reasoning").get<std::string>(),
               "adversarial " + name);
    } catch (const Error& e) {
      c.Expect(j.at("label").is_null() && e.code() == ErrorCode::kMalformedResponse,
               "adversarial " + name);
    }
  }
  c.Expect(cases == 50, "expected 50 adversarial cases");
}

void Segmentation(Check& c) {
  const auto gold = testing::LoadSegmentationGold(FixturePath("segmentation_gold.txt"));
  const auto predicted = Segmenter().Segment("gold", gold.text);
  std::vector<std::size_t> ends;
  for (const auto& s : predicted) ends.push_back(s.end);
  c.Expect(testing::BoundaryF1(ends, testing::GoldBoundaries(gold)) == 1.0,
           "boundary F1 below 1.0");

  const std::set<std::string> stance_examples = {
      "Observational data from the UK suggest that there has been an increase in the "
      "popularity of e-cigarettes accompanied by a reduction in smoking cigarettes.",
      "There is growing evidence that e-cigarette use is a precursor to smoking in young "
      "people.",
      "It is clear that more research is needed, and that concerns about the potential for "
      "e-cigarettes to act as a gateway for non-smokers into tobacco smoking cannot be "
      "dismissed at this stage."};
  std::vector<Sentence> sentences;
  for (const auto& meta : LoadManifest(FixturePath("corpus/manifest.csv"))) {
    const auto doc = Segmenter().Segment(LoadDocument(meta, FixturePath("corpus")));
    sentences.insert(sentences.end(), doc.begin(), doc.end());
  }
  std::set<std::string> kept;
  for (const auto& e :
       FilterEvidence(sentences, Lexicon::DefaultEnds(), Lexicon::DefaultEvidence())) {
    kept.insert(e.sentence.text);
  }
  for (const auto& t : stance_examples) c.Expect(kept.count(t) == 1, "missing: " + t.substr(0, 40));
}

}  // namespace

int main() {
  Run("breakdown_counts", BreakdownCounts);
  Run("expected_values", ExpectedValues);
  Run("chi_square", ChiSquare);
  Run("cohen_kappa", Kappa);
  Run("micro_metrics", MicroMetrics);
  Run("prompt_and_parse", Prompt);
  Run("pipeline_determinism", Determinism);
  Run("segmentation_and_filter", Segmentation);
  std::cout << (g_failed == 0 ? "ALL PASS" : std::to_string(g_failed) + " FAILED") << "\n";
  return g_failed == 0 ? 0 : 1;
}
