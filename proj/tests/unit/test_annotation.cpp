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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "stancelab/annotation.hpp"
#include "stancelab/error.hpp"
#include "stancelab/text_util.hpp"
#include "test_support.hpp"

using namespace stancelab;
using stancelab::testing::OracleKappa;
using stancelab::testing::RandomLabels;
using stancelab::testing::TempDir;

namespace {

constexpr Label H = Label::kHelpful;
constexpr Label M = Label::kHarmful;
constexpr Label N = Label::kNeither;

std::vector<std::string> Ids(std::size_t n, const std::string& prefix = "s") {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

AnnotationSession Labeled(const std::string& id, const std::vector<std::string>& items,
                          const std::vector<Label>& labels) {
  AnnotationSession s(id, "annotator_" + id, items);
  for (std::size_t i = 0; i < labels.size(); ++i) s = RecordLabel(s, items[i], labels[i]);
  return s;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected stancelab::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_SUITE("annotation") {
  TEST_CASE("sampling") {
    const auto ids = Ids(2152);
    const auto sample = SampleForAnnotation(ids, 200, 17);
    CHECK(sample.size() == 200);
    CHECK(std::set<std::string>(sample.begin(), sample.end()).size() == 200);
    CHECK(SampleForAnnotation(ids, 200, 17) == sample);
    CHECK(SampleForAnnotation(ids, 200, 18) != sample);
    auto all = SampleForAnnotation(ids, ids.size(), 3);
    std::sort(all.begin(), all.end());
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    CHECK(all == sorted);
    CHECK(SampleForAnnotation(ids, 0, 3).empty());
    CHECK(CodeOf([&] { SampleForAnnotation(ids, 2153, 1); }) == ErrorCode::kSampleTooLarge);
  }

  TEST_CASE("sampling is uniform") {
    // Each of 10 ids should be drawn first about 1/10 of the time.
    const auto ids = Ids(10);
    std::map<std::string, int> first;
    const int trials = 20000;
    for (int seed = 0; seed < trials; ++seed) {
      first[SampleForAnnotation(ids, 3, static_cast<std::uint64_t>(seed))[0]]++;
    }
    for (const auto& id : ids) {
      CHECK(first[id] > trials / 10 - 400);
      CHECK(first[id] < trials / 10 + 400);
    }
  }

  TEST_CASE("record_label") {
    AnnotationSession s("a", "ann", {"x", "y"});
    CHECK(s.next_unlabeled() == "x");
    s = RecordLabel(s, "x", H);
    CHECK(s.labels().at("x") == H);
    CHECK(s.labeled_count() == 1);
    CHECK_FALSE(s.updated_at().empty());
    s = RecordLabel(s, "x", M);
    CHECK(s.labeled_count() == 1);
    CHECK(s.labels().at("x") == M);
    CHECK(s.next_unlabeled() == "y");
    CHECK(CodeOf([&] { RecordLabel(s, "z", H); }) == ErrorCode::kUnknownSentence);
    s = RecordLabel(s, "y", N);
    CHECK(s.complete());
    CHECK_FALSE(s.next_unlabeled());
    CHECK_THROWS_AS(AnnotationSession("a", "ann", {"x", "x"}), Error);
  }

  TEST_CASE("kappa hand-computed cases") {
    const auto items = Ids(4);
    const auto a = Labeled("a", items, {H, H, N, N});
    const auto b = Labeled("b", items, {H, N, N, N});
    const auto r = CohenKappa(a, b);
    CHECK(r.observed_agreement == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(r.expected_agreement == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(r.kappa - 0.5) < 1e-12);
    CHECK(r.n_items == 4);

    const auto c = Labeled("c", items, {H, H, M, M});
    const auto d = Labeled("d", items, {M, M, H, H});
    CHECK(std::abs(CohenKappa(c, d).kappa - (-1.0)) < 1e-12);

    CHECK(CohenKappa(a, a).kappa == 1.0);
    const auto uniform = Labeled("u", items, {N, N, N, N});
    CHECK(CohenKappa(uniform, uniform).kappa == 1.0);
  }

  TEST_CASE("kappa errors") {
    const auto items = Ids(3);
    const auto a = Labeled("a", items, {H, M, N});
    CHECK(CodeOf([&] { CohenKappa(a, Labeled("b", Ids(3, "t"), {H, M, N})); }) ==
          ErrorCode::kItemSetMismatch);
    CHECK(CodeOf([&] { CohenKappa(a, Labeled("b", items, {H, M})); }) ==
          ErrorCode::kIncompleteSession);
    CHECK(CodeOf([] {
            CohenKappa(AnnotationSession("a", "x", {}), AnnotationSession("b", "y", {}));
          }) == ErrorCode::kEmptyInput);
    // Same item set in a different order is accepted.
    const auto reversed = Labeled("r", {"s2", "s1", "s0"}, {N, M, H});
    CHECK(CohenKappa(a, reversed).kappa == 1.0);
  }

  TEST_CASE("kappa properties on random session pairs") {
    std::mt19937_64 rng(77);
    const std::array<std::array<Label, 3>, 5> perms = {{
        {H, N, M}, {M, H, N}, {M, N, H}, {N, H, M}, {N, M, H}}};
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = rng() % 40 + 1;
      const auto items = Ids(n);
      auto la = RandomLabels(rng, n);
      auto lb = RandomLabels(rng, n);
      if (rng() % 5 == 0) lb = la;
      const auto a = Labeled("a", items, la);
      const auto b = Labeled("b", items, lb);
      AgreementResult ab, ba;
      try {
        ab = CohenKappa(a, b);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kDegenerateMarginals);
        continue;
      }
      ba = CohenKappa(b, a);
      CAPTURE(trial);
      CHECK(ab.kappa == ba.kappa);
      CHECK((ab.kappa == 1.0) == (la == lb));
      CHECK(ab.kappa >= -1.0);
      CHECK(ab.kappa <= 1.0);
      if (ab.expected_agreement < 1.0) {
        CHECK(ab.kappa == doctest::Approx(OracleKappa(la, lb)).epsilon(1e-12));
      }
      const auto& perm = perms[rng() % perms.size()];
      auto relabel = [&](std::vector<Label> v) {
        for (Label& l : v) l = perm[LabelIndex(l)];
        return v;
      };
      const auto pa = Labeled("a", items, relabel(la));
      const auto pb = Labeled("b", items, relabel(lb));
      CHECK(CohenKappa(pa, pb).kappa == ab.kappa);
      std::int64_t total = 0;
      for (std::size_t i = 0; i < kNumLabels; ++i) {
        std::int64_t row = 0, col = 0;
        for (std::size_t j = 0; j < kNumLabels; ++j) {
          row += ab.cross_table[i][j];
          col += ab.cross_table[j][i];
        }
        total += row;
        CHECK(row == std::count(la.begin(), la.end(), kAllLabels[i]));
        CHECK(col == std::count(lb.begin(), lb.end(), kAllLabels[i]));
      }
      CHECK(total == static_cast<std::int64_t>(n));
    }
  }

  TEST_CASE("gold set from agreement plus adjudication") {
    const auto items = Ids(4);
    const auto a = Labeled("a", items, {H, M, N, N});
    const auto b = Labeled("b", items, {H, N, N, M});
    AnnotationSession adj("adj", "adjudicator", items);
    adj = RecordLabel(adj, "s1", M);
    CHECK_THROWS_AS(BuildGold(a, b, &adj), Error);
    adj = RecordLabel(adj, "s3", N);
    const auto gold = BuildGold(a, b, &adj);
    CHECK(gold == std::map<std::string, Label>{{"s0", H}, {"s1", M}, {"s2", N}, {"s3", N}});
    CHECK(CodeOf([&] { BuildGold(a, b); }) == ErrorCode::kIncompleteSession);
    CHECK(BuildGold(a, a) == std::map<std::string, Label>{
                                 {"s0", H}, {"s1", M}, {"s2", N}, {"s3", N}});
  }

  TEST_CASE("event log fold is last-write-wins") {
    TempDir dir;
    SessionEventLog log(dir / "sessions.jsonl");
    CHECK(log.ReadAll().empty());
    log.Append({"a", "ann", "s0", H, "t0"});
    log.Append({"a", "ann", "s1", M, "t1"});
    log.Append({"a", "ann", "s0", N, "t2"});
    const auto events = log.ReadAll();
    REQUIRE(events.size() == 3);
    CHECK(events[2] == LabelEvent{"a", "ann", "s0", N, "t2"});
    std::map<std::string, AnnotationSession> sessions = {
        {"a", AnnotationSession("a", "ann", Ids(2))}};
    ApplyEvents(sessions, events);
    CHECK(sessions["a"].labels() == std::map<std::string, Label>{{"s0", N}, {"s1", M}});
    CHECK(sessions["a"].updated_at() == "t2");
    std::map<std::string, AnnotationSession> none;
    CHECK(CodeOf([&] { ApplyEvents(none, events); }) == ErrorCode::kUnknownSession);
    CHECK(FormatLabelEvent(events[0]) ==
          R"({"session_id":"a","annotator_id":"ann","sentence_id":"s0","label":"helpful","at":"t0"})");
    CHECK(ParseLabelEvent(FormatLabelEvent(events[1])) == events[1]);
  }

  TEST_CASE("concurrent appends never interleave") {
    TempDir dir;
    SessionEventLog log(dir / "sessions.jsonl");
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([&, t] {
        for (int i = 0; i < 100; ++i) {
          log.Append({"s" + std::to_string(t), "ann", std::string(200, 'x') + std::to_string(i),
                      H, "t"});
        }
      });
    }
    for (auto& th : threads) th.join();
    CHECK(log.ReadAll().size() == 800);
  }
}
