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

#include <random>
#include <string>
#include <vector>

#include "stancelab/segmenter.hpp"
#include "stancelab/text_util.hpp"
#include "test_support.hpp"

using namespace stancelab;
using stancelab::testing::FixturePath;
using stancelab::testing::TempDir;

namespace {

std::vector<std::string> Texts(const std::vector<Sentence>& sentences) {
  std::vector<std::string> out;
  for (const Sentence& s : sentences) out.push_back(s.text);
  return out;
}

std::vector<std::string> Split(std::string_view text) {
  return Texts(Segmenter().Segment("d", text));
}

// Checks every Sentence invariant against the source text.
void CheckInvariants(std::string_view text, const std::vector<Sentence>& sentences) {
  const CodepointIndex index(text);
  std::size_t prev_end = 0;
  std::vector<bool> covered(index.size(), false);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& s = sentences[i];
    CHECK(s.index == i);
    CHECK(s.start < s.end);
    CHECK(s.start >= prev_end);
    prev_end = s.end;
    const std::size_t b = index.ToByte(s.start);
    const std::size_t e = index.ToByte(s.end);
    CHECK(std::string(TrimAscii(text.substr(b, e - b))) == s.text);
    CHECK_FALSE(TrimAscii(s.text).empty());
    for (std::size_t k = s.start; k < s.end; ++k) covered[k] = true;
  }
  for (std::size_t k = 0; k < index.size(); ++k) {
    const std::size_t b = index.ToByte(k);
    if (!IsAsciiSpace(text[b])) CHECK(covered[k]);
  }
}

}  // namespace

TEST_SUITE("segmenter") {
  TEST_CASE("boundary examples") {
    CHECK(Split("I agree. It works!") ==
          std::vector<std::string>{"I agree.", "It works!"});
    CHECK(Split("Use ENDS, e.g. vapes, daily.") ==
          std::vector<std::string>{"Use ENDS, e.g. vapes, daily."});
    CHECK(Split("Risk rose 2.5 times. New data exist.") ==
          std::vector<std::string>{"Risk rose 2.5 times.", "New data exist."});
  }

  TEST_CASE("exceptions to the boundary rule") {
    CHECK(Split("Dr. Smith spoke. Mr. Lee agreed.").size() == 2);
    CHECK(Split("It was published in Sept. 2018 by J. Smith.").size() == 1);
    CHECK(Split("We waited... Then it came.").size() == 1);
    CHECK(Split("We waited… Then it came.").size() == 1);
    CHECK(Split("The value was 3.14 today.").size() == 1);
    CHECK(Split("Smith et al. Found nothing.").size() == 1);
    CHECK(Split("see vs. Other.").size() == 1);
    CHECK(Split("It ends. then continues.").size() == 1);
    CHECK(Split("It ends. (Aside.)").size() == 1);
  }

  TEST_CASE("boundaries before digits and quotes") {
    CHECK(Split("Sales rose. 2021 was busy.").size() == 2);
    CHECK(Split("He left. \"Why?\" she asked.").size() == 2);
    CHECK(Split("He said “stop.” Then left.") ==
          std::vector<std::string>{"He said “stop.”", "Then left."});
    CHECK(Split("Is it?! Yes.").size() == 2);
    CHECK(Split("(It rose.) Then fell.") ==
          std::vector<std::string>{"(It rose.)", "Then fell."});
  }

  TEST_CASE("blank lines always terminate") {
    CHECK(Split("Heading\n\nBody text here") ==
          std::vector<std::string>{"Heading", "Body text here"});
    CHECK(Split("line one\nline two") ==
          std::vector<std::string>{"line one\nline two"});
    CHECK(Split("a\n  \nb").size() == 2);
  }

  TEST_CASE("empty input") {
    CHECK(Split("").empty());
    CHECK(Split(" \n\n\t ").empty());
  }

  TEST_CASE("offsets are code points") {
    const std::string text = "Café rises. Naïve view.";
    const auto s = Segmenter().Segment("d", text);
    REQUIRE(s.size() == 2);
    CHECK(s[0].start == 0);
    CHECK(s[0].end == 11);
    CHECK(s[1].start == 12);
    CHECK(s[1].end == 23);
    CHECK(s[1].id() == "d#1");
    CheckInvariants(text, s);
  }

  TEST_CASE("custom abbreviations") {
    CHECK(Split("See Sect. Four.").size() == 2);
    Segmenter custom(Segmenter::ParseAbbreviations("# comment\nSect.\n\n"));
    CHECK(custom.Segment("d", "See Sect. Four.").size() == 1);
    // The file replaces the default list.
    CHECK(custom.Segment("d", "Dr. Smith.").size() == 2);
    CHECK(custom.abbreviations().size() == 1);
    TempDir dir;
    WriteFile(dir / "abbr.txt", "Sect.\n");
    CHECK(Segmenter::FromFile(dir / "abbr.txt").abbreviations() ==
          std::vector<std::string>{"Sect."});
  }

  TEST_CASE("coverage, invariants and determinism on random text") {
    const std::vector<std::string> pieces = {
        "Word", "word", " ",   ".",  "!",  "?",   "\"",  "“",   "”",  "e.g.",
        "Dr.",  "2.5",  "\n",  "\n\n", "...", "J.", "(",  ")",   "é",   "ENDS"};
    std::mt19937_64 rng(99);
    const Segmenter seg;
    for (int trial = 0; trial < 2000; ++trial) {
      std::string text;
      const int n = static_cast<int>(rng() % 40);
      for (int i = 0; i < n; ++i) text += pieces[rng() % pieces.size()];
      CAPTURE(text);
      const auto first = seg.Segment("d", text);
      CheckInvariants(text, first);
      CHECK(seg.Segment("d", text) == first);
      CHECK(Segmenter().Segment("d", text) == first);
    }
  }

  TEST_CASE("gold file boundary F1 is 1.0") {
    const auto gold = testing::LoadSegmentationGold(FixturePath("segmentation_gold.txt"));
    REQUIRE(gold.sentences.size() == 50);
    const auto predicted = Segmenter().Segment("gold", gold.text);
    std::vector<std::size_t> ends;
    for (const Sentence& s : predicted) ends.push_back(s.end);
    CHECK(testing::BoundaryF1(ends, testing::GoldBoundaries(gold)) == 1.0);
    CHECK(Texts(predicted) == gold.sentences);
  }
}
