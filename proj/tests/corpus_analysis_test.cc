/* Copyright 2026 The QA2D Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qa2d/corpus_analysis.h"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "pmi_oracle.h"
#include "test_support.h"

namespace qa2d {
namespace {

NLIPair Pair(const std::string &hypothesis, NliLabel label) {
  return {"premise", hypothesis, label, "id",
          label == NliLabel::kEntailed ? Provenance::kCorrectAnswer
                                       : Provenance::kIncorrectOption};
}

const NliLabel E = NliLabel::kEntailed;
const NliLabel N = NliLabel::kNotEntailed;

TEST_CASE("toy corpus PMI equals hand-derived values") {
  // Document counts: N = 6, n(E) = n(N) = 3.
  //   sam: E2 N1   bought: E2   milk: E1 N1   bread: E1   liz: E1 N1
  //   called, taylor: E1 N2     sold, never, nobody: N1
  // PMI(w, c) = log(n(w,c) * N / (n(w) * n(c))).
  std::vector<NLIPair> toy = testing::ToyCorpus();
  PmiTable t = ComputePmi(toy, 0.0, 100);
  CHECK(t.vocabulary_size == 10);
  CHECK(t.smoothing == 0.0);
  const std::vector<PmiEntry> entailed = {
      {"bought", std::log(2.0), 200.0 / 3.0, 2},
      {"bread", std::log(2.0), 100.0 / 3.0, 1},
      {"sam", std::log(4.0 / 3.0), 200.0 / 3.0, 2},
      {"liz", std::log(1.0), 100.0 / 3.0, 1},
      {"milk", std::log(1.0), 100.0 / 3.0, 1},
      {"called", std::log(2.0 / 3.0), 100.0 / 3.0, 1},
      {"taylor", std::log(2.0 / 3.0), 100.0 / 3.0, 1}};
  const std::vector<PmiEntry> not_entailed = {
      {"never", std::log(2.0), 100.0 / 3.0, 1},
      {"nobody", std::log(2.0), 100.0 / 3.0, 1},
      {"sold", std::log(2.0), 100.0 / 3.0, 1},
      {"called", std::log(4.0 / 3.0), 200.0 / 3.0, 2},
      {"taylor", std::log(4.0 / 3.0), 200.0 / 3.0, 2},
      {"liz", std::log(1.0), 100.0 / 3.0, 1},
      {"milk", std::log(1.0), 100.0 / 3.0, 1},
      {"sam", std::log(2.0 / 3.0), 100.0 / 3.0, 1}};
  CHECK(t.per_class["Entailed"] == entailed);
  CHECK(t.per_class["NotEntailed"] == not_entailed);
  CHECK(t.per_class["Entailed"] == testing::BruteForcePmi(toy, 100)["Entailed"]);
}

TEST_CASE("sign and independence cases") {
  std::vector<NLIPair> pairs = {Pair("alpha beta", E), Pair("beta", N),
                                Pair("gamma", E), Pair("gamma", N)};
  PmiTable t = ComputePmi(pairs, 0.0, 10);
  bool found_alpha = false;
  for (const PmiEntry &e : t.per_class["Entailed"]) {
    if (e.word == "alpha") {
      found_alpha = true;
      CHECK(e.pmi > 0.0);
    }
    if (e.word == "gamma") CHECK(e.pmi == 0.0);
  }
  CHECK(found_alpha);
  for (const PmiEntry &e : t.per_class["NotEntailed"]) {
    CHECK(e.word != "alpha");
    if (e.word == "gamma") CHECK(e.pmi == 0.0);
  }
}

TEST_CASE("smoothing pulls values toward zero") {
  std::vector<NLIPair> toy = testing::ToyCorpus();
  PmiTable raw = ComputePmi(toy, 0.0, 1);
  PmiTable smooth = ComputePmi(toy, 100.0, 1);
  CHECK(smooth.per_class["Entailed"][0].pmi < raw.per_class["Entailed"][0].pmi);
  CHECK(smooth.per_class["Entailed"][0].pmi > 0.0);
  CHECK(std::abs(smooth.per_class["Entailed"][0].pmi) < 0.01);
}

TEST_CASE("top_n truncates and errors are reported") {
  std::vector<NLIPair> toy = testing::ToyCorpus();
  CHECK(ComputePmi(toy, 0.0, 2).per_class["Entailed"].size() == 2);
  CHECK(ComputePmi(toy, 0.0, 0).per_class["Entailed"].empty());
  std::vector<NLIPair> one_label = {Pair("a", E), Pair("b", E)};
  CHECK_THROWS_AS(ComputePmi(one_label, 0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(ComputePmi({}, 0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(ComputePmi(toy, -1.0, 5), std::invalid_argument);
}

TEST_CASE("property: random corpora match the brute-force oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<NLIPair> pairs = testing::RandomNliCorpus(rng, 200);
    PmiTable t = ComputePmi(pairs, 0.0, 1000);
    auto oracle = testing::BruteForcePmi(pairs, 1000);
    CHECK(t.per_class == oracle);
  }
}

TEST_CASE("length histogram") {
  LengthHistogram one = ComputeLengthHistogram({Pair("a b c d e f g", E)});
  CHECK(one.per_label["Entailed"].counts == std::map<int, int>{{7, 1}});
  CHECK(one.per_label["Entailed"].mean == 7.0);
  CHECK(ComputeLengthHistogram({}).per_label.empty());
  LengthHistogram three = ComputeLengthHistogram(
      {Pair("a b c d", N), Pair("a b c d.", N), Pair("a b c d e f g h i j", N)});
  const LengthSummary &s = three.per_label["NotEntailed"];
  CHECK(s.mean == 6.0);
  CHECK(s.median == 4.0);
  CHECK(s.total == 3);
  LengthHistogram even = ComputeLengthHistogram({Pair("a", E), Pair("a b", E)});
  CHECK(even.per_label["Entailed"].median == 1.5);
}

TEST_CASE("word overlap") {
  CHECK(WordOverlap("Who called Taylor?", "Liz called Taylor, who answered.") == 100.0);
  CHECK(WordOverlap("red blue", "green") == 0.0);
  CHECK(WordOverlap("a b c d", "a b c") == 75.0);
  CHECK(WordOverlap("the the cat", "the dog") == 50.0);
  CHECK_THROWS_AS(WordOverlap("", "x"), std::invalid_argument);
  CHECK_THROWS_AS(WordOverlap("?!", "x"), std::invalid_argument);
}

TEST_CASE("property: overlap bounds and substrings") {
  std::mt19937_64 rng(23);
  const std::vector<std::string> vocab = {"when", "did", "the", "war", "end",
                                          "peace", "treaty", "signed", "in",
                                          "1945"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string passage = testing::RandomSentence(rng, vocab, 3, 20);
    std::string question = testing::RandomSentence(rng, vocab, 1, 6);
    const double o = WordOverlap(question, passage);
    CHECK(o >= 0.0);
    CHECK(o <= 100.0);
    // A run of whole passage words is a substring and overlaps fully.
    std::vector<std::string> words = SplitWhitespace(passage);
    size_t start = rng() % words.size();
    size_t len = 1 + rng() % (words.size() - start);
    std::vector<std::string> slice(words.begin() + start,
                                   words.begin() + start + len);
    CHECK(WordOverlap(Join(slice, " "), passage) == 100.0);
  }
}

}  // namespace
}  // namespace qa2d
