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

// Randomized checks of the engine and metric invariants.

#include <random>

#include "doctest.h"
#include "engine_invariants.h"
#include "qa2d/eval_metrics.h"
#include "test_support.h"

namespace qa2d {
namespace {

TEST_CASE("engine invariants on every fixture with its own answer") {
  for (const auto &f : testing::LoadFixtures()) {
    CAPTURE(f.id);
    WhAnalysis a = Analyze(f.parse);
    for (int alternatives : {1, 3}) {
      EngineConfig config;
      config.emit_alternatives = alternatives;
      auto violations = testing::EngineViolations(a, f.answer, config);
      CHECK_MESSAGE(violations.empty(), Join(violations, "; "));
    }
  }
}

TEST_CASE("engine invariants under 500 random answer substitutions") {
  auto fixtures = testing::LoadFixtures();
  std::mt19937_64 rng(2018);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto &f = fixtures[rng() % fixtures.size()];
    const std::string answer = testing::RandomAnswer(rng);
    EngineConfig config;
    config.emit_alternatives = 1 + static_cast<int>(rng() % 4);
    config.copy_wh_phrase = rng() % 4 == 0;
    CAPTURE(f.id);
    CAPTURE(answer);
    auto violations = testing::EngineViolations(Analyze(f.parse), answer, config);
    CHECK_MESSAGE(violations.empty(), Join(violations, "; "));
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("top-k match rate never decreases with k") {
  std::mt19937_64 rng(99);
  const std::vector<std::string> vocab = {"sam", "went", "to", "the", "store",
                                          "in", "on", "1945", "war", "ended"};
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<std::string>> cands(n);
    std::vector<std::vector<std::string>> refs(n);
    for (int i = 0; i < n; ++i) {
      const int refs_n = 1 + static_cast<int>(rng() % 3);
      for (int r = 0; r < refs_n; ++r) {
        refs[i].push_back(testing::RandomSentence(rng, vocab, 1, 4));
      }
      const int cands_n = 1 + static_cast<int>(rng() % 6);
      for (int c = 0; c < cands_n; ++c) {
        cands[i].push_back(rng() % 4 == 0 ? refs[i][rng() % refs_n]
                                          : testing::RandomSentence(rng, vocab, 1, 4));
      }
    }
    double previous = -1.0;
    for (int k = 1; k <= 6; ++k) {
      const double rate = TopkMatch(cands, refs, k).match_rate;
      CHECK(rate >= previous);
      CHECK(rate >= 0.0);
      CHECK(rate <= 1.0);
      previous = rate;
    }
  }
}

}  // namespace
}  // namespace qa2d
