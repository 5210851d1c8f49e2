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

#ifndef QA2D_EVAL_METRICS_H_
#define QA2D_EVAL_METRICS_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qa2d/question_analysis.h"
#include "qa2d/text_utils.h"

namespace qa2d {

constexpr int kBleuOrder = 4;

using Tokens = std::vector<std::string>;

// True when the normalized hypothesis equals some normalized reference.
// Throws std::invalid_argument for an empty reference set.
bool ExactMatch(const std::string &hypothesis,
                const std::vector<std::string> &references);

// Sufficient statistics of BLEU for one or more segments. Summing them and
// scoring the sum gives corpus BLEU.
struct BleuStats {
  std::array<long long, kBleuOrder> matches{};
  std::array<long long, kBleuOrder> totals{};
  long long hyp_length = 0;
  long long ref_length = 0;

  BleuStats &operator+=(const BleuStats &other);
};

// Clipped n-gram counts (max count over references) and the closest
// reference length (ties go to the shorter reference).
BleuStats SegmentStats(const Tokens &hypothesis,
                       const std::vector<Tokens> &references);

// Unsmoothed BLEU of summed statistics, 0..100. Zero when any n-gram order
// has no match.
double BleuFromStats(const BleuStats &stats);

// Corpus BLEU over normalize() tokens. Throws std::invalid_argument when the
// lists differ in length or a reference set is empty.
double BleuCorpus(const std::vector<std::string> &hypotheses,
                  const std::vector<std::vector<std::string>> &reference_sets);

// Sentence BLEU with add-one smoothing on orders 2..4, 0..100. An empty
// hypothesis scores 100 against an empty reference and 0 otherwise.
double SentenceBleu(const std::string &hypothesis,
                    const std::vector<std::string> &references);

struct TopkResult {
  double match_rate = 0.0;
  double bleu = 0.0;
  std::vector<int> selected;  // 0-based candidate index per example
};

// Picks, per example, the best of the first k candidates: an exact match
// first, then higher sentence BLEU, then lower rank. Throws
// std::invalid_argument for k < 1, mismatched lengths or an empty
// candidate list.
TopkResult TopkMatch(const std::vector<std::vector<std::string>> &candidate_sets,
                     const std::vector<std::vector<std::string>> &reference_sets,
                     int k);

struct ScoreRow {
  double bleu = 0.0;
  double match = 0.0;
  int n = 0;
};

// One scored example for breakdowns.
struct EvalRecord {
  QuestionType qtype = QuestionType::kWhat;
  int length = 0;  // normalized tokens of question plus answer
  bool match = false;
  BleuStats stats;
};

// "1-9", "10-19", "20-29", "30+".
std::string LengthBucket(int length);

struct Breakdowns {
  std::map<std::string, ScoreRow> by_qtype;
  std::map<std::string, ScoreRow> by_length;
};

Breakdowns ComputeBreakdowns(const std::vector<EvalRecord> &records);

// An example to evaluate: ranked system candidates and 1..3 references.
struct EvalExample {
  std::string id;
  std::vector<std::string> candidates;
  std::vector<std::string> references;
  QuestionType qtype = QuestionType::kWhat;
  int length = 0;
};

struct EvalReport {
  double corpus_bleu = 0.0;
  double exact_match_rate = 0.0;
  std::optional<double> topk_bleu;
  std::optional<double> topk_match_rate;
  int k = 1;
  std::map<std::string, ScoreRow> by_qtype;
  std::map<std::string, ScoreRow> by_length;
  int n_examples = 0;
};

// Rank-1 scores and breakdowns; top-k rows when k > 1.
EvalReport Evaluate(const std::vector<EvalExample> &examples, int k);

}  // namespace qa2d

#endif  // QA2D_EVAL_METRICS_H_
