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

#ifndef QA2D_CORPUS_ANALYSIS_H_
#define QA2D_CORPUS_ANALYSIS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qa2d/nli_builder.h"

namespace qa2d {

struct PmiEntry {
  std::string word;
  double pmi = 0.0;
  double percentage = 0.0;  // share of the class's pairs containing the word
  int count = 0;            // pairs of the class containing the word

  bool operator==(const PmiEntry &) const = default;
};

struct PmiTable {
  // Label name -> entries sorted by descending PMI (ties: higher count,
  // then word).
  std::map<std::string, std::vector<PmiEntry>> per_class;
  double smoothing = 0.0;
  int vocabulary_size = 0;
};

// PMI(word, class) over document-level counts (a word counts once per
// hypothesis):
//
//   PMI(w, c) = log( (n(w,c) + k) / (n(w) + k * |C|) * N / n(c) )
//
// where n(w,c) counts pairs of class c containing w, n(w) all pairs
// containing w, n(c) pairs of class c and N all pairs. With k = 0 this is
// log p(w,c) / (p(w) p(c)). Words that never occur in a class are left out
// of its ranking. Hypotheses are tokenized with Normalize(). Throws
// std::invalid_argument for fewer than two labels, k < 0 or top_n < 0.
PmiTable ComputePmi(const std::vector<NLIPair> &pairs, double k, int top_n);

struct LengthSummary {
  std::map<int, int> counts;  // normalized hypothesis length -> pairs
  int total = 0;
  double mean = 0.0;
  double median = 0.0;
};

struct LengthHistogram {
  std::map<std::string, LengthSummary> per_label;
};

LengthHistogram ComputeLengthHistogram(const std::vector<NLIPair> &pairs);

// Percentage (0..100) of distinct normalized question words that occur in
// the normalized passage. Throws std::invalid_argument when the question
// has no tokens.
double WordOverlap(std::string_view question, std::string_view passage);

}  // namespace qa2d

#endif  // QA2D_CORPUS_ANALYSIS_H_
