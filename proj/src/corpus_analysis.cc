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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "qa2d/text_utils.h"

namespace qa2d {

PmiTable ComputePmi(const std::vector<NLIPair> &pairs, double k, int top_n) {
  if (k < 0) throw std::invalid_argument("smoothing constant must be >= 0");
  if (top_n < 0) throw std::invalid_argument("top_n must be >= 0");

  std::map<std::string, int> class_size;
  std::map<std::string, std::unordered_map<std::string, int>> joint;
  std::unordered_map<std::string, int> word_count;
  for (const NLIPair &p : pairs) {
    const std::string label = NliLabelName(p.label);
    ++class_size[label];
    std::vector<std::string> tokens = Normalize(p.hypothesis);
    std::set<std::string> types(tokens.begin(), tokens.end());
    for (const std::string &w : types) {
      ++joint[label][w];
      ++word_count[w];
    }
  }
  if (class_size.size() < 2) {
    throw std::invalid_argument("PMI needs at least two labels");
  }

  const double n_total = static_cast<double>(pairs.size());
  const double n_classes = static_cast<double>(class_size.size());
  PmiTable table;
  table.smoothing = k;
  table.vocabulary_size = static_cast<int>(word_count.size());
  for (const auto &[label, size] : class_size) {
    std::vector<PmiEntry> entries;
    for (const auto &[word, count] : joint[label]) {
      // p(c|w) smoothed over the classes, divided by p(c), as a single
      // quotient: with integer counts and k = 0 both factors are exact, so
      // the result depends only on the count ratios.
      const double numerator = (static_cast<double>(count) + k) * n_total;
      const double denominator =
          (static_cast<double>(word_count.at(word)) + k * n_classes) *
          static_cast<double>(size);
      PmiEntry e;
      e.word = word;
      e.pmi = std::log(numerator / denominator);
      e.count = count;
      e.percentage = 100.0 * static_cast<double>(count) / static_cast<double>(size);
      entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(),
              [](const PmiEntry &a, const PmiEntry &b) {
                if (a.pmi != b.pmi) return a.pmi > b.pmi;
                if (a.count != b.count) return a.count > b.count;
                return a.word < b.word;
              });
    if (static_cast<int>(entries.size()) > top_n) entries.resize(top_n);
    table.per_class[label] = std::move(entries);
  }
  return table;
}

LengthHistogram ComputeLengthHistogram(const std::vector<NLIPair> &pairs) {
  std::map<std::string, std::vector<int>> lengths;
  for (const NLIPair &p : pairs) {
    lengths[NliLabelName(p.label)].push_back(
        static_cast<int>(Normalize(p.hypothesis).size()));
  }
  LengthHistogram hist;
  for (auto &[label, values] : lengths) {
    LengthSummary &s = hist.per_label[label];
    long long sum = 0;
    for (int v : values) {
      ++s.counts[v];
      sum += v;
    }
    s.total = static_cast<int>(values.size());
    s.mean = static_cast<double>(sum) / static_cast<double>(s.total);
    std::sort(values.begin(), values.end());
    const size_t mid = values.size() / 2;
    s.median = values.size() % 2 == 1
                   ? values[mid]
                   : (static_cast<double>(values[mid - 1]) + values[mid]) / 2.0;
  }
  return hist;
}

double WordOverlap(std::string_view question, std::string_view passage) {
  std::vector<std::string> q = Normalize(question);
  if (q.empty()) throw std::invalid_argument("empty question");
  std::vector<std::string> p = Normalize(passage);
  std::unordered_set<std::string> passage_types(p.begin(), p.end());
  std::set<std::string> question_types(q.begin(), q.end());
  int present = 0;
  for (const std::string &w : question_types) {
    if (passage_types.count(w)) ++present;
  }
  return 100.0 * static_cast<double>(present) /
         static_cast<double>(question_types.size());
}

}  // namespace qa2d
