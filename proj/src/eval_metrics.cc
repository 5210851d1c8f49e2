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

#include "qa2d/eval_metrics.h"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace qa2d {
namespace {

using NgramCounts = std::unordered_map<std::string, int>;

NgramCounts CountNgrams(const Tokens &tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key.push_back('\x1f');
      key.append(tokens[i + j]);
    }
    ++counts[key];
  }
  return counts;
}

std::vector<Tokens> NormalizeAll(const std::vector<std::string> &texts) {
  std::vector<Tokens> out;
  out.reserve(texts.size());
  for (const std::string &t : texts) out.push_back(Normalize(t));
  return out;
}

void RequireReferences(const std::vector<std::string> &references) {
  if (references.empty()) {
    throw std::invalid_argument("empty reference set");
  }
}

}  // namespace

bool ExactMatch(const std::string &hypothesis,
                const std::vector<std::string> &references) {
  RequireReferences(references);
  const Tokens hyp = Normalize(hypothesis);
  for (const std::string &ref : references) {
    if (Normalize(ref) == hyp) return true;
  }
  return false;
}

BleuStats &BleuStats::operator+=(const BleuStats &other) {
  for (int n = 0; n < kBleuOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_length += other.hyp_length;
  ref_length += other.ref_length;
  return *this;
}

BleuStats SegmentStats(const Tokens &hypothesis,
                       const std::vector<Tokens> &references) {
  BleuStats stats;
  stats.hyp_length = static_cast<long long>(hypothesis.size());
  long long best_diff = -1;
  for (const Tokens &ref : references) {
    const long long len = static_cast<long long>(ref.size());
    const long long diff = std::llabs(len - stats.hyp_length);
    if (best_diff < 0 || diff < best_diff ||
        (diff == best_diff && len < stats.ref_length)) {
      best_diff = diff;
      stats.ref_length = len;
    }
  }
  for (int n = 1; n <= kBleuOrder; ++n) {
    const NgramCounts hyp_counts = CountNgrams(hypothesis, n);
    NgramCounts max_ref;
    for (const Tokens &ref : references) {
      for (const auto &[gram, count] : CountNgrams(ref, n)) {
        int &slot = max_ref[gram];
        if (count > slot) slot = count;
      }
    }
    long long matched = 0;
    long long total = 0;
    for (const auto &[gram, count] : hyp_counts) {
      total += count;
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) matched += std::min(count, it->second);
    }
    stats.matches[n - 1] = matched;
    stats.totals[n - 1] = total;
  }
  return stats;
}

double BleuFromStats(const BleuStats &stats) {
  if (stats.hyp_length == 0) return 0.0;
  double log_precision = 0.0;
  for (int n = 0; n < kBleuOrder; ++n) {
    if (stats.matches[n] == 0) return 0.0;
    log_precision += std::log(static_cast<double>(stats.matches[n]) /
                              static_cast<double>(stats.totals[n]));
  }
  double brevity = 1.0;
  if (stats.hyp_length < stats.ref_length) {
    brevity = std::exp(1.0 - static_cast<double>(stats.ref_length) /
                                 static_cast<double>(stats.hyp_length));
  }
  return 100.0 * brevity * std::exp(log_precision / kBleuOrder);
}

double BleuCorpus(const std::vector<std::string> &hypotheses,
                  const std::vector<std::vector<std::string>> &reference_sets) {
  if (hypotheses.size() != reference_sets.size()) {
    throw std::invalid_argument("hypothesis and reference lists differ in length");
  }
  BleuStats total;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    RequireReferences(reference_sets[i]);
    total += SegmentStats(Normalize(hypotheses[i]), NormalizeAll(reference_sets[i]));
  }
  return BleuFromStats(total);
}

double SentenceBleu(const std::string &hypothesis,
                    const std::vector<std::string> &references) {
  RequireReferences(references);
  const Tokens hyp = Normalize(hypothesis);
  const std::vector<Tokens> refs = NormalizeAll(references);
  if (hyp.empty()) {
    for (const Tokens &r : refs) {
      if (r.empty()) return 100.0;
    }
    return 0.0;
  }
  const BleuStats stats = SegmentStats(hyp, refs);
  if (stats.matches[0] == 0) return 0.0;
  double log_precision = std::log(static_cast<double>(stats.matches[0]) /
                                  static_cast<double>(stats.totals[0]));
  for (int n = 1; n < kBleuOrder; ++n) {
    log_precision += std::log(static_cast<double>(stats.matches[n] + 1) /
                              static_cast<double>(stats.totals[n] + 1));
  }
  double brevity = 1.0;
  if (stats.hyp_length < stats.ref_length) {
    brevity = std::exp(1.0 - static_cast<double>(stats.ref_length) /
                                 static_cast<double>(stats.hyp_length));
  }
  return 100.0 * brevity * std::exp(log_precision / kBleuOrder);
}

TopkResult TopkMatch(const std::vector<std::vector<std::string>> &candidate_sets,
                     const std::vector<std::vector<std::string>> &reference_sets,
                     int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (candidate_sets.size() != reference_sets.size()) {
    throw std::invalid_argument("candidate and reference lists differ in length");
  }
  TopkResult result;
  std::vector<std::string> chosen;
  int matches = 0;
  for (size_t i = 0; i < candidate_sets.size(); ++i) {
    const auto &cands = candidate_sets[i];
    if (cands.empty()) throw std::invalid_argument("empty candidate list");
    const int limit = std::min<int>(k, static_cast<int>(cands.size()));
    int best = 0;
    bool best_match = ExactMatch(cands[0], reference_sets[i]);
    double best_bleu = SentenceBleu(cands[0], reference_sets[i]);
    for (int c = 1; c < limit; ++c) {
      const bool match = ExactMatch(cands[c], reference_sets[i]);
      const double bleu = SentenceBleu(cands[c], reference_sets[i]);
      if ((match && !best_match) || (match == best_match && bleu > best_bleu)) {
        best = c;
        best_match = match;
        best_bleu = bleu;
      }
    }
    result.selected.push_back(best);
    chosen.push_back(cands[best]);
    if (best_match) ++matches;
  }
  if (!candidate_sets.empty()) {
    result.match_rate =
        static_cast<double>(matches) / static_cast<double>(candidate_sets.size());
  }
  result.bleu = BleuCorpus(chosen, reference_sets);
  return result;
}

std::string LengthBucket(int length) {
  if (length < 10) return "1-9";
  if (length < 20) return "10-19";
  if (length < 30) return "20-29";
  return "30+";
}

Breakdowns ComputeBreakdowns(const std::vector<EvalRecord> &records) {
  struct Accumulator {
    BleuStats stats;
    int matches = 0;
    int n = 0;
  };
  std::map<std::string, Accumulator> by_qtype;
  std::map<std::string, Accumulator> by_length;
  for (const EvalRecord &r : records) {
    for (Accumulator *acc : {&by_qtype[QuestionTypeName(r.qtype)],
                             &by_length[LengthBucket(r.length)]}) {
      acc->stats += r.stats;
      acc->matches += r.match ? 1 : 0;
      ++acc->n;
    }
  }
  auto finish = [](const std::map<std::string, Accumulator> &in) {
    std::map<std::string, ScoreRow> out;
    for (const auto &[key, acc] : in) {
      out[key] = {BleuFromStats(acc.stats),
                  static_cast<double>(acc.matches) / acc.n, acc.n};
    }
    return out;
  };
  return {finish(by_qtype), finish(by_length)};
}

EvalReport Evaluate(const std::vector<EvalExample> &examples, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  EvalReport report;
  report.k = k;
  report.n_examples = static_cast<int>(examples.size());

  std::vector<std::string> rank1;
  std::vector<std::vector<std::string>> candidate_sets;
  std::vector<std::vector<std::string>> reference_sets;
  std::vector<EvalRecord> records;
  int matches = 0;
  for (const EvalExample &ex : examples) {
    if (ex.candidates.empty()) {
      throw std::invalid_argument("example '" + ex.id + "' has no candidates");
    }
    RequireReferences(ex.references);
    rank1.push_back(ex.candidates.front());
    candidate_sets.push_back(ex.candidates);
    reference_sets.push_back(ex.references);
    EvalRecord record;
    record.qtype = ex.qtype;
    record.length = ex.length;
    record.match = ExactMatch(ex.candidates.front(), ex.references);
    record.stats = SegmentStats(Normalize(ex.candidates.front()),
                                NormalizeAll(ex.references));
    matches += record.match ? 1 : 0;
    records.push_back(std::move(record));
  }
  report.corpus_bleu = BleuCorpus(rank1, reference_sets);
  if (!examples.empty()) {
    report.exact_match_rate =
        static_cast<double>(matches) / static_cast<double>(examples.size());
  }
  if (k > 1) {
    TopkResult topk = TopkMatch(candidate_sets, reference_sets, k);
    report.topk_bleu = topk.bleu;
    report.topk_match_rate = topk.match_rate;
  }
  Breakdowns b = ComputeBreakdowns(records);
  report.by_qtype = std::move(b.by_qtype);
  report.by_length = std::move(b.by_length);
  return report;
}

}  // namespace qa2d
