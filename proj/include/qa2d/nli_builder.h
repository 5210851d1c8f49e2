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

#ifndef QA2D_NLI_BUILDER_H_
#define QA2D_NLI_BUILDER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qa2d/conllu.h"
#include "qa2d/engine.h"

namespace qa2d {

enum class QaSchema { kSpan, kMultichoice, kUnanswerable };

// "span", "multichoice", "unanswerable" (also "unanswerable-aware").
std::optional<QaSchema> ParseQaSchema(std::string_view name);
std::string QaSchemaName(QaSchema schema);

struct AnswerOption {
  std::string text;
  bool correct = false;

  bool operator==(const AnswerOption &) const = default;
};

// Normalized QA record. At most one option is correct; answerable records
// have at least one option. For unanswerable records the single option is
// the plausible (incorrect) answer.
struct QAExample {
  std::string id;
  std::string passage;
  std::string question;
  std::vector<AnswerOption> answers;
  bool answerable = true;
  std::string source;

  bool operator==(const QAExample &) const = default;
};

// Exactly two labels: automated conversion cannot tell neutral from
// contradiction.
enum class NliLabel { kEntailed, kNotEntailed };
enum class Provenance { kCorrectAnswer, kIncorrectOption, kUnanswerable };

std::string NliLabelName(NliLabel label);
std::string ProvenanceName(Provenance provenance);
std::optional<NliLabel> ParseNliLabel(std::string_view name);
std::optional<Provenance> ParseProvenance(std::string_view name);

struct NLIPair {
  std::string premise;
  std::string hypothesis;
  NliLabel label = NliLabel::kEntailed;
  std::string source_id;
  Provenance provenance = Provenance::kCorrectAnswer;

  bool operator==(const NLIPair &) const = default;
};

// Parses JSONL text in the given schema. `source` tags every record unless
// the record carries its own "source" field. Throws LoadError with the
// 1-based line number on malformed JSON, schema violations and duplicate
// ids.
std::vector<QAExample> ParseQaJsonl(std::string_view text, QaSchema schema,
                                    const std::string &source);

// Reads a JSONL file; the source tag defaults to the schema name.
std::vector<QAExample> LoadQaJsonl(const std::string &path, QaSchema schema);

// Question parses keyed by "# sent_id". Throws LoadError for sentences
// without an id or with a duplicate id.
std::map<std::string, DepSentence> IndexParses(
    std::vector<DepSentence> sentences);

enum class NegativePolicy { kAll, kOneRandom };

std::optional<NegativePolicy> ParseNegativePolicy(std::string_view name);
std::string NegativePolicyName(NegativePolicy policy);

struct BuildOptions {
  EngineConfig engine;
  NegativePolicy negatives = NegativePolicy::kOneRandom;
  uint64_t seed = 0;
  int jobs = 1;
  // Custom data; null selects the bundled lexicon and table.
  const VerbLexicon *lexicon = nullptr;
  const PrepositionTable *prepositions = nullptr;
};

struct SkipRecord {
  std::string id;
  std::string reason;
};

struct BuildResult {
  std::vector<NLIPair> pairs;
  std::vector<SkipRecord> skipped;
};

// Index of the distractor drawn for example `index` under `seed`. Depends
// only on (seed, index, count).
size_t DrawDistractor(uint64_t seed, size_t index, size_t count);

// One Entailed pair per answerable example from its correct option,
// NotEntailed pairs from incorrect options (all, or one seeded draw), and
// one NotEntailed pair per unanswerable example from its plausible answer.
// Examples without a parse or whose rewrite fails are skipped and
// reported; output order follows input order regardless of jobs.
BuildResult BuildPairs(const std::vector<QAExample> &examples,
                       const std::map<std::string, DepSentence> &parses,
                       const BuildOptions &options);

// One JSON object per line with fields premise, hypothesis, label,
// source_id, provenance. Returns the number of lines. Throws WriteError.
int WriteNliJsonl(const std::vector<NLIPair> &pairs, const std::string &path);

std::string NliPairToJsonLine(const NLIPair &pair);

// Inverse of WriteNliJsonl; throws LoadError.
std::vector<NLIPair> ParseNliJsonl(std::string_view text);
std::vector<NLIPair> LoadNliJsonl(const std::string &path);

}  // namespace qa2d

#endif  // QA2D_NLI_BUILDER_H_
