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

#ifndef QA2D_PREPOSITION_TABLE_H_
#define QA2D_PREPOSITION_TABLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qa2d/question_analysis.h"

namespace qa2d {

// Result of a table lookup. `rule` names the rule that fired, for the
// engine's audit trail.
struct PrepositionChoice {
  std::optional<std::string> preposition;
  std::string rule;

  bool operator==(const PrepositionChoice &) const = default;
};

// Ordered first-match rules choosing the preposition that introduces a
// When or Where answer. Word classes (months, point locations, suppressing
// adverbs, ...) come from a `word<TAB>class` data file; the date and clock
// patterns are fixed. Every lookup yields either a preposition or none.
class PrepositionTable {
 public:
  explicit PrepositionTable(std::string_view word_classes);

  static const PrepositionTable &Bundled();

  // `answer_tokens` are surface tokens of the answer span.
  PrepositionChoice ForWhen(const std::vector<std::string> &answer_tokens) const;
  PrepositionChoice ForWhere(const std::vector<std::string> &answer_tokens,
                             std::string_view verb_lemma) const;

  // True when the answer opens with a preposition or an adverb that
  // carries its own locative/temporal structure ("there", "halfway", ...).
  bool BlocksInsertion(const std::vector<std::string> &answer_tokens) const;

  bool IsPreposition(std::string_view word) const;

  // Distinct prepositions of the table for a question type, in rule order.
  // Empty for types the table does not cover.
  std::vector<std::string> Inventory(QuestionType qtype) const;

 private:
  std::string ClassOf(std::string_view word) const;

  std::unordered_map<std::string, std::string> classes_;
};

}  // namespace qa2d

#endif  // QA2D_PREPOSITION_TABLE_H_
