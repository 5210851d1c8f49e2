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

#ifndef QA2D_QUESTION_ANALYSIS_H_
#define QA2D_QUESTION_ANALYSIS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qa2d/conllu.h"

namespace qa2d {

// Category of a question, determined by its wh word alone ("how many" is
// How, "whom" is Who).
enum class QuestionType { kWho, kWhat, kWhen, kWhere, kWhich, kWhose, kWhy, kHow };

inline constexpr QuestionType kAllQuestionTypes[] = {
    QuestionType::kWho,   QuestionType::kWhat,  QuestionType::kWhen,
    QuestionType::kWhere, QuestionType::kWhich, QuestionType::kWhose,
    QuestionType::kWhy,   QuestionType::kHow};

// "Who", "What", ...
std::string QuestionTypeName(QuestionType type);

// Inverse of QuestionTypeName; case-insensitive. Empty when unknown.
std::optional<QuestionType> ParseQuestionType(std::string_view name);

// Maps a single word to its question type when it is a wh word.
std::optional<QuestionType> WhWordType(std::string_view word);

// Inclusive range of token ids.
struct TokenSpan {
  int first = 0;
  int last = 0;

  bool Contains(int id) const { return id >= first && id <= last; }
  bool operator==(const TokenSpan &) const = default;
};

// Structural ingredients of a wh question consumed by the rewrite engine.
// All indices are 1-based token ids into `question`.
struct WhAnalysis {
  DepSentence question;
  int wh_token = 0;
  // Head of the phrase the wh word introduces ("friend" in "which friend",
  // "people" in "how many people"); equals wh_token for bare wh words.
  int wh_phrase_head = 0;
  // Maximal contiguous span of the phrase head's subtree around wh_token.
  TokenSpan wh_phrase;
  QuestionType qtype = QuestionType::kWhat;
  int root = 0;
  // Fronted auxiliary (including do-support). Never set together with
  // `copula`.
  std::optional<int> aux;
  std::optional<int> copula;
  std::optional<int> subject;
  // Predicate the wh phrase complements. For copular questions whose wh
  // phrase is itself the predicate ("What is X?") this is the phrase head.
  int wh_attachment = 0;
  // Prepositions/particles depending on the wh word or the root that are
  // stranded outside the wh phrase, in surface order.
  std::vector<int> dangling_preps;
  // A preposition inside the wh phrase preceding the wh word ("In which
  // year ...", "To whom ..."). It is removed with the phrase.
  std::optional<int> fronted_prep;
  bool subject_wh = false;
};

// Id of the wh token the analysis works on: the leftmost wh word outside a
// relative clause, falling back to the leftmost wh word. Throws
// NotWhQuestion when the sentence has none.
int FindWhToken(const DepSentence &sentence);

// Type of the selected wh word. Throws NotWhQuestion.
QuestionType ClassifyQuestion(const DepSentence &sentence);

// Lexical classification over raw question text (first wh word). Used when
// no parse is available, e.g. for evaluation breakdowns.
std::optional<QuestionType> ClassifyQuestionText(std::string_view text);

// Full structural analysis. Throws NotWhQuestion or AnalysisError.
WhAnalysis Analyze(const DepSentence &sentence);

// nsubj, nsubj:pass, csubj, csubj:pass.
bool IsSubjectRelation(std::string_view deprel);

}  // namespace qa2d

#endif  // QA2D_QUESTION_ANALYSIS_H_
