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

#ifndef QA2D_ENGINE_H_
#define QA2D_ENGINE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qa2d/preposition_table.h"
#include "qa2d/question_analysis.h"
#include "qa2d/verb_lexicon.h"

namespace qa2d {

// Names that take a definite article when they form the whole answer, keyed
// by name with the article as value. Loaded from the bundled data file.
const std::map<std::string, std::string> &BundledArticleExceptions();

// Parses an article-exception data file body. Throws LoadError.
std::map<std::string, std::string> ParseArticleExceptions(std::string_view text);

struct EngineConfig {
  // Keep the noun of a Which/How wh phrase after the answer
  // ("How many people ...?" -> "300 people ...").
  bool copy_wh_phrase = false;
  // Maximum number of ranked candidates per question; at least 1.
  int emit_alternatives = 1;
  std::map<std::string, std::string> article_exceptions =
      BundledArticleExceptions();
};

// Throws std::invalid_argument when the config violates its invariants.
void ValidateConfig(const EngineConfig &config);

// Origin marker for tokens that come from the answer span.
inline constexpr int kAnswerOrigin = -1;
// Origin marker for inserted function words (prepositions).
inline constexpr int kInsertedOrigin = 0;

// A surface token and where it came from: a question token id (> 0), the
// answer (kAnswerOrigin) or the engine itself (kInsertedOrigin).
struct SurfaceToken {
  std::string text;
  int origin = kInsertedOrigin;

  bool operator==(const SurfaceToken &) const = default;
};

struct DeclarativeCandidate {
  std::string text;
  std::vector<std::string> tokens;
  std::vector<int> origins;  // parallel to tokens
  std::vector<std::string> applied_rules;
  int rank = 1;
};

// Question tokens after subject/auxiliary reordering and do-support
// removal. `rules` records what was applied.
struct InversionResult {
  std::vector<SurfaceToken> tokens;
  std::vector<std::string> rules;
};

// Where the inserted preposition comes from.
enum class PrepositionSource {
  kNone,
  kStranded,  // already in the sentence after the wh phrase
  kFronted,   // pied-piped with the wh phrase; re-inserted before the answer
  kTable,     // When/Where preposition table
};

struct PrepositionSelection {
  std::optional<std::string> preposition;
  PrepositionSource source = PrepositionSource::kNone;
  std::optional<int> token;  // question token id for stranded/fronted
  std::string rule;
};

// Trims the answer and strips trailing punctuation (a final period is kept
// on abbreviations such as "Mr." or "D.C.").
std::string CleanAnswer(std::string_view answer);

// Surface tokens of an answer span; commas and brackets become tokens.
std::vector<std::string> TokenizeAnswer(std::string_view answer);

// Moves a fronted auxiliary or copula behind the full subject phrase and
// removes do-support, re-inflecting the main verb. The question mark is
// dropped. Subject wh questions keep their order. Throws TransformError
// when an auxiliary is fronted but the parse has no subject.
InversionResult UndoInversion(const WhAnalysis &analysis,
                              const VerbLexicon &lexicon =
                                  VerbLexicon::Bundled());

// Preposition that should introduce the answer. Stranded prepositions win
// over fronted ones, which win over the When/Where table. Nothing is
// inserted when the answer starts with a preposition or a suppressing
// adverb.
PrepositionSelection SelectPreposition(
    QuestionType qtype, const WhAnalysis &analysis, std::string_view answer,
    const PrepositionTable &table = PrepositionTable::Bundled());

// "UN" -> "the UN" when the bare answer is on the exception list.
std::string InsertArticle(std::string_view answer,
                          const std::map<std::string, std::string> &exceptions =
                              BundledArticleExceptions());

// Joins tokens into a sentence: no space before , . ; : ! % ) 's n't and
// other clitics, none after "(", sentence-initial letter uppercased, "?"
// dropped and a final period guaranteed. Throws std::invalid_argument for
// empty input and TransformError when nothing printable remains.
std::string Realize(const std::vector<std::string> &tokens);

// Rule-based question+answer to declarative rewriting.
class Qa2dEngine {
 public:
  explicit Qa2dEngine(EngineConfig config = {},
                      const VerbLexicon &lexicon = VerbLexicon::Bundled(),
                      const PrepositionTable &table =
                          PrepositionTable::Bundled());

  // Ranked declarative candidates (at most config.emit_alternatives).
  // Throws TransformError for an empty answer or empty realization.
  std::vector<DeclarativeCandidate> Transform(const WhAnalysis &analysis,
                                              std::string_view answer) const;

  const EngineConfig &config() const { return config_; }

 private:
  EngineConfig config_;
  const VerbLexicon *lexicon_;
  const PrepositionTable *table_;
};

}  // namespace qa2d

#endif  // QA2D_ENGINE_H_
