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

#include "qa2d/question_analysis.h"

#include <algorithm>
#include <set>

#include "qa2d/errors.h"
#include "qa2d/text_utils.h"

namespace qa2d {
namespace {

std::string_view BaseRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

bool InsideRelativeClause(const DepSentence &sentence, int id) {
  int current = sentence.token(id).head;
  while (current != 0) {
    const DepToken &t = sentence.token(current);
    if (BaseRelation(t.deprel) == "acl") return true;
    current = t.head;
  }
  return false;
}

// Pre-modifier relations through which a wh word projects its phrase.
// Only "how" projects through advmod ("how old", "how long").
bool ProjectsWhPhrase(const DepSentence &sentence, const DepToken &t) {
  if (t.head == 0 || t.id > t.head) return false;
  std::string_view rel = t.deprel;
  std::string_view base = BaseRelation(rel);
  if (base == "det" || base == "amod" || base == "nummod" || rel == "nmod:poss")
    return true;
  if (base == "advmod" && ToLower(t.form) == "how") {
    const std::string &head_pos = sentence.token(t.head).upos;
    return head_pos == "ADJ" || head_pos == "ADV" || head_pos == "NUM" ||
           head_pos == "DET";
  }
  return false;
}

// Relations that stay inside a nominal or adjectival phrase.
bool IsPhraseInternal(std::string_view deprel) {
  std::string_view base = BaseRelation(deprel);
  return base == "det" || base == "amod" || base == "nummod" ||
         base == "nmod" || base == "compound" || base == "flat" ||
         base == "fixed" || base == "case" || base == "advmod";
}

void CollectPhrase(const DepSentence &sentence, int id, std::set<int> *ids) {
  ids->insert(id);
  for (const DepToken &child : Children(sentence, id)) {
    if (IsPhraseInternal(child.deprel)) {
      for (int sub : SubtreeIds(sentence, child.id)) ids->insert(sub);
    }
  }
}

bool IsAuxRelation(std::string_view deprel) {
  return BaseRelation(deprel) == "aux";
}

std::optional<int> FirstChild(const DepSentence &sentence, int head,
                              bool (*pred)(std::string_view)) {
  for (const DepToken &t : sentence.tokens) {
    if (t.head == head && pred(t.deprel)) return t.id;
  }
  return std::nullopt;
}

bool IsCopRelation(std::string_view deprel) { return deprel == "cop"; }

}  // namespace

std::string QuestionTypeName(QuestionType type) {
  switch (type) {
    case QuestionType::kWho: return "Who";
    case QuestionType::kWhat: return "What";
    case QuestionType::kWhen: return "When";
    case QuestionType::kWhere: return "Where";
    case QuestionType::kWhich: return "Which";
    case QuestionType::kWhose: return "Whose";
    case QuestionType::kWhy: return "Why";
    case QuestionType::kHow: return "How";
  }
  return "What";
}

std::optional<QuestionType> ParseQuestionType(std::string_view name) {
  std::string lower = ToLower(name);
  for (QuestionType type : kAllQuestionTypes) {
    if (ToLower(QuestionTypeName(type)) == lower) return type;
  }
  return std::nullopt;
}

std::optional<QuestionType> WhWordType(std::string_view word) {
  std::string w = ToLower(word);
  if (w == "who" || w == "whom") return QuestionType::kWho;
  if (w == "what") return QuestionType::kWhat;
  if (w == "when") return QuestionType::kWhen;
  if (w == "where") return QuestionType::kWhere;
  if (w == "which") return QuestionType::kWhich;
  if (w == "whose") return QuestionType::kWhose;
  if (w == "why") return QuestionType::kWhy;
  if (w == "how") return QuestionType::kHow;
  return std::nullopt;
}

bool IsSubjectRelation(std::string_view deprel) {
  std::string_view base = BaseRelation(deprel);
  return base == "nsubj" || base == "csubj";
}

int FindWhToken(const DepSentence &sentence) {
  int leftmost = 0;
  for (const DepToken &t : sentence.tokens) {
    if (!WhWordType(t.form)) continue;
    if (leftmost == 0) leftmost = t.id;
    if (!InsideRelativeClause(sentence, t.id)) return t.id;
  }
  if (leftmost == 0) {
    throw NotWhQuestion("no wh word in '" +
                        (sentence.text.empty() ? sentence.sent_id
                                               : sentence.text) +
                        "'");
  }
  return leftmost;
}

QuestionType ClassifyQuestion(const DepSentence &sentence) {
  return *WhWordType(sentence.token(FindWhToken(sentence)).form);
}

std::optional<QuestionType> ClassifyQuestionText(std::string_view text) {
  for (const std::string &word : Normalize(text)) {
    if (auto type = WhWordType(word)) return type;
  }
  return std::nullopt;
}

WhAnalysis Analyze(const DepSentence &sentence) {
  WhAnalysis a;
  a.question = sentence;
  a.root = sentence.root();
  if (a.root == 0) throw AnalysisError("no root token in parse");

  a.wh_token = FindWhToken(sentence);
  a.qtype = *WhWordType(sentence.token(a.wh_token).form);

  int head = a.wh_token;
  while (ProjectsWhPhrase(sentence, sentence.token(head))) {
    head = sentence.token(head).head;
  }
  a.wh_phrase_head = head;

  std::set<int> phrase;
  CollectPhrase(sentence, head, &phrase);
  a.wh_phrase = {a.wh_token, a.wh_token};
  while (phrase.count(a.wh_phrase.first - 1)) --a.wh_phrase.first;
  while (phrase.count(a.wh_phrase.last + 1)) ++a.wh_phrase.last;

  const DepToken &head_token = sentence.token(head);
  const bool copular_predicate = FirstChild(sentence, head, IsCopRelation)
                                     .has_value();
  int predicate = a.root;
  if (copular_predicate) {
    a.wh_attachment = head;
    predicate = head;
  } else {
    int governor = head_token.head;
    while (governor != 0 && sentence.token(governor).upos == "ADP") {
      governor = sentence.token(governor).head;
    }
    if (governor == 0) {
      throw AnalysisError("wh word '" + sentence.token(a.wh_token).form +
                          "' has no governor");
    }
    a.wh_attachment = governor;
  }

  a.subject = FirstChild(sentence, predicate, IsSubjectRelation);
  if (a.subject && *a.subject == head) a.subject_wh = true;
  if (!copular_predicate && IsSubjectRelation(head_token.deprel) &&
      head_token.head == predicate) {
    a.subject_wh = true;
    a.subject = head;
  }

  // Candidates for the fronted verbal element, in surface order.
  std::vector<std::pair<int, bool>> verbal;  // (id, is_copula)
  for (const DepToken &t : sentence.tokens) {
    if (t.head != predicate) continue;
    if (IsAuxRelation(t.deprel)) verbal.emplace_back(t.id, false);
    if (t.deprel == "cop") verbal.emplace_back(t.id, true);
  }
  const DepToken &pred_token = sentence.token(predicate);
  if (!copular_predicate && ToLower(pred_token.lemma) == "be" &&
      !FirstChild(sentence, predicate, IsCopRelation)) {
    verbal.emplace_back(predicate, true);
    std::sort(verbal.begin(), verbal.end());
  }
  if (!verbal.empty()) {
    std::optional<std::pair<int, bool>> chosen;
    if (a.subject && !a.subject_wh) {
      for (const auto &v : verbal) {
        if (v.first < *a.subject) {
          chosen = v;
          break;
        }
      }
    }
    if (!chosen) {
      // Nothing precedes the subject: prefer an auxiliary, which the engine
      // leaves in place.
      chosen = verbal.front();
      for (const auto &v : verbal) {
        if (!v.second) {
          chosen = v;
          break;
        }
      }
    }
    if (chosen->second) {
      a.copula = chosen->first;
    } else {
      a.aux = chosen->first;
    }
  }

  // Prepositions/particles stranded after the wh phrase.
  std::set<int> dangling;
  for (const DepToken &t : sentence.tokens) {
    if (t.id <= a.wh_phrase.last) continue;
    const bool wh_dependent = t.head == a.wh_token || t.head == head;
    const bool clause_dependent =
        t.head == a.root || t.head == a.wh_attachment;
    if (wh_dependent && (BaseRelation(t.deprel) == "case" || t.upos == "ADP")) {
      dangling.insert(t.id);
    } else if (clause_dependent && !copular_predicate) {
      const bool leaf = Children(sentence, t.id).empty();
      if (t.deprel == "compound:prt" || (t.upos == "ADP" && leaf)) {
        dangling.insert(t.id);
      }
    }
  }
  a.dangling_preps.assign(dangling.begin(), dangling.end());

  for (int id = a.wh_phrase.first; id < a.wh_token; ++id) {
    const DepToken &t = sentence.token(id);
    if (t.head == head && BaseRelation(t.deprel) == "case") {
      a.fronted_prep = id;
      break;
    }
  }
  return a;
}

}  // namespace qa2d
