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

#include "qa2d/engine.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "qa2d/data_files.h"
#include "qa2d/errors.h"
#include "qa2d/text_utils.h"

namespace qa2d {
namespace {

std::string_view BaseRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

bool IsAbbreviation(std::string_view word) {
  static const std::set<std::string> kAbbreviations = {
      "mr", "mrs", "ms", "dr", "jr", "sr", "st", "inc", "ltd", "co", "corp",
      "vs", "etc", "prof", "gen", "col", "lt", "sgt", "capt", "gov", "sen",
      "rep", "no", "mt", "ft", "jan", "feb", "aug", "sept", "oct", "nov", "dec"};
  std::string w = ToLower(word);
  if (!w.empty() && w.back() == '.') w.pop_back();
  if (w.find('.') != std::string::npos) return true;  // "d.c.", "u.s."
  return kAbbreviations.count(w) > 0;
}

bool IsNegation(const DepToken &t) {
  std::string form = ToLower(t.form);
  return form == "not" || form == "n't";
}

bool AttachesLeft(const std::string &token) {
  if (token == "," || token == "." || token == ";" || token == ":" ||
      token == "!" || token == "%" || token == ")" || token == "]" ||
      token == "'" || token == "n't" || token == "...") {
    return true;
  }
  // Clitics: 's, 're, 'll, 'd, 've, 'm.
  return token.size() >= 2 && token[0] == '\'' &&
         std::isalpha(static_cast<unsigned char>(token[1]));
}

bool AttachesRight(const std::string &token) {
  return token == "(" || token == "[";
}

bool IsAcronym(std::string_view word) {
  if (word.size() < 2) return false;
  return std::all_of(word.begin(), word.end(), [](char c) {
    return !std::islower(static_cast<unsigned char>(c));
  });
}

// Child of `ancestor` on the path down to `id`, or 0 when `id` is not a
// proper descendant.
int TopChild(const DepSentence &s, int ancestor, int id) {
  int current = id;
  while (current != 0) {
    int head = s.token(current).head;
    if (head == ancestor) return current;
    current = head;
  }
  return 0;
}

// Relations that end the argument region of a predicate: the answer to an
// adverbial question is placed before them.
bool EndsArgumentRegion(std::string_view deprel) {
  static const std::set<std::string, std::less<>> kStop = {
      "advcl", "xcomp", "ccomp", "csubj", "parataxis", "conj", "cc",
      "acl", "punct", "mark", "nsubj", "obl:tmod", "obl:npmod",
      "nmod:tmod", "vocative", "discourse", "dislocated"};
  return kStop.count(deprel) > 0 || kStop.count(BaseRelation(deprel)) > 0;
}

int IndexOfOrigin(const std::vector<SurfaceToken> &seq, int origin) {
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].origin == origin) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::string> Texts(const std::vector<SurfaceToken> &seq) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (const SurfaceToken &t : seq) out.push_back(t.text);
  return out;
}

}  // namespace

std::map<std::string, std::string> ParseArticleExceptions(std::string_view text) {
  std::map<std::string, std::string> out;
  for (auto &[name, article] : ParseKeyValueData(text)) out[name] = article;
  return out;
}

const std::map<std::string, std::string> &BundledArticleExceptions() {
  static const std::map<std::string, std::string> exceptions =
      ParseArticleExceptions(bundled::ArticleExceptions());
  return exceptions;
}

void ValidateConfig(const EngineConfig &config) {
  if (config.emit_alternatives < 1) {
    throw std::invalid_argument("emit_alternatives must be at least 1");
  }
}

std::string CleanAnswer(std::string_view answer) {
  std::string a = Trim(answer);
  while (!a.empty()) {
    char last = a.back();
    if (last == ',' || last == ';' || last == ':' || last == '!' ||
        last == '?') {
      a.pop_back();
    } else if (last == '.') {
      std::vector<std::string> words = SplitWhitespace(a);
      if (IsAbbreviation(words.back())) break;
      a.pop_back();
    } else {
      break;
    }
    a = Trim(a);
  }
  return a;
}

std::vector<std::string> TokenizeAnswer(std::string_view answer) {
  std::vector<std::string> tokens;
  for (std::string word : SplitWhitespace(answer)) {
    std::vector<std::string> trailing;
    while (word.size() > 1 && (word.front() == '(' || word.front() == '"')) {
      tokens.push_back(std::string(1, word.front()));
      word.erase(word.begin());
    }
    while (word.size() > 1 &&
           (word.back() == ',' || word.back() == ';' || word.back() == ':' ||
            word.back() == ')' || word.back() == '"')) {
      trailing.insert(trailing.begin(), std::string(1, word.back()));
      word.pop_back();
    }
    tokens.push_back(word);
    tokens.insert(tokens.end(), trailing.begin(), trailing.end());
  }
  return tokens;
}

InversionResult UndoInversion(const WhAnalysis &a, const VerbLexicon &lexicon) {
  const DepSentence &q = a.question;
  InversionResult result;
  for (const DepToken &t : q.tokens) {
    if (t.form == "?") continue;
    result.tokens.push_back({t.form, t.id});
  }
  if (a.subject_wh) {
    result.rules.push_back("undo-inversion:subject-wh");
    return result;
  }
  std::optional<int> fronted = a.aux ? a.aux : a.copula;
  if (!fronted) {
    result.rules.push_back("undo-inversion:none");
    return result;
  }
  if (!a.subject) {
    throw TransformError("fronted '" + q.token(*fronted).form +
                         "' but the parse has no subject");
  }
  if (*fronted > *a.subject) {
    result.rules.push_back("undo-inversion:none");
    return result;
  }

  // The fronted element travels with an adjacent negation ("did n't").
  std::vector<int> group = {*fronted};
  for (int id = *fronted + 1; id < *a.subject && IsNegation(q.token(id)); ++id) {
    group.push_back(id);
  }
  const bool negated = group.size() > 1;
  std::vector<int> subject_ids = SubtreeIds(q, *a.subject);
  const int subject_end = subject_ids.back();

  std::vector<SurfaceToken> moved;
  std::vector<SurfaceToken> rest;
  for (const SurfaceToken &t : result.tokens) {
    if (std::find(group.begin(), group.end(), t.origin) != group.end()) {
      moved.push_back(t);
    } else {
      rest.push_back(t);
    }
  }
  int anchor = IndexOfOrigin(rest, subject_end);
  if (anchor < 0) {
    // Subject ends in the question mark or inside the wh phrase; keep the
    // parse order.
    throw TransformError("subject phrase not found in surface order");
  }
  rest.insert(rest.begin() + anchor + 1, moved.begin(), moved.end());
  result.tokens = std::move(rest);

  const DepToken &aux = q.token(*fronted);
  const std::string aux_form = ToLower(aux.form);
  const bool do_support = a.aux.has_value() && !negated &&
                          (ToLower(aux.lemma) == "do" || aux_form == "do" ||
                           aux_form == "does" || aux_form == "did");
  if (!do_support) {
    result.rules.push_back("undo-inversion:move-" +
                           std::string(a.aux ? "aux" : "copula"));
    return result;
  }

  const DepToken &verb = q.token(aux.head);
  std::string lemma = verb.lemma.empty() ? verb.form : verb.lemma;
  std::string inflected = Reinflect(lemma, aux_form, lexicon);
  std::vector<SurfaceToken> out;
  for (SurfaceToken &t : result.tokens) {
    if (t.origin == aux.id) continue;
    if (t.origin == verb.id) t.text = inflected;
    out.push_back(std::move(t));
  }
  result.tokens = std::move(out);
  result.rules.push_back("do-support:" + aux_form + ":" + inflected);
  return result;
}

PrepositionSelection SelectPreposition(QuestionType qtype, const WhAnalysis &a,
                                       std::string_view answer,
                                       const PrepositionTable &table) {
  const DepSentence &q = a.question;
  std::vector<std::string> answer_tokens = TokenizeAnswer(CleanAnswer(answer));
  PrepositionSelection sel;
  if (table.BlocksInsertion(answer_tokens)) {
    sel.rule = "preposition:answer-leading";
    return sel;
  }
  for (auto it = a.dangling_preps.rbegin(); it != a.dangling_preps.rend(); ++it) {
    const DepToken &t = q.token(*it);
    if (t.deprel == "compound:prt") continue;
    sel.preposition = ToLower(t.form);
    sel.source = PrepositionSource::kStranded;
    sel.token = t.id;
    sel.rule = "preposition:stranded:" + *sel.preposition;
    return sel;
  }
  if (a.fronted_prep) {
    sel.preposition = ToLower(q.token(*a.fronted_prep).form);
    sel.source = PrepositionSource::kFronted;
    sel.token = a.fronted_prep;
    sel.rule = "preposition:fronted:" + *sel.preposition;
    return sel;
  }
  PrepositionChoice choice;
  if (qtype == QuestionType::kWhen) {
    choice = table.ForWhen(answer_tokens);
  } else if (qtype == QuestionType::kWhere) {
    const DepToken &verb = q.token(a.wh_attachment);
    choice = table.ForWhere(answer_tokens,
                            verb.lemma.empty() ? ToLower(verb.form) : verb.lemma);
  } else {
    sel.rule = "preposition:none";
    return sel;
  }
  sel.preposition = choice.preposition;
  sel.source = choice.preposition ? PrepositionSource::kTable
                                  : PrepositionSource::kNone;
  sel.rule = "preposition:" + choice.rule +
             (choice.preposition ? ":" + *choice.preposition : "");
  return sel;
}

std::string InsertArticle(std::string_view answer,
                          const std::map<std::string, std::string> &exceptions) {
  std::string a = Trim(answer);
  if (SplitWhitespace(a).size() != 1) return a;
  auto it = exceptions.find(a);
  if (it == exceptions.end()) return a;
  return it->second + " " + a;
}

std::string Realize(const std::vector<std::string> &tokens) {
  if (tokens.empty()) throw std::invalid_argument("no tokens to realize");
  std::vector<std::string> kept;
  for (const std::string &t : tokens) {
    if (t.empty() || t == "?") continue;
    kept.push_back(t);
  }
  // Sentence-final punctuation other than the period is dropped.
  while (!kept.empty() && (kept.back() == "," || kept.back() == ";" ||
                           kept.back() == ":" || kept.back() == "!" ||
                           kept.back() == "." || kept.back() == "...")) {
    kept.pop_back();
  }
  if (kept.empty()) throw TransformError("empty realization");

  std::string text;
  for (size_t i = 0; i < kept.size(); ++i) {
    if (i > 0 && !AttachesLeft(kept[i]) && !AttachesRight(kept[i - 1])) {
      text.push_back(' ');
    }
    text.append(kept[i]);
  }
  // Capitalize the sentence-initial word; a leading number or symbol
  // ("300 people ...") stays as it is.
  size_t first = text.find_first_not_of("\"'([");
  if (first != std::string::npos) {
    text[first] = static_cast<char>(
        std::toupper(static_cast<unsigned char>(text[first])));
  }
  if (text.back() != '.') text.push_back('.');
  return text;
}

Qa2dEngine::Qa2dEngine(EngineConfig config, const VerbLexicon &lexicon,
                       const PrepositionTable &table)
    : config_(std::move(config)), lexicon_(&lexicon), table_(&table) {
  ValidateConfig(config_);
}

std::vector<DeclarativeCandidate> Qa2dEngine::Transform(
    const WhAnalysis &a, std::string_view raw_answer) const {
  const DepSentence &q = a.question;
  const std::string cleaned = CleanAnswer(raw_answer);
  if (cleaned.empty()) {
    throw TransformError("empty answer for question '" + q.sent_id + "'");
  }

  std::vector<std::string> rules;
  rules.push_back("locate-wh:" + QuestionTypeName(a.qtype) + ":" +
                  std::to_string(a.wh_phrase.first) + "-" +
                  std::to_string(a.wh_phrase.last));
  rules.push_back("attach:" + q.token(a.wh_attachment).form);

  // (III) de-inversion.
  InversionResult inv;
  try {
    inv = UndoInversion(a, *lexicon_);
  } catch (const TransformError &e) {
    inv = InversionResult();
    for (const DepToken &t : q.tokens) {
      if (t.form != "?") inv.tokens.push_back({t.form, t.id});
    }
    inv.rules.push_back("undo-inversion:fallback");
  }
  rules.insert(rules.end(), inv.rules.begin(), inv.rules.end());

  // (IV) wh phrase deletion, keeping a residual noun when configured.
  std::vector<SurfaceToken> residual;
  if (config_.copy_wh_phrase &&
      (a.qtype == QuestionType::kWhich || a.qtype == QuestionType::kHow)) {
    bool has_noun = false;
    for (int id = a.wh_token + 1; id <= a.wh_phrase.last; ++id) {
      const DepToken &t = q.token(id);
      const std::string lower = ToLower(t.form);
      if (lower == "many" || lower == "much" || t.upos == "ADP") continue;
      if (t.upos == "NOUN" || t.upos == "PROPN") has_noun = true;
      residual.push_back({t.form, id});
    }
    if (!has_noun) residual.clear();
  }
  std::vector<SurfaceToken> seq;
  for (SurfaceToken &t : inv.tokens) {
    if (t.origin > 0 && a.wh_phrase.Contains(t.origin)) continue;
    if (t.origin == 1) {
      const DepToken &first = q.token(1);
      if (first.upos != "PROPN" && first.form != "I" && !IsAcronym(first.form) &&
          !t.text.empty()) {
        t.text[0] = static_cast<char>(
            std::tolower(static_cast<unsigned char>(t.text[0])));
      }
    }
    seq.push_back(std::move(t));
  }
  rules.push_back("delete-wh-phrase");
  if (!residual.empty()) rules.push_back("copy-wh-residual");

  // (V) answer insertion.
  PrepositionSelection sel = SelectPreposition(a.qtype, a, cleaned, *table_);
  rules.push_back(sel.rule);
  const std::string with_article =
      InsertArticle(cleaned, config_.article_exceptions);
  if (with_article != cleaned) rules.push_back("article:" + with_article);
  std::vector<SurfaceToken> answer_seq;
  for (const std::string &t : TokenizeAnswer(with_article)) {
    answer_seq.push_back({t, kAnswerOrigin});
  }
  answer_seq.insert(answer_seq.end(), residual.begin(), residual.end());

  const int head = a.wh_phrase_head;
  const DepToken &head_token = q.token(head);
  std::optional<int> cop_child;
  for (const DepToken &t : q.tokens) {
    if (t.head == head && t.deprel == "cop") {
      cop_child = t.id;
      break;
    }
  }
  const bool copular_predicate = cop_child.has_value() && a.wh_attachment == head;

  // Insert position in `seq`: the answer goes before index `insert_at`.
  int insert_at = -1;
  std::string placement;
  std::optional<int> stranded;
  for (auto it = a.dangling_preps.rbegin(); it != a.dangling_preps.rend(); ++it) {
    if (q.token(*it).deprel != "compound:prt") {
      stranded = *it;
      break;
    }
  }
  if (copular_predicate) {
    int idx = IndexOfOrigin(seq, *cop_child);
    if (idx >= 0) insert_at = idx + 1;
    placement = "after-copula";
  } else if (a.subject_wh) {
    insert_at = static_cast<int>(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) {
      if (seq[i].origin > a.wh_phrase.last) {
        insert_at = static_cast<int>(i);
        break;
      }
    }
    placement = "subject-position";
  } else if (stranded && IndexOfOrigin(seq, *stranded) >= 0) {
    insert_at = IndexOfOrigin(seq, *stranded) + 1;
    placement = "after-stranded-preposition";
  } else {
    const int pred = a.wh_attachment;
    const std::string_view rel = head_token.deprel;
    const std::string_view base = BaseRelation(rel);
    int idx = IndexOfOrigin(seq, pred);
    if (idx < 0) {
      insert_at = static_cast<int>(seq.size());
      placement = "sentence-end";
    } else if (base == "nsubj" || base == "csubj") {
      // Subject of an embedded clause: before the clause's first token.
      insert_at = static_cast<int>(seq.size());
      for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].origin > 0 && Dominates(q, pred, seq[i].origin)) {
          insert_at = static_cast<int>(i);
          break;
        }
      }
      placement = "embedded-subject-position";
    } else if (base == "obj" || base == "iobj" || base == "xcomp" ||
               base == "ccomp" || base == "dep") {
      int last = idx;
      for (size_t i = idx + 1; i < seq.size(); ++i) {
        if (seq[i].origin <= 0) break;
        int top = TopChild(q, pred, seq[i].origin);
        if (top == 0) break;
        std::string_view top_rel = q.token(top).deprel;
        if (top_rel != "compound:prt" && BaseRelation(top_rel) != "iobj") break;
        last = static_cast<int>(i);
      }
      insert_at = last + 1;
      placement = "object-position";
    } else {
      int last = idx;
      for (size_t i = idx + 1; i < seq.size(); ++i) {
        if (seq[i].origin <= 0) break;
        int top = TopChild(q, pred, seq[i].origin);
        if (top == 0 || EndsArgumentRegion(q.token(top).deprel)) break;
        last = static_cast<int>(i);
      }
      insert_at = last + 1;
      placement = "adverbial-position";
    }
  }
  if (insert_at < 0) {
    insert_at = static_cast<int>(seq.size());
    placement = "sentence-end";
  }
  rules.push_back("insert-answer:" + placement);
  rules.push_back("realize");

  auto build = [&](const std::optional<std::string> &prep) {
    std::vector<SurfaceToken> segment;
    if (prep) segment.push_back({*prep, kInsertedOrigin});
    segment.insert(segment.end(), answer_seq.begin(), answer_seq.end());
    std::vector<SurfaceToken> out = seq;
    out.insert(out.begin() + insert_at, segment.begin(), segment.end());
    return out;
  };
  const bool inserts_prep = sel.source == PrepositionSource::kTable ||
                            sel.source == PrepositionSource::kFronted;

  std::vector<DeclarativeCandidate> candidates;
  std::set<std::string> seen;
  auto emit = [&](const std::vector<SurfaceToken> &tokens,
                  std::vector<std::string> applied) {
    if (static_cast<int>(candidates.size()) >= config_.emit_alternatives) return;
    if (tokens.empty()) throw TransformError("empty realization");
    DeclarativeCandidate c;
    c.tokens = Texts(tokens);
    c.text = Realize(c.tokens);
    if (!seen.insert(c.text).second) return;
    for (const SurfaceToken &t : tokens) c.origins.push_back(t.origin);
    c.applied_rules = std::move(applied);
    c.rank = static_cast<int>(candidates.size()) + 1;
    candidates.push_back(std::move(c));
  };

  emit(build(inserts_prep ? sel.preposition : std::nullopt), rules);

  // Copular identity questions also read "A is X."
  const bool identity = copular_predicate && a.qtype != QuestionType::kWhen &&
                        a.qtype != QuestionType::kWhere &&
                        a.qtype != QuestionType::kWhy &&
                        a.qtype != QuestionType::kHow;
  if (identity && std::isupper(static_cast<unsigned char>(with_article[0]))) {
    std::vector<SurfaceToken> inverted = answer_seq;
    int cop_idx = IndexOfOrigin(seq, *cop_child);
    if (cop_idx >= 0) {
      inverted.push_back(seq[cop_idx]);
      for (size_t i = 0; i < seq.size(); ++i) {
        if (static_cast<int>(i) != cop_idx) inverted.push_back(seq[i]);
      }
      std::vector<std::string> alt_rules = rules;
      alt_rules.push_back("copular-answer-first");
      emit(inverted, alt_rules);
    }
  }
  if (sel.source == PrepositionSource::kTable) {
    for (const std::string &p : table_->Inventory(a.qtype)) {
      if (p == *sel.preposition) continue;
      std::vector<std::string> alt_rules = rules;
      alt_rules.push_back("preposition-alternative:" + p);
      emit(build(p), alt_rules);
    }
  }
  return candidates;
}

}  // namespace qa2d
