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

#include "doctest.h"
#include "qa2d/errors.h"
#include "test_support.h"

namespace qa2d {
namespace {

const testing::Fixture &Find(const std::vector<testing::Fixture> &all,
                             const std::string &id) {
  for (const auto &f : all) {
    if (f.id == id) return f;
  }
  throw std::out_of_range(id);
}

int IdOf(const DepSentence &s, const std::string &form, int nth = 1) {
  for (const DepToken &t : s.tokens) {
    if (t.form == form && --nth == 0) return t.id;
  }
  return 0;
}

DepSentence Parse(const std::string &conllu) { return ParseConllu(conllu)[0]; }

TEST_CASE("classification by wh word") {
  auto fixtures = testing::LoadFixtures();
  CHECK(ClassifyQuestion(Find(fixtures, "how-many").parse) == QuestionType::kHow);
  CHECK(ClassifyQuestion(Find(fixtures, "core-who").parse) == QuestionType::kWho);
  CHECK(ClassifyQuestion(Find(fixtures, "core-whom-object").parse) ==
        QuestionType::kWho);
  CHECK(ClassifyQuestion(Find(fixtures, "core-whose").parse) ==
        QuestionType::kWhose);
  for (const auto &f : fixtures) {
    CHECK(QuestionTypeName(ClassifyQuestion(f.parse)) == f.qtype);
  }
}

TEST_CASE("polar question is not a wh question") {
  DepSentence s = Parse(
      "1\tIs\tbe\tAUX\t_\t_\t4\tcop\t_\t_\n"
      "2\tthe\tthe\tDET\t_\t_\t3\tdet\t_\t_\n"
      "3\tsky\tsky\tNOUN\t_\t_\t4\tnsubj\t_\t_\n"
      "4\tblue\tblue\tADJ\t_\t_\t0\troot\t_\t_\n"
      "5\t?\t?\tPUNCT\t_\t_\t4\tpunct\t_\t_\n");
  CHECK_THROWS_AS(ClassifyQuestion(s), NotWhQuestion);
  CHECK_THROWS_AS(Analyze(s), NotWhQuestion);
}

TEST_CASE("text classification") {
  CHECK(ClassifyQuestionText("How much did it cost?") == QuestionType::kHow);
  CHECK(ClassifyQuestionText("To whom was it sent?") == QuestionType::kWho);
  CHECK_FALSE(ClassifyQuestionText("Is it raining?").has_value());
}

TEST_CASE("type names round trip") {
  for (QuestionType t : kAllQuestionTypes) {
    CHECK(ParseQuestionType(QuestionTypeName(t)) == t);
  }
  CHECK_FALSE(ParseQuestionType("Whither").has_value());
}

TEST_CASE("wh word inside a relative clause loses to the main one") {
  DepSentence s = Parse(
      "1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n"
      "2\tman\tman\tNOUN\t_\t_\t5\tnsubj\t_\t_\n"
      "3\twho\twho\tPRON\t_\t_\t4\tnsubj\t_\t_\n"
      "4\tleft\tleave\tVERB\t_\t_\t2\tacl:relcl\t_\t_\n"
      "5\tsaid\tsay\tVERB\t_\t_\t0\troot\t_\t_\n"
      "6\twhat\twhat\tPRON\t_\t_\t5\tobj\t_\t_\n"
      "7\t?\t?\tPUNCT\t_\t_\t5\tpunct\t_\t_\n");
  CHECK(FindWhToken(s) == 6);
  CHECK(ClassifyQuestion(s) == QuestionType::kWhat);
}

TEST_CASE("subject question") {
  auto fixtures = testing::LoadFixtures();
  WhAnalysis a = Analyze(Find(fixtures, "core-who").parse);
  CHECK(a.subject_wh);
  CHECK(a.root == 2);
  CHECK_FALSE(a.aux.has_value());
  CHECK_FALSE(a.copula.has_value());
  CHECK(a.wh_phrase == TokenSpan{1, 1});
  CHECK(a.qtype == QuestionType::kWho);
}

TEST_CASE("attachment follows the parse, not the nearest verb") {
  auto fixtures = testing::LoadFixtures();
  const DepSentence &s = Find(fixtures, "core-where-attachment").parse;
  WhAnalysis a = Analyze(s);
  CHECK(a.wh_attachment == IdOf(s, "go"));
  CHECK(a.wh_attachment != IdOf(s, "buy"));
  CHECK(a.aux == IdOf(s, "did"));
  CHECK(a.subject == IdOf(s, "Sam"));
}

TEST_CASE("stranded preposition of the wh phrase") {
  auto fixtures = testing::LoadFixtures();
  const DepSentence &s = Find(fixtures, "core-which-stranded").parse;
  WhAnalysis a = Analyze(s);
  const int to = IdOf(s, "to");
  CHECK(std::find(a.dangling_preps.begin(), a.dangling_preps.end(), to) !=
        a.dangling_preps.end());
  CHECK(a.wh_attachment == IdOf(s, "send"));
  CHECK(a.wh_phrase == TokenSpan{1, 2});
  CHECK(a.qtype == QuestionType::kWhich);
}

TEST_CASE("preposition attached to the verb is also dangling") {
  auto fixtures = testing::LoadFixtures();
  const DepSentence &s = Find(fixtures, "which-attached-to-verb").parse;
  WhAnalysis a = Analyze(s);
  CHECK(a.dangling_preps == std::vector<int>{IdOf(s, "to")});
  CHECK(s.token(IdOf(s, "to")).head == IdOf(s, "send"));
}

TEST_CASE("copular question") {
  auto fixtures = testing::LoadFixtures();
  const DepSentence &s = Find(fixtures, "core-copular-example").parse;
  WhAnalysis a = Analyze(s);
  CHECK(a.copula == 2);
  CHECK_FALSE(a.aux.has_value());
  CHECK(a.subject == IdOf(s, "example"));
  CHECK(a.wh_attachment == 1);
  CHECK_FALSE(a.subject_wh);
}

TEST_CASE("how projects through its adjective") {
  auto fixtures = testing::LoadFixtures();
  WhAnalysis many = Analyze(Find(fixtures, "how-many").parse);
  CHECK(many.wh_phrase == TokenSpan{1, 3});
  CHECK(many.subject_wh);
  WhAnalysis old = Analyze(Find(fixtures, "how-old").parse);
  CHECK(old.wh_phrase == TokenSpan{1, 2});
  CHECK(old.copula == 3);
  // "Why" modifying an adjective stays a one-word phrase.
  WhAnalysis why = Analyze(Find(fixtures, "why-copular-adjective").parse);
  CHECK(why.wh_phrase == TokenSpan{1, 1});
  CHECK(why.copula == 2);
}

TEST_CASE("fronted preposition is part of the wh phrase") {
  auto fixtures = testing::LoadFixtures();
  WhAnalysis a = Analyze(Find(fixtures, "which-fronted-prep").parse);
  CHECK(a.wh_token == 2);
  CHECK(a.wh_phrase == TokenSpan{1, 3});
  CHECK(a.fronted_prep == 1);
}

TEST_CASE("invariants over the fixture corpus") {
  for (const auto &f : testing::LoadFixtures()) {
    CAPTURE(f.id);
    WhAnalysis a = Analyze(f.parse);
    CHECK(a.wh_phrase.Contains(a.wh_token));
    CHECK_FALSE((a.aux.has_value() && a.copula.has_value()));
    if (a.subject_wh) {
      CHECK((!a.subject.has_value() || *a.subject == a.wh_phrase_head));
      if (a.aux) CHECK(ToLower(f.parse.token(*a.aux).lemma) != "do");
    }
    // Do-support leaves the main verb bare in the question.
    if (a.aux && ToLower(f.parse.token(*a.aux).lemma) == "do") {
      const DepToken &verb = f.parse.token(f.parse.token(*a.aux).head);
      CHECK(ToLower(verb.form) == verb.lemma);
    }
    for (int id : a.dangling_preps) CHECK(id > a.wh_phrase.last);
    // Repeated analysis is identical and leaves the input untouched.
    DepSentence copy = f.parse;
    WhAnalysis b = Analyze(copy);
    CHECK(copy == f.parse);
    CHECK(b.wh_token == a.wh_token);
    CHECK(b.wh_phrase == a.wh_phrase);
    CHECK(b.aux == a.aux);
    CHECK(b.copula == a.copula);
    CHECK(b.subject == a.subject);
    CHECK(b.wh_attachment == a.wh_attachment);
    CHECK(b.dangling_preps == a.dangling_preps);
  }
}

TEST_CASE("wh root without a copula has no governor") {
  DepSentence s = Parse(
      "1\tWhat\twhat\tPRON\t_\t_\t0\troot\t_\t_\n"
      "2\t?\t?\tPUNCT\t_\t_\t1\tpunct\t_\t_\n");
  CHECK_THROWS_AS(Analyze(s), AnalysisError);
}

}  // namespace
}  // namespace qa2d
