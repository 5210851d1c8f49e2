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

#include "qa2d/verb_lexicon.h"

#include <stdexcept>

#include "doctest.h"
#include "qa2d/data_files.h"
#include "qa2d/errors.h"

namespace qa2d {
namespace {

TEST_CASE("reinflect by auxiliary form") {
  CHECK(Reinflect("end", "did") == "ended");
  CHECK(Reinflect("run", "does") == "runs");
  CHECK(Reinflect("go", "did") == "went");
  CHECK(Reinflect("go", "do") == "go");
  CHECK(Reinflect("go", "does") == "goes");
  CHECK(Reinflect("have", "does") == "has");
  CHECK(Reinflect("be", "does") == "is");
  CHECK(Reinflect("end", "Did") == "ended");
  CHECK_THROWS_AS(Reinflect("", "did"), std::invalid_argument);
  CHECK_THROWS_AS(Reinflect("end", "was"), std::invalid_argument);
}

// Past tenses transcribed from a standard English irregular-verb table,
// independent of the bundled data file.
TEST_CASE("irregular past tenses agree with a reference inventory") {
  const std::pair<const char *, const char *> kReference[] = {
      {"arise", "arose"},   {"awake", "awoke"},     {"be", "was"},
      {"bear", "bore"},     {"beat", "beat"},       {"become", "became"},
      {"begin", "began"},   {"bend", "bent"},       {"bet", "bet"},
      {"bind", "bound"},    {"bite", "bit"},        {"bleed", "bled"},
      {"blow", "blew"},     {"break", "broke"},     {"breed", "bred"},
      {"bring", "brought"}, {"build", "built"},     {"burst", "burst"},
      {"buy", "bought"},    {"catch", "caught"},    {"choose", "chose"},
      {"cling", "clung"},   {"come", "came"},       {"cost", "cost"},
      {"creep", "crept"},   {"cut", "cut"},         {"deal", "dealt"},
      {"dig", "dug"},       {"do", "did"},          {"draw", "drew"},
      {"drink", "drank"},   {"drive", "drove"},     {"eat", "ate"},
      {"fall", "fell"},     {"feed", "fed"},        {"feel", "felt"},
      {"fight", "fought"},  {"find", "found"},      {"flee", "fled"},
      {"fly", "flew"},      {"forbid", "forbade"},  {"forget", "forgot"},
      {"forgive", "forgave"}, {"freeze", "froze"},  {"get", "got"},
      {"give", "gave"},     {"go", "went"},         {"grind", "ground"},
      {"grow", "grew"},     {"hang", "hung"},       {"have", "had"},
      {"hear", "heard"},    {"hide", "hid"},        {"hit", "hit"},
      {"hold", "held"},     {"hurt", "hurt"},       {"keep", "kept"},
      {"kneel", "knelt"},   {"know", "knew"},       {"lay", "laid"},
      {"lead", "led"},      {"leave", "left"},      {"lend", "lent"},
      {"let", "let"},       {"lie", "lay"},         {"lose", "lost"},
      {"make", "made"},     {"mean", "meant"},      {"meet", "met"},
      {"pay", "paid"},      {"put", "put"},         {"quit", "quit"},
      {"read", "read"},     {"ride", "rode"},       {"ring", "rang"},
      {"rise", "rose"},     {"run", "ran"},         {"say", "said"},
      {"see", "saw"},       {"seek", "sought"},     {"sell", "sold"},
      {"send", "sent"},     {"set", "set"},         {"shake", "shook"},
      {"shine", "shone"},   {"shoot", "shot"},      {"show", "showed"},
      {"shrink", "shrank"}, {"shut", "shut"},       {"sing", "sang"},
      {"sink", "sank"},     {"sit", "sat"},         {"sleep", "slept"},
      {"slide", "slid"},    {"speak", "spoke"},     {"spend", "spent"},
      {"spin", "spun"},     {"split", "split"},     {"spread", "spread"},
      {"spring", "sprang"}, {"stand", "stood"},     {"steal", "stole"},
      {"stick", "stuck"},   {"sting", "stung"},     {"strike", "struck"},
      {"swear", "swore"},   {"sweep", "swept"},     {"swim", "swam"},
      {"swing", "swung"},   {"take", "took"},       {"teach", "taught"},
      {"tear", "tore"},     {"tell", "told"},       {"think", "thought"},
      {"throw", "threw"},   {"understand", "understood"},
      {"wake", "woke"},     {"wear", "wore"},       {"weep", "wept"},
      {"win", "won"},       {"wind", "wound"},      {"withdraw", "withdrew"},
      {"write", "wrote"}};
  const VerbLexicon &lexicon = VerbLexicon::Bundled();
  for (const auto &[lemma, past] : kReference) {
    CAPTURE(lemma);
    CHECK(lexicon.Past(lemma) == past);
  }
  CHECK(lexicon.irregular_past_count() >= 150);
}

TEST_CASE("regular past by rule") {
  const VerbLexicon &lexicon = VerbLexicon::Bundled();
  CHECK(lexicon.Past("crash") == "crashed");
  CHECK(lexicon.Past("arrive") == "arrived");
  CHECK(lexicon.Past("study") == "studied");
  CHECK(lexicon.Past("play") == "played");
  CHECK(lexicon.Past("stop") == "stopped");
  CHECK(lexicon.Past("plan") == "planned");
  CHECK(lexicon.Past("fix") == "fixed");
  CHECK(lexicon.Past("show") == "showed");
  CHECK(lexicon.Past("rain") == "rained");
  CHECK(lexicon.Past("visit") == "visited");
  CHECK(lexicon.Past("travel") == "traveled");
  CHECK(lexicon.Past("admit") == "admitted");
  CHECK(lexicon.Past("prefer") == "preferred");
  CHECK(lexicon.Past("panic") == "panicked");
  CHECK(lexicon.Past("found") == "founded");
}

TEST_CASE("third person singular by rule") {
  const VerbLexicon &lexicon = VerbLexicon::Bundled();
  CHECK(lexicon.ThirdSingular("study") == "studies");
  CHECK(lexicon.ThirdSingular("play") == "plays");
  CHECK(lexicon.ThirdSingular("watch") == "watches");
  CHECK(lexicon.ThirdSingular("wash") == "washes");
  CHECK(lexicon.ThirdSingular("fix") == "fixes");
  CHECK(lexicon.ThirdSingular("buzz") == "buzzes");
  CHECK(lexicon.ThirdSingular("pass") == "passes");
  CHECK(lexicon.ThirdSingular("go") == "goes");
  CHECK(lexicon.ThirdSingular("open") == "opens");
}

TEST_CASE("custom lexicon data") {
  VerbLexicon lexicon("# comment\nglorp\tglorped-irregular\n", "", "zap\tp\n");
  CHECK(lexicon.Past("glorp") == "glorped-irregular");
  CHECK(lexicon.Past("zap") == "zapped");
  CHECK(lexicon.Past("go") == "goed");
  CHECK(lexicon.irregular_past_count() == 1);
}

TEST_CASE("malformed data line is a load error") {
  CHECK_THROWS_AS(ParseKeyValueData("ok\tfine\nbroken line\n"), LoadError);
  auto rows = ParseKeyValueData("# c\n\na\tb\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].first == "a");
}

}  // namespace
}  // namespace qa2d
