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

#include "qa2d/data_files.h"
#include "qa2d/text_utils.h"

namespace qa2d {
namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

int VowelGroups(std::string_view word) {
  int groups = 0;
  bool in_group = false;
  for (char c : word) {
    bool vowel = IsVowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  return groups;
}

// stop -> stopp, plan -> plann; not for w/x/y finals or double vowels.
bool DoublesByRule(std::string_view w) {
  if (w.size() < 3 || VowelGroups(w) != 1) return false;
  char last = w[w.size() - 1];
  char mid = w[w.size() - 2];
  char before = w[w.size() - 3];
  if (IsVowel(last) || last == 'w' || last == 'x' || last == 'y') return false;
  return IsVowel(mid) && !IsVowel(before);
}

void Load(std::string_view text,
          std::unordered_map<std::string, std::string> *table) {
  for (auto &[key, value] : ParseKeyValueData(text)) {
    (*table)[ToLower(key)] = value;
  }
}

}  // namespace

VerbLexicon::VerbLexicon(std::string_view irregular_past,
                         std::string_view irregular_third_singular,
                         std::string_view consonant_doubling) {
  Load(irregular_past, &irregular_past_);
  Load(irregular_third_singular, &irregular_3sg_);
  Load(consonant_doubling, &doubling_);
}

const VerbLexicon &VerbLexicon::Bundled() {
  static const VerbLexicon lexicon(bundled::IrregularPast(),
                                   bundled::IrregularThirdSingular(),
                                   bundled::ConsonantDoubling());
  return lexicon;
}

std::string VerbLexicon::Past(std::string_view lemma) const {
  std::string w = ToLower(lemma);
  if (auto it = irregular_past_.find(w); it != irregular_past_.end()) {
    return it->second;
  }
  if (auto it = doubling_.find(w); it != doubling_.end()) {
    return w + it->second + "ed";
  }
  if (EndsWith(w, "e")) return w + "d";
  if (w.size() >= 2 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ied";
  }
  if (EndsWith(w, "ic")) return w + "ked";
  if (DoublesByRule(w)) return w + w.back() + "ed";
  return w + "ed";
}

std::string VerbLexicon::ThirdSingular(std::string_view lemma) const {
  std::string w = ToLower(lemma);
  if (auto it = irregular_3sg_.find(w); it != irregular_3sg_.end()) {
    return it->second;
  }
  if (w.size() >= 2 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  if (EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
      EndsWith(w, "ch") || EndsWith(w, "sh") || EndsWith(w, "o")) {
    return w + "es";
  }
  return w + "s";
}

std::string Reinflect(std::string_view lemma, std::string_view aux_form,
                      const VerbLexicon &lexicon) {
  if (Trim(lemma).empty()) throw std::invalid_argument("empty verb lemma");
  std::string aux = ToLower(aux_form);
  std::string base = ToLower(Trim(lemma));
  if (aux == "did") return lexicon.Past(base);
  if (aux == "does") return lexicon.ThirdSingular(base);
  if (aux == "do") return base;
  throw std::invalid_argument("not a do-support form: '" +
                              std::string(aux_form) + "'");
}

}  // namespace qa2d
