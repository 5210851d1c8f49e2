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

#ifndef QA2D_VERB_LEXICON_H_
#define QA2D_VERB_LEXICON_H_

#include <string>
#include <string_view>
#include <unordered_map>

namespace qa2d {

// English verb inflection: irregular forms from data files, everything else
// by regular orthographic rules.
class VerbLexicon {
 public:
  // Empty lexicon: regular rules only.
  VerbLexicon() = default;

  // Each argument is the body of a `key<TAB>value` data file:
  // lemma->past, lemma->3sg, and lemma->doubled consonant.
  VerbLexicon(std::string_view irregular_past,
              std::string_view irregular_third_singular,
              std::string_view consonant_doubling);

  // Lexicon built from the files compiled into the library. Shared and
  // immutable; safe to use from several threads.
  static const VerbLexicon &Bundled();

  std::string Past(std::string_view lemma) const;
  std::string ThirdSingular(std::string_view lemma) const;

  int irregular_past_count() const {
    return static_cast<int>(irregular_past_.size());
  }

 private:
  std::unordered_map<std::string, std::string> irregular_past_;
  std::unordered_map<std::string, std::string> irregular_3sg_;
  std::unordered_map<std::string, std::string> doubling_;
};

// Reverses the inflection stripped by do-support: "did" gives the past
// form, "does" the third-person singular, "do" the lemma unchanged. The
// lemma is lowercased first. Throws std::invalid_argument for an empty
// lemma or an aux form other than do/does/did.
std::string Reinflect(std::string_view lemma, std::string_view aux_form,
                      const VerbLexicon &lexicon = VerbLexicon::Bundled());

}  // namespace qa2d

#endif  // QA2D_VERB_LEXICON_H_
