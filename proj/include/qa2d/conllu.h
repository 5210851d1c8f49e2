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

#ifndef QA2D_CONLLU_H_
#define QA2D_CONLLU_H_

#include <string>
#include <string_view>
#include <vector>

namespace qa2d {

// One word line of a CoNLL-U block. "_" in LEMMA or XPOS is stored as an
// empty string.
struct DepToken {
  int id = 0;    // 1-based position
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  int head = 0;  // 0 for the root, otherwise a token id
  std::string deprel;

  bool operator==(const DepToken &) const = default;
};

// A validated dependency tree: ids are 1..n, exactly one root, no cycles.
struct DepSentence {
  std::vector<DepToken> tokens;
  std::string sent_id;  // from "# sent_id = ..." when present
  std::string text;     // from "# text = ..." when present

  int size() const { return static_cast<int>(tokens.size()); }

  // Token by 1-based id. Throws std::invalid_argument when out of range.
  const DepToken &token(int id) const;

  // Id of the token whose head is 0.
  int root() const;

  bool operator==(const DepSentence &) const = default;
};

// Parses a CoNLL-U document. Multiword-token ranges ("3-4") and empty nodes
// ("3.1") are skipped. Throws FormatError for lines that are not 10
// tab-separated columns or carry non-numeric ids/heads, and
// StructuralError for blocks that are not a single-rooted tree.
std::vector<DepSentence> ParseConllu(std::string_view text);

// Validates tree invariants of an in-memory sentence; throws
// StructuralError naming the sentence.
void ValidateSentence(const DepSentence &sentence);

// Serializes back to CoNLL-U (10 columns, comment lines for sent_id/text,
// trailing blank line).
std::string ToConllu(const DepSentence &sentence);

// Dependents of `id` in surface order. Throws std::invalid_argument when id
// is not in 1..n.
std::vector<DepToken> Children(const DepSentence &sentence, int id);

// Token ids of the subtree rooted at `id` (inclusive), ascending.
std::vector<int> SubtreeIds(const DepSentence &sentence, int id);

// True when `ancestor` dominates `id` (a token dominates itself).
bool Dominates(const DepSentence &sentence, int ancestor, int id);

}  // namespace qa2d

#endif  // QA2D_CONLLU_H_
