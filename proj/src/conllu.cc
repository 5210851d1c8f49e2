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

#include "qa2d/conllu.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "qa2d/errors.h"
#include "qa2d/text_utils.h"

namespace qa2d {
namespace {

constexpr int kNumColumns = 10;

std::string SentenceName(const DepSentence &sentence, int ordinal) {
  if (!sentence.sent_id.empty()) return "sentence '" + sentence.sent_id + "'";
  return "sentence #" + std::to_string(ordinal);
}

bool ParseInt(std::string_view field, int *value) {
  if (field.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), *value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

void Validate(const DepSentence &sentence, const std::string &name) {
  const int n = sentence.size();
  if (n == 0) throw StructuralError(name + ": no tokens");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const DepToken &t = sentence.tokens[i];
    if (t.id != i + 1) {
      throw StructuralError(name + ": expected token id " +
                            std::to_string(i + 1) + " but found " +
                            std::to_string(t.id));
    }
    if (t.form.empty()) {
      throw StructuralError(name + ": token " + std::to_string(t.id) +
                            " has an empty form");
    }
    if (t.head < 0 || t.head > n) {
      throw StructuralError(name + ": token " + std::to_string(t.id) +
                            " has head " + std::to_string(t.head) +
                            " outside 0.." + std::to_string(n));
    }
    if (t.head == t.id) {
      throw StructuralError(name + ": token " + std::to_string(t.id) +
                            " heads itself");
    }
    if (t.head == 0) ++roots;
  }
  if (roots != 1) {
    throw StructuralError(name + ": expected exactly one root but found " +
                          std::to_string(roots));
  }
  // Every head chain must reach the root within n steps.
  for (const DepToken &t : sentence.tokens) {
    int current = t.id;
    int steps = 0;
    while (current != 0) {
      if (++steps > n) {
        throw StructuralError(name + ": head cycle through token " +
                              std::to_string(t.id));
      }
      current = sentence.tokens[current - 1].head;
    }
  }
}

// Reads "key = value" comments.
void CommentValue(std::string_view comment, std::string_view key,
                  std::string *out) {
  if (comment.substr(0, key.size()) != key) return;
  std::string rest = Trim(comment.substr(key.size()));
  if (rest.empty() || rest.front() != '=') return;
  *out = Trim(std::string_view(rest).substr(1));
}

}  // namespace

const DepToken &DepSentence::token(int id) const {
  if (id < 1 || id > size()) {
    throw std::invalid_argument("token id " + std::to_string(id) +
                                " out of range 1.." + std::to_string(size()));
  }
  return tokens[id - 1];
}

int DepSentence::root() const {
  for (const DepToken &t : tokens) {
    if (t.head == 0) return t.id;
  }
  return 0;
}

void ValidateSentence(const DepSentence &sentence) {
  Validate(sentence, SentenceName(sentence, 1));
}

std::vector<DepSentence> ParseConllu(std::string_view text) {
  std::vector<DepSentence> sentences;
  DepSentence current;

  auto flush = [&]() {
    if (!current.tokens.empty()) {
      Validate(current,
               SentenceName(current, static_cast<int>(sentences.size()) + 1));
      sentences.push_back(std::move(current));
    }
    current = DepSentence();
  };

  std::vector<std::string> lines = Split(text, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_number = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      std::string comment = Trim(line.substr(1));
      CommentValue(comment, "sent_id", &current.sent_id);
      CommentValue(comment, "text", &current.text);
      continue;
    }

    std::vector<std::string> fields = Split(line, '\t');
    if (static_cast<int>(fields.size()) != kNumColumns) {
      throw FormatError("expected 10 tab-separated columns but found " +
                            std::to_string(fields.size()),
                        line_number);
    }
    const std::string &id_field = fields[0];
    // Multiword-token ranges and empty nodes carry no basic head link.
    if (id_field.find_first_of("-.") != std::string::npos) continue;

    DepToken token;
    if (!ParseInt(id_field, &token.id) || token.id < 1) {
      throw FormatError("invalid token id '" + id_field + "'", line_number);
    }
    if (!ParseInt(fields[6], &token.head) || token.head < 0) {
      throw FormatError("invalid head '" + fields[6] + "'", line_number);
    }
    token.form = fields[1];
    token.lemma = fields[2] == "_" ? "" : fields[2];
    token.upos = fields[3];
    token.xpos = fields[4] == "_" ? "" : fields[4];
    token.deprel = fields[7];
    current.tokens.push_back(std::move(token));
  }
  flush();
  return sentences;
}

std::string ToConllu(const DepSentence &sentence) {
  std::ostringstream out;
  if (!sentence.sent_id.empty()) out << "# sent_id = " << sentence.sent_id << '\n';
  if (!sentence.text.empty()) out << "# text = " << sentence.text << '\n';
  for (const DepToken &t : sentence.tokens) {
    out << t.id << '\t' << t.form << '\t' << (t.lemma.empty() ? "_" : t.lemma)
        << '\t' << t.upos << '\t' << (t.xpos.empty() ? "_" : t.xpos)
        << "\t_\t" << t.head << '\t' << t.deprel << "\t_\t_\n";
  }
  out << '\n';
  return out.str();
}

std::vector<DepToken> Children(const DepSentence &sentence, int id) {
  if (id < 1 || id > sentence.size()) {
    throw std::invalid_argument("token id " + std::to_string(id) +
                                " out of range 1.." +
                                std::to_string(sentence.size()));
  }
  std::vector<DepToken> children;
  for (const DepToken &t : sentence.tokens) {
    if (t.head == id) children.push_back(t);
  }
  return children;
}

bool Dominates(const DepSentence &sentence, int ancestor, int id) {
  int current = id;
  int steps = 0;
  while (current != 0 && steps <= sentence.size()) {
    if (current == ancestor) return true;
    current = sentence.token(current).head;
    ++steps;
  }
  return false;
}

std::vector<int> SubtreeIds(const DepSentence &sentence, int id) {
  sentence.token(id);
  std::vector<int> ids;
  for (const DepToken &t : sentence.tokens) {
    if (Dominates(sentence, id, t.id)) ids.push_back(t.id);
  }
  return ids;
}

}  // namespace qa2d
