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

#include "qa2d/preposition_table.h"

#include <regex>

#include "qa2d/data_files.h"
#include "qa2d/text_utils.h"

namespace qa2d {
namespace {

// Lowercased tokens with surrounding punctuation removed ("16," -> "16").
std::vector<std::string> Words(const std::vector<std::string> &tokens) {
  std::vector<std::string> words;
  for (const std::string &t : tokens) {
    std::string w = ToLower(t);
    while (!w.empty() && (w.back() == ',' || w.back() == ';' ||
                          w.back() == ')' || w.back() == '"')) {
      w.pop_back();
    }
    while (!w.empty() && (w.front() == '(' || w.front() == '"')) {
      w.erase(w.begin());
    }
    if (!w.empty()) words.push_back(w);
  }
  return words;
}

const std::regex &DayNumber() {
  static const std::regex re(R"(\d{1,2}(st|nd|rd|th)?)");
  return re;
}

const std::regex &Year() {
  static const std::regex re(R"((\d{3,4}|'\d\d)s?)");
  return re;
}

const std::regex &NumericDate() {
  static const std::regex re(R"(\d{1,2}[/-]\d{1,2}[/-]\d{2,4}|\d{4}-\d{2}-\d{2})");
  return re;
}

const std::regex &ClockTime() {
  static const std::regex re(
      R"(\d{1,2}(:\d{2})?(a\.?m\.?|p\.?m\.?)?|\d{1,2}:\d{2})");
  return re;
}

bool IsMeridiem(std::string_view w) {
  return w == "am" || w == "pm" || w == "a.m." || w == "p.m." ||
         w == "a.m" || w == "p.m" || w == "o'clock";
}

}  // namespace

PrepositionTable::PrepositionTable(std::string_view word_classes) {
  for (auto &[word, cls] : ParseKeyValueData(word_classes)) {
    classes_[ToLower(word)] = cls;
  }
}

const PrepositionTable &PrepositionTable::Bundled() {
  static const PrepositionTable table(bundled::Prepositions());
  return table;
}

std::string PrepositionTable::ClassOf(std::string_view word) const {
  auto it = classes_.find(ToLower(word));
  return it == classes_.end() ? std::string() : it->second;
}

bool PrepositionTable::IsPreposition(std::string_view word) const {
  return ClassOf(word) == "preposition";
}

bool PrepositionTable::BlocksInsertion(
    const std::vector<std::string> &answer_tokens) const {
  std::vector<std::string> words = Words(answer_tokens);
  if (words.empty()) return false;
  std::string cls = ClassOf(words.front());
  return cls == "preposition" || cls == "suppress";
}

PrepositionChoice PrepositionTable::ForWhen(
    const std::vector<std::string> &answer_tokens) const {
  std::vector<std::string> w = Words(answer_tokens);
  if (w.empty()) return {std::nullopt, "when:empty"};
  const std::string first_class = ClassOf(w.front());
  if (first_class == "preposition") return {std::nullopt, "when:leading-preposition"};
  if (first_class == "suppress" || w.back() == "ago") {
    return {std::nullopt, "when:suppressed"};
  }

  // Clock times: "5 pm", "5:30", "noon".
  const bool clock_word = ClassOf(w.front()) == "clock" || ClassOf(w.back()) == "clock";
  const bool clock_pattern =
      (w.size() == 1 && std::regex_match(w[0], ClockTime()) &&
       (w[0].find(':') != std::string::npos ||
        w[0].find('m') != std::string::npos)) ||
      (w.size() == 2 && std::regex_match(w[0], ClockTime()) && IsMeridiem(w[1]));
  if (clock_word || clock_pattern) return {"at", "when:clock"};

  // Full dates and days: "August 16, 1958", "16 August", "the 4th of July",
  // "Sunday", "8/16/1958".
  size_t i = w.front() == "the" ? 1 : 0;
  auto month_at = [&](size_t k) { return k < w.size() && ClassOf(w[k]) == "month"; };
  auto day_at = [&](size_t k) {
    return k < w.size() && std::regex_match(w[k], DayNumber());
  };
  if (ClassOf(w[i < w.size() ? i : 0]) == "weekday" ||
      (month_at(i) && day_at(i + 1)) ||
      (day_at(i) && (month_at(i + 1) || (i + 1 < w.size() && w[i + 1] == "of" &&
                                         month_at(i + 2)))) ||
      std::regex_match(w.front(), NumericDate())) {
    return {"on", "when:date"};
  }

  // Months, years, decades, seasons, centuries.
  for (const std::string &word : w) {
    const std::string cls = ClassOf(word);
    if (cls == "month" || cls == "season" || cls == "period" ||
        std::regex_match(word, Year())) {
      return {"in", "when:period"};
    }
  }
  return {"in", "when:default"};
}

PrepositionChoice PrepositionTable::ForWhere(
    const std::vector<std::string> &answer_tokens,
    std::string_view verb_lemma) const {
  std::vector<std::string> w = Words(answer_tokens);
  if (w.empty()) return {std::nullopt, "where:empty"};
  const std::string first_class = ClassOf(w.front());
  if (first_class == "preposition") return {std::nullopt, "where:leading-preposition"};
  if (first_class == "suppress") return {std::nullopt, "where:suppressed"};
  if (ClassOf(verb_lemma) == "motion_verb") return {"to", "where:motion-verb"};
  if (ClassOf(w.back()) == "point_location") return {"at", "where:point-location"};
  return {"in", "where:default"};
}

std::vector<std::string> PrepositionTable::Inventory(QuestionType qtype) const {
  if (qtype == QuestionType::kWhen) return {"on", "in", "at"};
  if (qtype == QuestionType::kWhere) return {"in", "at", "to", "on"};
  return {};
}

}  // namespace qa2d
