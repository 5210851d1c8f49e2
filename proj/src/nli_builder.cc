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

#include "qa2d/nli_builder.h"

#include <fstream>
#include <random>
#include <set>

#include "json.hpp"
#include "qa2d/data_files.h"
#include "qa2d/errors.h"
#include "qa2d/parallel.h"
#include "qa2d/question_analysis.h"
#include "qa2d/text_utils.h"

namespace qa2d {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const std::string &RequireString(const json &record, const char *field,
                                 int line) {
  auto it = record.find(field);
  if (it == record.end()) {
    throw LoadError(std::string("missing field '") + field + "'", line);
  }
  if (!it->is_string()) {
    throw LoadError(std::string("field '") + field + "' must be a string",
                    line);
  }
  return it->get_ref<const std::string &>();
}

QAExample ParseRecord(const json &record, QaSchema schema,
                      const std::string &default_source, int line) {
  if (!record.is_object()) throw LoadError("expected a JSON object", line);
  QAExample ex;
  ex.id = RequireString(record, "id", line);
  if (ex.id.empty()) throw LoadError("empty id", line);
  ex.passage = RequireString(record, "passage", line);
  ex.question = RequireString(record, "question", line);
  ex.source = default_source;
  if (auto it = record.find("source"); it != record.end() && it->is_string()) {
    ex.source = it->get<std::string>();
  }

  switch (schema) {
    case QaSchema::kSpan: {
      const std::string &answer = RequireString(record, "answer", line);
      if (Trim(answer).empty()) throw LoadError("empty answer", line);
      ex.answers.push_back({answer, true});
      break;
    }
    case QaSchema::kMultichoice: {
      auto options = record.find("options");
      if (options == record.end() || !options->is_array() || options->empty()) {
        throw LoadError("field 'options' must be a non-empty array", line);
      }
      auto correct = record.find("correct");
      if (correct == record.end() || !correct->is_number_integer()) {
        throw LoadError("field 'correct' must be an integer", line);
      }
      const int64_t index = correct->get<int64_t>();
      if (index < 0 || index >= static_cast<int64_t>(options->size())) {
        throw LoadError("'correct' index " + std::to_string(index) +
                            " outside the options array",
                        line);
      }
      for (size_t i = 0; i < options->size(); ++i) {
        const json &opt = (*options)[i];
        if (!opt.is_string()) throw LoadError("options must be strings", line);
        ex.answers.push_back(
            {opt.get<std::string>(), static_cast<int64_t>(i) == index});
      }
      break;
    }
    case QaSchema::kUnanswerable: {
      auto impossible = record.find("is_impossible");
      if (impossible == record.end() || !impossible->is_boolean()) {
        throw LoadError("field 'is_impossible' must be a boolean", line);
      }
      ex.answerable = !impossible->get<bool>();
      auto answer_it = record.find("answer");
      std::string answer;
      if (answer_it != record.end()) {
        if (!answer_it->is_string()) {
          throw LoadError("field 'answer' must be a string", line);
        }
        answer = answer_it->get<std::string>();
      }
      if (ex.answerable) {
        if (Trim(answer).empty()) throw LoadError("empty answer", line);
        ex.answers.push_back({answer, true});
        break;
      }
      std::string plausible;
      if (auto it = record.find("plausible_answer");
          it != record.end() && !it->is_null()) {
        if (!it->is_string()) {
          throw LoadError("field 'plausible_answer' must be a string", line);
        }
        plausible = it->get<std::string>();
      }
      if (Trim(plausible).empty()) plausible = answer;
      if (!Trim(plausible).empty()) ex.answers.push_back({plausible, false});
      break;
    }
  }
  return ex;
}

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct ExampleOutcome {
  std::vector<NLIPair> pairs;
  std::optional<std::string> skip_reason;
};

}  // namespace

std::optional<QaSchema> ParseQaSchema(std::string_view name) {
  if (name == "span") return QaSchema::kSpan;
  if (name == "multichoice") return QaSchema::kMultichoice;
  if (name == "unanswerable" || name == "unanswerable-aware") {
    return QaSchema::kUnanswerable;
  }
  return std::nullopt;
}

std::string QaSchemaName(QaSchema schema) {
  switch (schema) {
    case QaSchema::kSpan: return "span";
    case QaSchema::kMultichoice: return "multichoice";
    case QaSchema::kUnanswerable: return "unanswerable";
  }
  return "span";
}

std::string NliLabelName(NliLabel label) {
  return label == NliLabel::kEntailed ? "Entailed" : "NotEntailed";
}

std::string ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kCorrectAnswer: return "CorrectAnswer";
    case Provenance::kIncorrectOption: return "IncorrectOption";
    case Provenance::kUnanswerable: return "Unanswerable";
  }
  return "CorrectAnswer";
}

std::optional<NliLabel> ParseNliLabel(std::string_view name) {
  if (name == "Entailed") return NliLabel::kEntailed;
  if (name == "NotEntailed") return NliLabel::kNotEntailed;
  return std::nullopt;
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  if (name == "CorrectAnswer") return Provenance::kCorrectAnswer;
  if (name == "IncorrectOption") return Provenance::kIncorrectOption;
  if (name == "Unanswerable") return Provenance::kUnanswerable;
  return std::nullopt;
}

std::optional<NegativePolicy> ParseNegativePolicy(std::string_view name) {
  if (name == "all") return NegativePolicy::kAll;
  if (name == "one-random") return NegativePolicy::kOneRandom;
  return std::nullopt;
}

std::string NegativePolicyName(NegativePolicy policy) {
  return policy == NegativePolicy::kAll ? "all" : "one-random";
}

std::vector<QAExample> ParseQaJsonl(std::string_view text, QaSchema schema,
                                    const std::string &source) {
  std::vector<QAExample> examples;
  std::set<std::string> ids;
  std::vector<std::string> lines = Split(text, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    if (Trim(lines[i]).empty()) continue;
    json record;
    try {
      record = json::parse(lines[i]);
    } catch (const json::parse_error &e) {
      throw LoadError(std::string("malformed JSON: ") + e.what(), line);
    }
    QAExample ex = ParseRecord(record, schema, source, line);
    if (!ids.insert(ex.id).second) {
      throw LoadError("duplicate id '" + ex.id + "'", line);
    }
    examples.push_back(std::move(ex));
  }
  return examples;
}

std::vector<QAExample> LoadQaJsonl(const std::string &path, QaSchema schema) {
  return ParseQaJsonl(ReadFile(path), schema, QaSchemaName(schema));
}

std::map<std::string, DepSentence> IndexParses(
    std::vector<DepSentence> sentences) {
  std::map<std::string, DepSentence> index;
  for (size_t i = 0; i < sentences.size(); ++i) {
    DepSentence &s = sentences[i];
    if (s.sent_id.empty()) {
      throw LoadError("parse #" + std::to_string(i + 1) + " has no sent_id", 0);
    }
    std::string id = s.sent_id;
    if (!index.emplace(id, std::move(s)).second) {
      throw LoadError("duplicate sent_id '" + id + "'", 0);
    }
  }
  return index;
}

size_t DrawDistractor(uint64_t seed, size_t index, size_t count) {
  std::mt19937_64 rng(SplitMix64(seed ^ SplitMix64(index)));
  return static_cast<size_t>(rng() % count);
}

BuildResult BuildPairs(const std::vector<QAExample> &examples,
                       const std::map<std::string, DepSentence> &parses,
                       const BuildOptions &options) {
  const Qa2dEngine engine(
      options.engine,
      options.lexicon ? *options.lexicon : VerbLexicon::Bundled(),
      options.prepositions ? *options.prepositions : PrepositionTable::Bundled());
  std::vector<ExampleOutcome> outcomes(examples.size());

  ParallelFor(examples.size(), options.jobs, [&](size_t i) {
    const QAExample &ex = examples[i];
    ExampleOutcome &out = outcomes[i];
    auto parse = parses.find(ex.id);
    if (parse == parses.end()) {
      out.skip_reason = "no question parse";
      return;
    }
    try {
      const WhAnalysis analysis = Analyze(parse->second);
      auto hypothesis = [&](const std::string &answer) {
        return engine.Transform(analysis, answer).front().text;
      };
      if (!ex.answerable) {
        if (ex.answers.empty()) {
          out.skip_reason = "unanswerable question without a plausible answer";
          return;
        }
        out.pairs.push_back({ex.passage, hypothesis(ex.answers.front().text),
                             NliLabel::kNotEntailed, ex.id,
                             Provenance::kUnanswerable});
        return;
      }
      std::vector<size_t> incorrect;
      for (size_t k = 0; k < ex.answers.size(); ++k) {
        const AnswerOption &opt = ex.answers[k];
        if (opt.correct) {
          out.pairs.push_back({ex.passage, hypothesis(opt.text),
                               NliLabel::kEntailed, ex.id,
                               Provenance::kCorrectAnswer});
        } else {
          incorrect.push_back(k);
        }
      }
      if (incorrect.empty()) return;
      if (options.negatives == NegativePolicy::kOneRandom) {
        incorrect = {incorrect[DrawDistractor(options.seed, i, incorrect.size())]};
      }
      for (size_t k : incorrect) {
        out.pairs.push_back({ex.passage, hypothesis(ex.answers[k].text),
                             NliLabel::kNotEntailed, ex.id,
                             Provenance::kIncorrectOption});
      }
    } catch (const Error &e) {
      out.pairs.clear();
      out.skip_reason = e.what();
    } catch (const std::invalid_argument &e) {
      out.pairs.clear();
      out.skip_reason = e.what();
    }
  });

  BuildResult result;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].skip_reason) {
      result.skipped.push_back({examples[i].id, *outcomes[i].skip_reason});
      continue;
    }
    for (NLIPair &p : outcomes[i].pairs) result.pairs.push_back(std::move(p));
  }
  return result;
}

std::string NliPairToJsonLine(const NLIPair &pair) {
  ordered_json j;
  j["premise"] = pair.premise;
  j["hypothesis"] = pair.hypothesis;
  j["label"] = NliLabelName(pair.label);
  j["source_id"] = pair.source_id;
  j["provenance"] = ProvenanceName(pair.provenance);
  return j.dump();
}

int WriteNliJsonl(const std::vector<NLIPair> &pairs, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open " + path + " for writing");
  for (const NLIPair &p : pairs) out << NliPairToJsonLine(p) << '\n';
  out.flush();
  if (!out) throw WriteError("failed writing " + path);
  return static_cast<int>(pairs.size());
}

std::vector<NLIPair> ParseNliJsonl(std::string_view text) {
  std::vector<NLIPair> pairs;
  std::vector<std::string> lines = Split(text, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    if (Trim(lines[i]).empty()) continue;
    json record;
    try {
      record = json::parse(lines[i]);
    } catch (const json::parse_error &e) {
      throw LoadError(std::string("malformed JSON: ") + e.what(), line);
    }
    if (!record.is_object()) throw LoadError("expected a JSON object", line);
    NLIPair p;
    p.premise = RequireString(record, "premise", line);
    p.hypothesis = RequireString(record, "hypothesis", line);
    p.source_id = RequireString(record, "source_id", line);
    auto label = ParseNliLabel(RequireString(record, "label", line));
    auto provenance =
        ParseProvenance(RequireString(record, "provenance", line));
    if (!label) throw LoadError("unknown label", line);
    if (!provenance) throw LoadError("unknown provenance", line);
    p.label = *label;
    p.provenance = *provenance;
    if ((p.label == NliLabel::kEntailed) !=
        (p.provenance == Provenance::kCorrectAnswer)) {
      throw LoadError("label and provenance disagree", line);
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<NLIPair> LoadNliJsonl(const std::string &path) {
  return ParseNliJsonl(ReadFile(path));
}

}  // namespace qa2d
