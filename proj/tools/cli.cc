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

#include "cli.h"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qa2d/conllu.h"
#include "qa2d/corpus_analysis.h"
#include "qa2d/data_files.h"
#include "qa2d/engine.h"
#include "qa2d/errors.h"
#include "qa2d/eval_metrics.h"
#include "qa2d/nli_builder.h"
#include "qa2d/parallel.h"
#include "qa2d/question_analysis.h"
#include "qa2d/text_utils.h"

namespace qa2d::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// Flags of every subcommand. Unused fields keep their defaults.
struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string parses;
  std::string references;
  std::string qa_input;
  std::string output;
  std::string histogram_csv;
  std::string skip_report;
  // Engine data files; empty selects the bundled copy.
  std::string irregular_past;
  std::string irregular_3sg;
  std::string consonant_doubling;
  std::string prepositions;
  std::string article_exceptions;
  std::string schema = "span";
  std::string negatives = "one-random";
  std::optional<uint64_t> seed;
  bool copy_wh_phrase = false;
  int candidates = 1;
  int k = 1;
  double smoothing = 100.0;
  int top = 5;
  std::string format = "json";
  int jobs = 1;
};

// Failure attributable to the inputs or flags; maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ordered_json Metadata(const RunConfig &c) {
  ordered_json m;
  m["subcommand"] = c.subcommand;
  m["input"] = c.input;
  if (!c.parses.empty()) m["parses"] = c.parses;
  if (!c.references.empty()) m["references"] = c.references;
  if (!c.qa_input.empty()) m["qa"] = c.qa_input;
  m["schema"] = c.schema;
  if (c.subcommand == "convert") {
    m["negatives"] = c.negatives;
    if (c.seed) m["seed"] = *c.seed;
  }
  if (c.subcommand == "qa2d" || c.subcommand == "convert") {
    m["copy_wh_phrase"] = c.copy_wh_phrase;
    m["candidates"] = c.candidates;
    for (const auto &[key, path] :
         {std::pair{"irregular_past", &c.irregular_past},
          std::pair{"irregular_3sg", &c.irregular_3sg},
          std::pair{"consonant_doubling", &c.consonant_doubling},
          std::pair{"prepositions", &c.prepositions},
          std::pair{"article_exceptions", &c.article_exceptions}}) {
      m[key] = path->empty() ? "bundled" : *path;
    }
  }
  if (c.subcommand == "eval") {
    m["k"] = c.k;
    m["topk_tie_break"] = "exact match, then sentence BLEU (add-one), then rank";
    m["normalization"] = "lowercase, ASCII punctuation removed";
  }
  if (c.subcommand == "analyze") {
    m["smoothing"] = c.smoothing;
    m["top"] = c.top;
  }
  m["format"] = c.format;
  m["jobs"] = c.jobs;
  return m;
}

QaSchema SchemaOf(const RunConfig &c) {
  auto schema = ParseQaSchema(c.schema);
  if (!schema) throw InputError("unknown schema '" + c.schema + "'");
  return *schema;
}

std::map<std::string, DepSentence> LoadParses(const std::string &path) {
  if (path.empty()) throw InputError("--parses is required");
  return IndexParses(ParseConllu(ReadFile(path)));
}

// Engine flags plus any custom data files.
struct EngineSetup {
  EngineConfig config;
  std::optional<VerbLexicon> lexicon;
  std::optional<PrepositionTable> table;

  const VerbLexicon &Lexicon() const {
    return lexicon ? *lexicon : VerbLexicon::Bundled();
  }
  const PrepositionTable &Table() const {
    return table ? *table : PrepositionTable::Bundled();
  }
};

std::string ReadDataFile(const std::string &path, std::string_view bundled) {
  if (path.empty()) return std::string(bundled);
  std::string text = ReadFile(path);
  try {
    ParseKeyValueData(text);
  } catch (const LoadError &e) {
    throw InputError(path + ": " + e.what());
  }
  return text;
}

EngineSetup EngineFrom(const RunConfig &c) {
  EngineSetup s;
  s.config.copy_wh_phrase = c.copy_wh_phrase;
  s.config.emit_alternatives = c.candidates;
  if (!c.irregular_past.empty() || !c.irregular_3sg.empty() ||
      !c.consonant_doubling.empty()) {
    s.lexicon.emplace(ReadDataFile(c.irregular_past, bundled::IrregularPast()),
                      ReadDataFile(c.irregular_3sg, bundled::IrregularThirdSingular()),
                      ReadDataFile(c.consonant_doubling, bundled::ConsonantDoubling()));
  }
  if (!c.prepositions.empty()) {
    s.table.emplace(ReadDataFile(c.prepositions, bundled::Prepositions()));
  }
  if (!c.article_exceptions.empty()) {
    s.config.article_exceptions = ParseArticleExceptions(
        ReadDataFile(c.article_exceptions, bundled::ArticleExceptions()));
  }
  return s;
}

// Writes `text` to `path`, or to `out` when path is empty.
void Emit(const std::string &text, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw WriteError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw WriteError("failed writing " + path);
}

void ReportSkips(const std::vector<SkipRecord> &skipped, std::ostream &err) {
  for (const SkipRecord &s : skipped) {
    err << "skipped " << s.id << ": " << s.reason << '\n';
  }
  err << "skipped " << skipped.size() << " example(s)\n";
}

std::string FormatDouble(double value, int precision) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << value;
  return s.str();
}

int CmdQa2d(const RunConfig &c, std::ostream &out, std::ostream &err) {
  if (c.output.empty()) throw InputError("--output is required");
  const std::vector<QAExample> examples = LoadQaJsonl(c.input, SchemaOf(c));
  const auto parses = LoadParses(c.parses);
  const EngineSetup setup = EngineFrom(c);
  const Qa2dEngine engine(setup.config, setup.Lexicon(), setup.Table());

  std::vector<std::vector<DeclarativeCandidate>> results(examples.size());
  std::vector<std::string> failures(examples.size());
  ParallelFor(examples.size(), c.jobs, [&](size_t i) {
    const QAExample &ex = examples[i];
    auto parse = parses.find(ex.id);
    if (parse == parses.end()) {
      failures[i] = "no question parse";
      return;
    }
    if (ex.answers.empty()) {
      failures[i] = "no answer";
      return;
    }
    std::string answer = ex.answers.front().text;
    for (const AnswerOption &opt : ex.answers) {
      if (opt.correct) {
        answer = opt.text;
        break;
      }
    }
    try {
      results[i] = engine.Transform(Analyze(parse->second), answer);
    } catch (const Error &e) {
      failures[i] = e.what();
    }
  });

  std::string text;
  std::vector<SkipRecord> skipped;
  for (size_t i = 0; i < examples.size(); ++i) {
    if (!failures[i].empty()) {
      skipped.push_back({examples[i].id, failures[i]});
      continue;
    }
    for (const DeclarativeCandidate &cand : results[i]) {
      ordered_json j;
      j["id"] = examples[i].id;
      j["declarative"] = cand.text;
      j["rank"] = cand.rank;
      j["applied_rules"] = cand.applied_rules;
      text += j.dump() + "\n";
    }
  }
  Emit(text, c.output, out);
  ReportSkips(skipped, err);
  return kOk;
}

int CmdConvert(const RunConfig &c, std::ostream &out, std::ostream &err) {
  if (c.output.empty()) throw InputError("--output is required");
  auto policy = ParseNegativePolicy(c.negatives);
  if (!policy) throw InputError("unknown negatives policy '" + c.negatives + "'");
  if (*policy == NegativePolicy::kOneRandom && !c.seed) {
    throw InputError("--seed is required with --negatives one-random");
  }
  const std::vector<QAExample> examples = LoadQaJsonl(c.input, SchemaOf(c));
  const auto parses = LoadParses(c.parses);

  BuildOptions options;
  const EngineSetup setup = EngineFrom(c);
  options.engine = setup.config;
  options.lexicon = &setup.Lexicon();
  options.prepositions = &setup.Table();
  options.negatives = *policy;
  options.seed = c.seed.value_or(0);
  options.jobs = c.jobs;
  BuildResult result = BuildPairs(examples, parses, options);
  const int written = WriteNliJsonl(result.pairs, c.output);

  if (!c.skip_report.empty()) {
    std::string report;
    for (const SkipRecord &s : result.skipped) {
      ordered_json j;
      j["id"] = s.id;
      j["reason"] = s.reason;
      report += j.dump() + "\n";
    }
    Emit(report, c.skip_report, out);
  }
  std::map<std::string, int> by_provenance = {
      {"CorrectAnswer", 0}, {"IncorrectOption", 0}, {"Unanswerable", 0}};
  for (const NLIPair &p : result.pairs) ++by_provenance[ProvenanceName(p.provenance)];
  out << "config " << Metadata(c).dump() << '\n';
  for (const auto &[name, count] : by_provenance) {
    out << name << '\t' << count << '\n';
  }
  out << "total\t" << written << '\n';
  out << "skipped\t" << result.skipped.size() << '\n';
  ReportSkips(result.skipped, err);
  return kOk;
}

struct ReferenceRecord {
  std::vector<std::string> references;
  QuestionType qtype = QuestionType::kWhat;
  int length = 0;
};

int CmdEval(const RunConfig &c, std::ostream &out, std::ostream &err) {
  if (c.references.empty()) throw InputError("--references is required");
  if (c.k < 1) throw InputError("--k must be at least 1");
  if (c.format != "json" && c.format != "text") {
    throw InputError("unknown format '" + c.format + "'");
  }

  // Hypotheses: qa2d output lines, possibly several ranks per id.
  std::map<std::string, std::map<int, std::string>> hypotheses;
  {
    std::vector<std::string> lines = Split(ReadFile(c.input), '\n');
    for (size_t i = 0; i < lines.size(); ++i) {
      if (Trim(lines[i]).empty()) continue;
      const int line = static_cast<int>(i) + 1;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(lines[i]);
      } catch (const nlohmann::json::parse_error &) {
        throw LoadError("malformed JSON in " + c.input, line);
      }
      if (!j.is_object() || !j.contains("id") || !j["id"].is_string() ||
          !j.contains("declarative") || !j["declarative"].is_string()) {
        throw LoadError("hypothesis needs string 'id' and 'declarative'", line);
      }
      int rank = 1;
      if (j.contains("rank")) {
        if (!j["rank"].is_number_integer()) throw LoadError("'rank' must be an integer", line);
        rank = j["rank"].get<int>();
      }
      auto &ranks = hypotheses[j["id"].get<std::string>()];
      if (!ranks.emplace(rank, j["declarative"].get<std::string>()).second) {
        throw LoadError("duplicate rank for id '" + j["id"].get<std::string>() + "'", line);
      }
    }
  }

  std::vector<std::pair<std::string, ReferenceRecord>> references;
  std::set<std::string> reference_ids;
  {
    std::vector<std::string> lines = Split(ReadFile(c.references), '\n');
    for (size_t i = 0; i < lines.size(); ++i) {
      if (Trim(lines[i]).empty()) continue;
      const int line = static_cast<int>(i) + 1;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(lines[i]);
      } catch (const nlohmann::json::parse_error &) {
        throw LoadError("malformed JSON in " + c.references, line);
      }
      if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
        throw LoadError("reference needs a string 'id'", line);
      }
      ReferenceRecord r;
      if (!j.contains("references") || !j["references"].is_array()) {
        throw LoadError("'references' must be an array", line);
      }
      for (const auto &ref : j["references"]) {
        if (!ref.is_string()) throw LoadError("references must be strings", line);
        r.references.push_back(ref.get<std::string>());
      }
      if (r.references.empty() || r.references.size() > 3) {
        throw LoadError("expected 1 to 3 references", line);
      }
      std::string question = j.value("question", "");
      std::string answer = j.value("answer", "");
      std::optional<QuestionType> qtype;
      if (j.contains("qtype") && j["qtype"].is_string()) {
        qtype = ParseQuestionType(j["qtype"].get<std::string>());
      }
      if (!qtype) qtype = ClassifyQuestionText(question);
      if (!qtype) throw LoadError("cannot determine question type", line);
      r.qtype = *qtype;
      r.length = static_cast<int>(Normalize(question).size() + Normalize(answer).size());
      const std::string id = j["id"].get<std::string>();
      if (!reference_ids.insert(id).second) {
        throw LoadError("duplicate reference id '" + id + "'", line);
      }
      references.emplace_back(id, std::move(r));
    }
  }

  std::vector<std::string> orphans;
  for (const auto &[id, ranks] : hypotheses) {
    if (!reference_ids.count(id)) orphans.push_back("hypothesis " + id);
  }
  for (const auto &[id, r] : references) {
    if (!hypotheses.count(id)) orphans.push_back("reference " + id);
  }
  if (!orphans.empty()) {
    for (const std::string &o : orphans) err << "orphan " << o << '\n';
    throw InputError("hypothesis and reference ids do not align (" +
                     std::to_string(orphans.size()) + " orphan(s))");
  }

  std::vector<EvalExample> examples;
  for (const auto &[id, r] : references) {
    EvalExample ex;
    ex.id = id;
    for (const auto &[rank, text] : hypotheses.at(id)) ex.candidates.push_back(text);
    ex.references = r.references;
    ex.qtype = r.qtype;
    ex.length = r.length;
    examples.push_back(std::move(ex));
  }
  const EvalReport report = Evaluate(examples, c.k);

  std::string text;
  if (c.format == "json") {
    ordered_json j;
    j["metadata"] = Metadata(c);
    j["n_examples"] = report.n_examples;
    j["corpus_bleu"] = report.corpus_bleu;
    j["exact_match_rate"] = report.exact_match_rate;
    if (report.topk_bleu) {
      j["topk_bleu"] = *report.topk_bleu;
      j["topk_match_rate"] = *report.topk_match_rate;
    }
    auto rows = [](const std::map<std::string, ScoreRow> &m) {
      ordered_json o = ordered_json::object();
      for (const auto &[key, row] : m) {
        o[key] = {{"bleu", row.bleu}, {"match", row.match}, {"n", row.n}};
      }
      return o;
    };
    j["by_qtype"] = rows(report.by_qtype);
    j["by_length"] = rows(report.by_length);
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "examples        " << report.n_examples << '\n';
    s << "BLEU            " << FormatDouble(report.corpus_bleu, 2) << '\n';
    s << "exact match     " << FormatDouble(100.0 * report.exact_match_rate, 2) << '\n';
    if (report.topk_bleu) {
      s << "top-" << report.k << " BLEU      " << FormatDouble(*report.topk_bleu, 2) << '\n';
      s << "top-" << report.k << " match     "
        << FormatDouble(100.0 * *report.topk_match_rate, 2) << '\n';
    }
    auto table = [&](const std::string &title,
                     const std::map<std::string, ScoreRow> &m) {
      s << '\n' << std::left << std::setw(10) << title << std::right
        << std::setw(8) << "n" << std::setw(10) << "BLEU" << std::setw(10)
        << "match" << '\n';
      for (const auto &[key, row] : m) {
        s << std::left << std::setw(10) << key << std::right << std::setw(8)
          << row.n << std::setw(10) << FormatDouble(row.bleu, 2)
          << std::setw(10) << FormatDouble(100.0 * row.match, 2) << '\n';
      }
    };
    table("qtype", report.by_qtype);
    table("length", report.by_length);
    text = s.str();
  }
  Emit(text, c.output, out);
  return kOk;
}

int CmdAnalyze(const RunConfig &c, std::ostream &out, std::ostream &) {
  if (c.format != "json" && c.format != "text") {
    throw InputError("unknown format '" + c.format + "'");
  }
  const std::vector<NLIPair> pairs = LoadNliJsonl(c.input);
  std::set<NliLabel> labels;
  for (const NLIPair &p : pairs) labels.insert(p.label);
  if (labels.size() < 2) {
    throw InputError("PMI is undefined for a corpus with fewer than two labels");
  }
  if (c.smoothing < 0) throw InputError("--smoothing must be >= 0");
  const PmiTable pmi = ComputePmi(pairs, c.smoothing, c.top);
  const LengthHistogram hist = ComputeLengthHistogram(pairs);

  std::map<std::string, std::pair<double, int>> hyp_overlap;
  for (const NLIPair &p : pairs) {
    if (Normalize(p.hypothesis).empty()) continue;
    auto &acc = hyp_overlap[NliLabelName(p.label)];
    acc.first += WordOverlap(p.hypothesis, p.premise);
    ++acc.second;
  }
  std::optional<std::pair<double, int>> question_overlap;
  if (!c.qa_input.empty()) {
    question_overlap = std::make_pair(0.0, 0);
    for (const QAExample &ex : LoadQaJsonl(c.qa_input, SchemaOf(c))) {
      if (Normalize(ex.question).empty()) continue;
      question_overlap->first += WordOverlap(ex.question, ex.passage);
      ++question_overlap->second;
    }
  }

  if (!c.histogram_csv.empty()) {
    std::string csv = "label,length,count\n";
    for (const auto &[label, summary] : hist.per_label) {
      for (const auto &[length, count] : summary.counts) {
        csv += label + "," + std::to_string(length) + "," + std::to_string(count) + "\n";
      }
    }
    Emit(csv, c.histogram_csv, out);
  }

  std::string text;
  if (c.format == "json") {
    ordered_json j;
    j["metadata"] = Metadata(c);
    j["n_pairs"] = pairs.size();
    ordered_json p;
    p["smoothing"] = pmi.smoothing;
    p["vocabulary_size"] = pmi.vocabulary_size;
    for (const auto &[label, entries] : pmi.per_class) {
      ordered_json list = ordered_json::array();
      for (const PmiEntry &e : entries) {
        list.push_back({{"word", e.word}, {"pmi", e.pmi},
                        {"percentage", e.percentage}, {"count", e.count}});
      }
      p["classes"][label] = list;
    }
    j["pmi"] = p;
    for (const auto &[label, s] : hist.per_label) {
      ordered_json counts = ordered_json::object();
      for (const auto &[length, count] : s.counts) counts[std::to_string(length)] = count;
      j["length_histogram"][label] = {{"total", s.total}, {"mean", s.mean},
                                      {"median", s.median}, {"counts", counts}};
    }
    for (const auto &[label, acc] : hyp_overlap) {
      j["hypothesis_premise_overlap"][label] =
          acc.second ? acc.first / acc.second : 0.0;
    }
    if (question_overlap) {
      j["question_passage_overlap"] = question_overlap->second
          ? question_overlap->first / question_overlap->second : 0.0;
    }
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "pairs " << pairs.size() << ", smoothing " << pmi.smoothing << '\n';
    for (const auto &[label, entries] : pmi.per_class) {
      s << '\n' << label << '\n';
      for (const PmiEntry &e : entries) {
        s << "  " << std::left << std::setw(16) << e.word << std::right
          << std::setw(10) << FormatDouble(e.pmi, 4) << std::setw(9)
          << FormatDouble(e.percentage, 1) << "%\n";
      }
    }
    s << '\n';
    for (const auto &[label, summary] : hist.per_label) {
      s << label << " length: mean " << FormatDouble(summary.mean, 2)
        << ", median " << FormatDouble(summary.median, 1) << ", n "
        << summary.total << '\n';
    }
    for (const auto &[label, acc] : hyp_overlap) {
      s << label << " hypothesis-premise overlap "
        << FormatDouble(acc.second ? acc.first / acc.second : 0.0, 2) << "%\n";
    }
    if (question_overlap) {
      s << "question-passage overlap "
        << FormatDouble(question_overlap->second
                            ? question_overlap->first / question_overlap->second
                            : 0.0, 2)
        << "%\n";
    }
    text = s.str();
  }
  Emit(text, c.output, out);
  return kOk;
}

void AddEngineFlags(CLI::App *cmd, RunConfig *c) {
  cmd->add_flag("--copy-wh-phrase", c->copy_wh_phrase,
                "Keep the noun of Which/How wh phrases after the answer");
  cmd->add_option("--candidates", c->candidates, "Ranked candidates per question")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--irregular-past", c->irregular_past,
                  "lemma<TAB>past data file (default: bundled)");
  cmd->add_option("--irregular-3sg", c->irregular_3sg,
                  "lemma<TAB>3sg data file (default: bundled)");
  cmd->add_option("--consonant-doubling", c->consonant_doubling,
                  "lemma<TAB>consonant data file (default: bundled)");
  cmd->add_option("--prepositions", c->prepositions,
                  "word<TAB>class preposition table (default: bundled)");
  cmd->add_option("--article-exceptions", c->article_exceptions,
                  "name<TAB>article data file (default: bundled)");
}

void AddInputFlags(CLI::App *cmd, RunConfig *c) {
  cmd->add_option("--input", c->input, "QA JSONL file")->required();
  cmd->add_option("--parses", c->parses, "CoNLL-U question parses keyed by sent_id")
      ->required();
  cmd->add_option("--schema", c->schema, "span | multichoice | unanswerable")
      ->check(CLI::IsMember({"span", "multichoice", "unanswerable",
                             "unanswerable-aware"}))
      ->capture_default_str();
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  RunConfig c;
  CLI::App app{"Rule-based QA-to-declarative rewriting and QA-to-NLI conversion"};
  app.name(args.empty() ? "qa2d" : args.front());
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  CLI::App *qa2d = app.add_subcommand("qa2d", "Rewrite question+answer pairs as declaratives");
  AddInputFlags(qa2d, &c);
  qa2d->add_option("--output", c.output, "Output JSONL")->required();
  AddEngineFlags(qa2d, &c);
  qa2d->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App *convert = app.add_subcommand("convert", "Convert a QA dataset into NLI pairs");
  AddInputFlags(convert, &c);
  convert->add_option("--output", c.output, "Output NLI JSONL")->required();
  convert->add_option("--negatives", c.negatives, "all | one-random")
      ->check(CLI::IsMember({"all", "one-random"}));
  convert->add_option("--seed", c.seed, "RNG seed (required for one-random)");
  convert->add_option("--skip-report", c.skip_report, "JSONL file listing skipped examples");
  AddEngineFlags(convert, &c);
  convert->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App *eval = app.add_subcommand("eval", "Score declaratives against references");
  eval->add_option("--input", c.input, "Hypothesis JSONL (qa2d output)")->required();
  eval->add_option("--references", c.references,
                   "Reference JSONL: id, references[1..3], question, answer, qtype")
      ->required();
  eval->add_option("--k", c.k, "Top-k candidates to consider")->check(CLI::PositiveNumber);
  eval->add_option("--format", c.format, "json | text");
  eval->add_option("--output", c.output, "Report file (default: stdout)");
  eval->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App *analyze = app.add_subcommand("analyze", "Annotation-artifact statistics of an NLI corpus");
  analyze->add_option("--input", c.input, "NLI JSONL")->required();
  analyze->add_option("--smoothing", c.smoothing, "PMI add-k smoothing constant");
  analyze->add_option("--top", c.top, "Words per class in the PMI table")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--format", c.format, "json | text");
  analyze->add_option("--output", c.output, "Report file (default: stdout)");
  analyze->add_option("--histogram-csv", c.histogram_csv, "Length histogram CSV");
  analyze->add_option("--qa", c.qa_input, "QA JSONL for question-passage overlap");
  analyze->add_option("--schema", c.schema, "Schema of --qa")
      ->check(CLI::IsMember({"span", "multichoice", "unanswerable",
                             "unanswerable-aware"}));
  analyze->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kInputError;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (c.subcommand == "qa2d") return CmdQa2d(c, out, err);
    if (c.subcommand == "convert") return CmdConvert(c, out, err);
    if (c.subcommand == "eval") return CmdEval(c, out, err);
    return CmdAnalyze(c, out, err);
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const LoadError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const FormatError &e) {
    err << "error: parses: " << e.what() << '\n';
    return kInputError;
  } catch (const StructuralError &e) {
    err << "error: parses: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace qa2d::cli
