// Copyright 2026 The fstner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fstner/determinize.h"
#include "fstner/dot.h"
#include "fstner/evaluate.h"
#include "fstner/fst_ops.h"
#include "fstner/local_extension.h"
#include "fstner/model.h"
#include "fstner/pipeline.h"

namespace fstner::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buffer.str();
}

// Writes to `path`, or to `out` when `path` is empty.
void WriteOutput(const std::string& path, std::string_view data,
                 std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << data;
  file.close();
  if (!file) throw IoError("cannot write " + path);
}

std::vector<std::string> SplitList(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct TrainArgs {
  std::string train_path;
  std::string model_path;
  std::string triggers;
  TrainOptions options;
};

int Train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  const TagAlphabet alphabet(args.triggers.empty()
                                 ? TagAlphabet::DefaultTriggers()
                                 : SplitList(args.triggers));
  const Corpus corpus = ParseConll(ReadFile(args.train_path), alphabet);
  TrainReport report;
  const Model model = TrainModel(
      corpus, alphabet, args.options, &report, [&](const LearnedRule& rule) {
        err << "rule " << FormatRule(rule, alphabet) << '\n';
      });
  err << "sentences: " << report.lexical_sentences << " lexical, "
      << report.rule_sentences << " contextual\n"
      << "token errors: " << report.errors_before << " -> "
      << report.errors_after << '\n'
      << "transducer: " << model.fst.state_count() << " states, "
      << report.compile.max_composed_states
      << " states before determinization\n";
  WriteOutput(args.model_path, SaveModel(model), out);
  return kOk;
}

int Tag(const std::string& model_path, const std::string& input_path,
        const std::string& output_path, std::ostream& out) {
  const Model model = LoadModel(ReadFile(model_path));
  const Corpus input =
      ParseConll(ReadFile(input_path), model.alphabet(),
                 {.allow_empty = true, .require_tags = false});
  WriteOutput(output_path, WriteConll(model.TagCorpus(input), model.alphabet()),
              out);
  return kOk;
}

int Eval(const std::string& gold_path, const std::string& pred_path,
         std::ostream& out) {
  const TagAlphabet alphabet;
  const Corpus gold = ParseConll(ReadFile(gold_path), alphabet);
  const Corpus pred = ParseConll(ReadFile(pred_path), alphabet);
  out << FormatReport(Evaluate(pred, gold, alphabet));
  return kOk;
}

int ExportDot(const std::string& model_path, const std::string& rule,
              const std::string& extra_symbols, const std::string& output_path,
              std::ostream& out) {
  if (!rule.empty()) {
    const RewriteRuleSpec spec = ParseRuleSpec(rule);
    std::set<Symbol> sigma(spec.pattern.begin(), spec.pattern.end());
    sigma.insert(spec.replacement);
    for (unsigned char c : extra_symbols) sigma.insert(c);
    const Transducer t =
        Trim(LocalExtension(spec, {sigma.begin(), sigma.end()}));
    WriteOutput(output_path, ToDot(t), out);
    return kOk;
  }
  const Model model = LoadModel(ReadFile(model_path));
  const TagAlphabet& alphabet = model.alphabet();
  WriteOutput(output_path,
              ToDot(model.fst, [&](Symbol a) { return alphabet.Name(a); }),
              out);
  return kOk;
}

}  // namespace

RewriteRuleSpec ParseRuleSpec(std::string_view text) {
  const auto first = text.find(':');
  const auto second =
      first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw MalformedRuleError("rule must look like PATTERN:POSITION:CHAR");
  }
  const std::string_view pattern = text.substr(0, first);
  const std::string_view position = text.substr(first + 1, second - first - 1);
  const std::string_view replacement = text.substr(second + 1);
  std::size_t k = 0;
  const auto [ptr, ec] =
      std::from_chars(position.data(), position.data() + position.size(), k);
  if (ec != std::errc() || ptr != position.data() + position.size()) {
    throw MalformedRuleError("bad rule position '" + std::string(position) + "'");
  }
  if (replacement.size() != 1) {
    throw MalformedRuleError("replacement must be a single character");
  }
  RewriteRuleSpec spec;
  for (unsigned char c : pattern) spec.pattern.push_back(c);
  spec.position = k;
  spec.replacement = static_cast<unsigned char>(replacement[0]);
  spec.Validate();
  return spec;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Named entity tagging with rules compiled into one transducer",
               "fstner"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Learn a model from CoNLL data");
  train_cmd->add_option("--train", train.train_path, "Training file")->required();
  train_cmd->add_option("--model", train.model_path, "Model file to write")
      ->required();
  train_cmd->add_option("--lexical-split", train.options.lexical_split,
                        "Share of sentences for the lexical tagger")
      ->capture_default_str();
  train_cmd->add_option("--rules", train.options.general_rules,
                        "Maximum general rules")
      ->capture_default_str();
  train_cmd->add_option("--trigger-rules", train.options.trigger_rules,
                        "Maximum trigger rules")
      ->capture_default_str();
  train_cmd->add_option("--context", train.options.max_context,
                        "Context tags on each side")
      ->capture_default_str();
  train_cmd->add_option("--min-score", train.options.min_score,
                        "Smallest score a rule may have")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--triggers", train.triggers,
                        "Comma-separated trigger words");
  train_cmd->add_option("--state-cap", train.options.state_cap,
                        "Determinization state limit")
      ->capture_default_str();

  std::string model_path, input_path, output_path;
  auto* tag_cmd = app.add_subcommand("tag", "Tag a CoNLL file");
  tag_cmd->add_option("--model", model_path, "Model file")->required();
  tag_cmd->add_option("--input", input_path, "Tokens, one per line")->required();
  tag_cmd->add_option("--output", output_path, "Output file (default stdout)");

  std::string gold_path, pred_path;
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions against gold");
  eval_cmd->add_option("--gold", gold_path, "Gold CoNLL file")->required();
  eval_cmd->add_option("--pred", pred_path, "Predicted CoNLL file")->required();

  std::string rule, extra_symbols;
  auto* dot_cmd =
      app.add_subcommand("export-dot", "Write a transducer as Graphviz DOT");
  auto* dot_model = dot_cmd->add_option("--model", model_path, "Model file");
  auto* dot_rule =
      dot_cmd->add_option("--rule", rule, "Single rule, e.g. bbac:2:b");
  dot_model->excludes(dot_rule);
  dot_cmd->add_option("--alphabet", extra_symbols,
                      "Extra symbols for a single rule's alphabet");
  dot_cmd->add_option("--output", output_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (*dot_cmd && !*dot_model && !*dot_rule) {
      throw CLI::RequiredError("--model or --rule");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*train_cmd) return Train(train, out, err);
    if (*tag_cmd) return Tag(model_path, input_path, output_path, out);
    if (*eval_cmd) return Eval(gold_path, pred_path, out);
    return ExportDot(model_path, rule, extra_symbols, output_path, out);
  } catch (const AlignmentError& e) {
    err << "fstner: " << e.what() << '\n';
    return kMisaligned;
  } catch (const DeterminizeError& e) {
    err << "fstner: " << e.what() << '\n';
    return kCompileError;
  } catch (const std::exception& e) {
    err << "fstner: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace fstner::cli
