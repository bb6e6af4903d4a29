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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fstner/learner.h"
#include "fstner/model.h"
#include "fstner/pipeline.h"
#include "testing/synthetic.h"

namespace fstner {
namespace {

const TagAlphabet kAlphabet;

Model Trained(std::size_t sentences = 400) {
  return TrainModel(testing::SyntheticCorpus(sentences, 7, kAlphabet),
                    kAlphabet, {});
}

TEST_CASE("save, load, save is byte-identical") {
  const Model model = Trained();
  REQUIRE(!model.rules.empty());
  const std::string text = SaveModel(model);
  CHECK(text.starts_with("fstner-model 1\n[ALPHABET]\nB-PER\n"));
  const Model loaded = LoadModel(text);
  CHECK(SaveModel(loaded) == text);
  CHECK(loaded.lexical == model.lexical);
  CHECK(loaded.rules == model.rules);
  CHECK(loaded.fst == model.fst);

  const Corpus probe = testing::SyntheticCorpus(200, 8, kAlphabet);
  CHECK(WriteConll(loaded.TagCorpus(probe), kAlphabet) ==
        WriteConll(model.TagCorpus(probe), kAlphabet));
}

TEST_CASE("custom triggers survive a round trip") {
  const TagAlphabet alphabet({"hacia", "desde"});
  Model model{LexicalModel(alphabet), {},
              SubsequentialTransducer(alphabet.symbols())};
  const StateId s = model.fst.AddState();
  model.fst.SetFinal(s, {});
  for (Symbol a : alphabet.symbols()) {
    const Symbol out[] = {a};
    model.fst.SetTransition(s, a, s, out);
  }
  model.lexical.AddWord("Lima", alphabet.Id("B-LOC"));
  const std::string text = SaveModel(model);
  CHECK(text.find("[TRIGGERS]\nhacia\ndesde\n") != std::string::npos);
  CHECK(text.find("TRIG_hacia\nTRIG_desde\n") != std::string::npos);
  const Model loaded = LoadModel(text);
  CHECK(loaded.alphabet() == alphabet);
  CHECK(SaveModel(loaded) == text);
}

TEST_CASE("tagging runs one transition per token") {
  const Model model = Trained();
  const Corpus probe = testing::SyntheticCorpus(100, 9, kAlphabet);
  std::size_t transitions = 0;
  const Corpus tagged = model.TagCorpus(probe, &transitions);
  CHECK(transitions == probe.token_count());
  // The transducer is the sequential fold of the rules.
  for (const Sentence* s : probe.sentences()) {
    std::vector<TagId> tags = model.lexical.TagSentence(*s);
    for (const LearnedRule& r : model.rules) tags = ApplyRule(tags, r.rule);
    REQUIRE(model.TagSentence(*s) == tags);
  }
}

TEST_CASE("malformed model files name the line") {
  const std::string good = SaveModel(Trained(50));
  const auto broken = [&](std::string_view from, std::string_view to) {
    std::string text = good;
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    return text;
  };
  for (const std::string& bad : {
           std::string(),
           broken("fstner-model 1", "fstner-model 2"),
           broken("[SUFFIX]\n", ""),
           broken("B-PER\n", "B-PERSON\n"),
           broken("states ", "states x"),
           broken("initial 0", "initial 1"),
           broken("edge 0 B-PER", "edge 0 B-FOO"),
           good + "edge 999 B-PER 0 O\n",
           good.substr(0, good.size() - 1),
           good + "edge 0 O 0 O\n",  // duplicate transition
           good + "junk\n",
       }) {
    CHECK_THROWS_AS(LoadModel(bad), ModelFormatError);
  }
  try {
    LoadModel(broken("initial 0", "initial 1"));
  } catch (const ModelFormatError& e) {
    CHECK(e.line() > 1);
  }
}

TEST_CASE("training with no rules gives the identity machine") {
  TrainOptions options;
  options.general_rules = 0;
  options.trigger_rules = 0;
  const Model model = TrainModel(testing::SyntheticCorpus(50, 3, kAlphabet),
                                 kAlphabet, options);
  CHECK(model.rules.empty());
  CHECK(model.fst.state_count() == 1);
  CHECK(SaveModel(model).find("[RULES]\n[FST]\n") != std::string::npos);
}

TEST_CASE("training report") {
  TrainReport report;
  std::size_t logged = 0;
  const Model model =
      TrainModel(testing::SyntheticCorpus(200, 4, kAlphabet), kAlphabet, {},
                 &report, [&](const LearnedRule&) { ++logged; });
  CHECK(logged == model.rules.size());
  CHECK(report.lexical_sentences == 170);
  CHECK(report.rule_sentences == 30);
  std::int64_t total = 0;
  for (const LearnedRule& r : model.rules) total += r.score;
  CHECK(report.errors_before - report.errors_after == total);
  CHECK(report.compile.determinized.states ==
        static_cast<std::size_t>(model.fst.state_count()));
  CHECK_THROWS_AS(TrainModel(testing::SyntheticCorpus(1, 4, kAlphabet),
                             kAlphabet, {}),
                  std::invalid_argument);
}

}  // namespace
}  // namespace fstner
