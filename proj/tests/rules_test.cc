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

#include <random>

#include "fstner/rules.h"
#include "testing/oracles.h"

namespace fstner {
namespace {

using testing::Str;

ContextualRule Rule(std::string_view left, char from, char to,
                    std::string_view right) {
  return {Str(left), from, to, Str(right)};
}

std::string Apply(std::string_view text, const ContextualRule& rule) {
  return Str(ApplyRule(Str(text), rule));
}

TEST_CASE("leftmost non-overlapping application") {
  // aa -> ba at position 0.
  const ContextualRule aa = Rule("", 'a', 'b', "a");
  CHECK(Apply("aaa", aa) == "baa");
  CHECK(Apply("aaaa", aa) == "baba");
  CHECK(Apply("", aa) == "");
  CHECK(Apply("a", aa) == "a");
  // bbac -> bbbc.
  const ContextualRule bbac = Rule("bb", 'a', 'b', "c");
  CHECK(Apply("bbacbbac", bbac) == "bbbcbbbc");
  CHECK(Apply("bbbac", bbac) == "bbbbc");
  // Matches are found on the input, not on rewritten output.
  CHECK(Apply("bbacac", Rule("b", 'a', 'b', "")) == "bbbcac");
  CHECK(Apply("aaa", Rule("a", 'a', 'c', "")) == "aca");
}

TEST_CASE("agrees with the brute-force rewriter") {
  std::mt19937 rng(5);
  const std::vector<Symbol> sigma = Str("abc");
  for (int trial = 0; trial < 2000; ++trial) {
    ContextualRule r;
    const std::size_t left = rng() % 3, right = rng() % 3;
    for (std::size_t i = 0; i < left; ++i) r.left.push_back(sigma[rng() % 3]);
    r.from = sigma[rng() % 3];
    r.to = sigma[rng() % 3];
    for (std::size_t i = 0; i < right; ++i) r.right.push_back(sigma[rng() % 3]);
    std::vector<Symbol> text(rng() % 15);
    for (Symbol& s : text) s = sigma[rng() % 3];
    REQUIRE(ApplyRule(text, r) ==
            testing::ReplaceLeftmost(text, r.Pattern(), r.left.size(), r.to));
  }
}

TEST_CASE("pattern, spec and encoding") {
  const ContextualRule r = Rule("xy", 'a', 'b', "z");
  CHECK(r.length() == 4);
  CHECK(r.Pattern() == Str("xyaz"));
  const RewriteRuleSpec spec = r.ToSpec();
  CHECK(spec.pattern == Str("xyaz"));
  CHECK(spec.position == 2);
  CHECK(spec.replacement == 'b');
  CHECK(r.Encoding() == std::vector<Symbol>{2, 'x', 'y', 'a', 'b', 'z'});
  // Same pattern with a different split encodes differently.
  CHECK(Rule("x", 'y', 'b', "az").Encoding() != r.Encoding());
}

TEST_CASE("text format round trip") {
  const TagAlphabet alphabet;
  const auto id = [&](std::string_view n) { return alphabet.Id(n); };
  const LearnedRuleList rules = {
      {{{id("TRIG_en")}, id("B-PER"), id("B-LOC"), {}}, 42, Stage::kGeneral},
      {{{}, id("B-LOC"), id("B-ORG"), {id("I-ORG")}}, 7, Stage::kGeneral},
      {{{id("B-ORG"), id("I-ORG")}, id("TRIG_de"), id("I-ORG"), {id("I-ORG")}},
       1, Stage::kTrigger},
      {{{}, id("O"), id("B-MISC"), {}}, 3, Stage::kGeneral},
  };
  CHECK(FormatRule(rules[0], alphabet) ==
        "TRIG_en | B-PER -> B-LOC | # score=42 stage=1");
  CHECK(FormatRule(rules[1], alphabet) ==
        "| B-LOC -> B-ORG | I-ORG # score=7 stage=1");
  CHECK(FormatRule(rules[2], alphabet) ==
        "B-ORG I-ORG | TRIG_de -> I-ORG | I-ORG # score=1 stage=2");
  for (const LearnedRule& r : rules) {
    const std::string line = FormatRule(r, alphabet);
    CHECK(ParseRule(line, alphabet) == r);
    CHECK(FormatRule(ParseRule(line, alphabet), alphabet) == line);
  }
}

TEST_CASE("malformed rule lines") {
  const TagAlphabet alphabet;
  for (std::string_view bad : {
           "| O -> B-PER |",                        // no metadata
           "O -> B-PER # score=1 stage=1",          // no separators
           "| O B-PER | # score=1 stage=1",         // no arrow
           "| O -> O | # score=1 stage=1",          // identity
           "| O -> B-FOO | # score=1 stage=1",      // unknown tag
           "| O -> B-PER | # score=x stage=1",      // bad number
           "| O -> B-PER | # score=1 stage=3",      // bad stage
           "| O -> B-PER | | # score=1 stage=1",    // extra bar
           "| O I-PER -> B-PER | # score=1 stage=1",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseRule(bad, alphabet), std::invalid_argument);
  }
}

}  // namespace
}  // namespace fstner
