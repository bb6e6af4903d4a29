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

#include <algorithm>
#include <random>
#include <set>

#include "fstner/learner.h"
#include "testing/oracles.h"

namespace fstner {
namespace {

const TagAlphabet kAlphabet;

Symbol Tag(std::string_view name) { return kAlphabet.Id(name); }

std::vector<Symbol> Tags(std::initializer_list<std::string_view> names) {
  std::vector<Symbol> out;
  for (auto n : names) out.push_back(Tag(n));
  return out;
}

TagSequences RandomSequences(std::mt19937& rng, std::size_t count,
                             std::size_t max_length,
                             const std::vector<Symbol>& tags) {
  TagSequences out(count);
  for (auto& seq : out) {
    seq.resize(rng() % (max_length + 1));
    for (Symbol& t : seq) t = tags[rng() % tags.size()];
  }
  return out;
}

// Every rule with 0 <= |left|, |right| <= max_context, at least one context
// tag and from != to, over `tags`.
std::vector<ContextualRule> AllRules(const std::vector<Symbol>& tags,
                                     std::size_t max_context) {
  std::vector<ContextualRule> out;
  for (std::size_t l = 0; l <= max_context; ++l) {
    for (std::size_t r = 0; r <= max_context; ++r) {
      if (l + r == 0) continue;
      for (const auto& left : testing::AllStrings(tags, l)) {
        for (const auto& right : testing::AllStrings(tags, r)) {
          for (Symbol from : tags) {
            for (Symbol to : tags) {
              if (from != to) out.push_back({left, from, to, right});
            }
          }
        }
      }
    }
  }
  return out;
}

TagSequences ApplyAll(TagSequences seqs, const ContextualRule& rule) {
  for (auto& s : seqs) s = ApplyRule(s, rule);
  return seqs;
}

TEST_CASE("score examples") {
  const TagSequences current = {Tags({"O", "B-PER", "O"})};
  const TagSequences gold = {Tags({"O", "B-LOC", "O"})};
  CHECK(ScoreRule(current, gold, {{Tag("O")}, Tag("B-PER"), Tag("B-LOC"),
                                  {Tag("O")}}) == 1);
  CHECK(ScoreRule(current, gold, {{Tag("B-PER")}, Tag("O"), Tag("B-ORG"), {}}) ==
        -1);
  CHECK(ScoreRule(current, gold, {{Tag("I-ORG")}, Tag("O"), Tag("B-ORG"), {}}) ==
        0);
  CHECK_THROWS_AS(ScoreRule(current, {Tags({"O"})}, {}), std::invalid_argument);
}

TEST_CASE("score equals the change in error count") {
  std::mt19937 rng(17);
  const std::vector<Symbol> tags = {0, 1, 2, 8};
  for (int trial = 0; trial < 300; ++trial) {
    const TagSequences gold = RandomSequences(rng, 20, 12, tags);
    TagSequences current = gold;
    for (auto& s : current) {
      for (Symbol& t : s) {
        if (rng() % 3 == 0) t = tags[rng() % tags.size()];
      }
    }
    ContextualRule rule;
    rule.left.resize(rng() % 3);
    rule.right.resize(rng() % 3);
    for (Symbol& t : rule.left) t = tags[rng() % tags.size()];
    for (Symbol& t : rule.right) t = tags[rng() % tags.size()];
    rule.from = tags[rng() % tags.size()];
    rule.to = tags[rng() % tags.size()];
    REQUIRE(ScoreRule(current, gold, rule) ==
            CountErrors(current, gold) -
                CountErrors(ApplyAll(current, rule), gold));
  }
}

TEST_CASE("candidate enumeration examples") {
  const TagSequences clean = {Tags({"O", "B-PER", "I-PER"})};
  CHECK(EnumerateCandidates(clean, clean, 2).empty());

  const TagSequences current = {Tags({"O", "TRIG_en", "B-PER", "O", "PUNCT"})};
  const TagSequences gold = {Tags({"O", "TRIG_en", "B-LOC", "O", "PUNCT"})};
  const auto candidates = EnumerateCandidates(current, gold, 2);
  CHECK(candidates.size() == 8);
  for (const ContextualRule& r : candidates) {
    CHECK(r.from == Tag("B-PER"));
    CHECK(r.to == Tag("B-LOC"));
    CHECK(ScoreRule(current, gold, r) == 1);
  }
  CHECK(std::is_sorted(candidates.begin(), candidates.end(),
                       [](const auto& a, const auto& b) {
                         return a.Encoding() < b.Encoding();
                       }));

  // Phase 2 only rewrites trigger tags.
  const auto filter = TriggerToEntityFilter(kAlphabet);
  CHECK(EnumerateCandidates({Tags({"O", "O", "B-PER"})},
                            {Tags({"O", "B-PER", "I-PER"})}, 2, filter)
            .empty());
  const auto phase2 = EnumerateCandidates(
      {Tags({"B-ORG", "TRIG_de", "I-ORG"})}, {Tags({"B-ORG", "I-ORG", "I-ORG"})},
      1, filter);
  CHECK(phase2.size() == 3);
  for (const ContextualRule& r : phase2) CHECK(r.from == Tag("TRIG_de"));
}

TEST_CASE("boundary positions get only the shapes that fit") {
  const TagSequences current = {Tags({"B-PER", "O"})};
  const TagSequences gold = {Tags({"B-LOC", "O"})};
  // Only right contexts of length 1 fit.
  const auto candidates = EnumerateCandidates(current, gold, 2);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].left.empty());
  CHECK(candidates[0].right == Tags({"O"}));
}

TEST_CASE("enumeration is complete on tiny corpora") {
  std::mt19937 rng(3);
  const std::vector<Symbol> tags = {0, 1, 8};
  const auto all = AllRules(tags, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const TagSequences gold = RandomSequences(rng, 3, 6, tags);
    TagSequences current = gold;
    for (auto& s : current) {
      for (Symbol& t : s) {
        if (rng() % 3 == 0) t = tags[rng() % tags.size()];
      }
    }
    const auto candidates = EnumerateCandidates(current, gold, 2);
    const std::set<ContextualRule> generated(candidates.begin(),
                                             candidates.end());
    for (const ContextualRule& r : all) {
      if (ScoreRule(current, gold, r) > 0) REQUIRE(generated.count(r) == 1);
    }
  }
}

// Greedy selection over every rule, scored the slow way.
LearnedRuleList BruteForceLearn(TagSequences current, const TagSequences& gold,
                                const std::vector<Symbol>& tags,
                                std::size_t max_context, std::size_t cap) {
  const auto all = AllRules(tags, max_context);
  LearnedRuleList out;
  while (out.size() < cap) {
    const ContextualRule* best = nullptr;
    std::int64_t best_score = 0;
    for (const ContextualRule& r : all) {
      const std::int64_t score = ScoreRule(current, gold, r);
      if (score <= 0) continue;
      const bool better =
          best == nullptr || score > best_score ||
          (score == best_score &&
           std::make_pair(r.length(), r.Encoding()) <
               std::make_pair(best->length(), best->Encoding()));
      if (better) {
        best = &r;
        best_score = score;
      }
    }
    if (best == nullptr) break;
    out.push_back({*best, best_score, Stage::kGeneral});
    current = ApplyAll(current, *best);
  }
  return out;
}

TEST_CASE("greedy learner matches exhaustive greedy search") {
  std::mt19937 rng(11);
  const std::vector<Symbol> tags = {0, 1, 8};
  LearnerOptions options;
  options.general_rules = 6;
  options.trigger_rules = 0;
  options.max_context = 1;
  for (int trial = 0; trial < 60; ++trial) {
    const TagSequences gold = RandomSequences(rng, 6, 8, tags);
    TagSequences current = gold;
    for (auto& s : current) {
      for (Symbol& t : s) {
        if (rng() % 4 == 0) t = tags[rng() % tags.size()];
      }
    }
    CAPTURE(trial);
    REQUIRE(LearnRules(current, gold, options) ==
            BruteForceLearn(current, gold, tags, 1, 6));
  }
}

TEST_CASE("learner stops immediately on a perfect corpus") {
  const TagSequences gold = {Tags({"O", "B-PER", "I-PER"}), Tags({"O"})};
  LearnerOptions options;
  options.trigger_filter = TriggerToEntityFilter(kAlphabet);
  CHECK(LearnRules(gold, gold, options).empty());
}

TEST_CASE("planted corruption is recovered first") {
  std::mt19937 rng(23);
  const std::vector<Symbol> pool =
      Tags({"O", "O", "O", "B-LOC", "I-LOC", "B-PER", "TRIG_en", "PUNCT"});
  TagSequences gold(400);
  for (auto& seq : gold) {
    seq.resize(1 + rng() % 15);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      do {
        seq[i] = pool[rng() % pool.size()];
      } while (i > 0 && seq[i - 1] == Tag("TRIG_en") && seq[i] == Tag("B-PER"));
    }
  }
  TagSequences current = gold;
  std::int64_t planted = 0;
  for (auto& seq : current) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i - 1] == Tag("TRIG_en") && seq[i] == Tag("B-LOC")) {
        seq[i] = Tag("B-PER");
        ++planted;
      }
    }
  }
  REQUIRE(planted > 10);
  LearnerOptions options;
  options.trigger_filter = TriggerToEntityFilter(kAlphabet);
  const LearnedRuleList rules = LearnRules(current, gold, options);
  REQUIRE(!rules.empty());
  CHECK(rules[0].rule ==
        ContextualRule{Tags({"TRIG_en"}), Tag("B-PER"), Tag("B-LOC"), {}});
  CHECK(rules[0].score == planted);
  CHECK(rules.size() == 1);
}

TEST_CASE("caps, stages and monotonicity") {
  std::mt19937 rng(31);
  const std::vector<Symbol> pool =
      Tags({"O", "B-PER", "I-PER", "B-ORG", "I-ORG", "TRIG_de", "TRIG_en"});
  const TagSequences gold = RandomSequences(rng, 200, 12, pool);
  TagSequences current = gold;
  for (auto& seq : current) {
    for (Symbol& t : seq) {
      if (rng() % 3 == 0) t = pool[rng() % pool.size()];
    }
  }

  LearnerOptions options;
  options.general_rules = 3;
  options.trigger_rules = 0;
  CHECK(LearnRules(current, gold, options).size() == 3);

  options.general_rules = 20;
  options.trigger_rules = 5;
  options.trigger_filter = TriggerToEntityFilter(kAlphabet);
  std::size_t callbacks = 0;
  options.on_rule = [&](const LearnedRule&) { ++callbacks; };
  const LearnedRuleList rules = LearnRules(current, gold, options);
  CHECK(callbacks == rules.size());
  std::size_t stage1 = 0;
  std::int64_t errors = CountErrors(current, gold);
  bool seen_stage2 = false;
  for (const LearnedRule& r : rules) {
    CHECK(r.score > 0);
    if (r.stage == Stage::kGeneral) {
      CHECK_FALSE(seen_stage2);
      ++stage1;
    } else {
      seen_stage2 = true;
      CHECK(kAlphabet.IsTrigger(r.rule.from));
      CHECK(kAlphabet.IsEntity(r.rule.to));
    }
    current = ApplyAll(current, r.rule);
    const std::int64_t after = CountErrors(current, gold);
    CHECK(after == errors - r.score);
    errors = after;
  }
  CHECK(stage1 == 20);
  CHECK(rules.size() <= 25);

  options.min_score = 0;
  CHECK_THROWS_AS(LearnRules(current, gold, options), std::invalid_argument);
  options.min_score = 1;
  options.trigger_filter = nullptr;
  CHECK_THROWS_AS(LearnRules(current, gold, options), std::invalid_argument);
}

}  // namespace
}  // namespace fstner
