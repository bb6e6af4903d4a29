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

#include "fstner/learner.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace fstner {
namespace {

struct Position {
  std::uint32_t sentence;
  std::uint32_t index;
};

// Positions of every tag in the current sequences, in text order.
using TagIndex = std::vector<std::vector<Position>>;

TagIndex BuildIndex(const TagSequences& current, std::size_t tag_count) {
  TagIndex index(tag_count);
  for (std::size_t s = 0; s < current.size(); ++s) {
    for (std::size_t i = 0; i < current[s].size(); ++i) {
      const auto tag = static_cast<std::size_t>(current[s][i]);
      if (tag >= index.size()) index.resize(tag + 1);
      index[tag].push_back(
          {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(i)});
    }
  }
  return index;
}

bool MatchesAt(const std::vector<Symbol>& tags, std::size_t start,
               const std::vector<Symbol>& pattern) {
  return start + pattern.size() <= tags.size() &&
         std::equal(pattern.begin(), pattern.end(), tags.begin() + start);
}

// Exact score using the occurrences of rule.from only.
std::int64_t FastScore(const TagSequences& current, const TagSequences& gold,
                       const TagIndex& index, const ContextualRule& rule) {
  const auto from = static_cast<std::size_t>(rule.from);
  if (from >= index.size()) return 0;
  const std::vector<Symbol> pattern = rule.Pattern();
  const std::size_t offset = rule.left.size();
  std::int64_t score = 0;
  std::uint32_t last_sentence = UINT32_MAX;
  std::size_t resume = 0;  // first start allowed after the previous match
  for (const Position& p : index[from]) {
    if (p.index < offset) continue;
    const std::size_t start = p.index - offset;
    if (p.sentence == last_sentence && start < resume) continue;
    const auto& tags = current[p.sentence];
    if (!MatchesAt(tags, start, pattern)) continue;
    last_sentence = p.sentence;
    resume = start + pattern.size();
    const Symbol want = gold[p.sentence][p.index];
    if (want == rule.from) {
      --score;
    } else if (want == rule.to) {
      ++score;
    }
  }
  return score;
}

// Candidates with the number of errors each one would fix if nothing
// overlapped, an upper bound on its score.
std::map<ContextualRule, std::int64_t> CountCandidates(
    const TagSequences& current, const TagSequences& gold,
    std::size_t max_context, const CandidateFilter& filter) {
  std::map<ContextualRule, std::int64_t> counts;
  for (std::size_t s = 0; s < current.size(); ++s) {
    const auto& tags = current[s];
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (tags[i] == gold[s][i]) continue;
      if (filter && !filter(tags[i], gold[s][i])) continue;
      for (std::size_t l = 0; l <= max_context && l <= i; ++l) {
        for (std::size_t r = 0; r <= max_context && i + r < tags.size(); ++r) {
          if (l + r == 0) continue;
          ContextualRule rule;
          rule.left.assign(tags.begin() + (i - l), tags.begin() + i);
          rule.from = tags[i];
          rule.to = gold[s][i];
          rule.right.assign(tags.begin() + i + 1, tags.begin() + i + 1 + r);
          ++counts[rule];
        }
      }
    }
  }
  return counts;
}

// Orders equally scored rules: shorter pattern, then smaller encoding.
bool Preferred(const ContextualRule& a, const ContextualRule& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.Encoding() < b.Encoding();
}

}  // namespace

void CheckAligned(const TagSequences& current, const TagSequences& gold) {
  if (current.size() != gold.size()) {
    throw std::invalid_argument("current and gold differ in sentence count");
  }
  for (std::size_t s = 0; s < current.size(); ++s) {
    if (current[s].size() != gold[s].size()) {
      throw std::invalid_argument("sentence " + std::to_string(s) +
                                  " differs in length from gold");
    }
  }
}

std::int64_t CountErrors(const TagSequences& current, const TagSequences& gold) {
  CheckAligned(current, gold);
  std::int64_t errors = 0;
  for (std::size_t s = 0; s < current.size(); ++s) {
    for (std::size_t i = 0; i < current[s].size(); ++i) {
      errors += current[s][i] != gold[s][i];
    }
  }
  return errors;
}

std::int64_t ScoreRule(const TagSequences& current, const TagSequences& gold,
                       const ContextualRule& rule) {
  CheckAligned(current, gold);
  std::int64_t score = 0;
  for (std::size_t s = 0; s < current.size(); ++s) {
    const auto changed = ApplyRule(current[s], rule);
    for (std::size_t i = 0; i < changed.size(); ++i) {
      if (changed[i] == current[s][i]) continue;
      if (current[s][i] == gold[s][i]) {
        --score;
      } else if (changed[i] == gold[s][i]) {
        ++score;
      }
    }
  }
  return score;
}

CandidateFilter TriggerToEntityFilter(const TagAlphabet& alphabet) {
  return [alphabet](Symbol from, Symbol to) {
    return alphabet.IsTrigger(from) && alphabet.IsEntity(to);
  };
}

std::vector<ContextualRule> EnumerateCandidates(
    const TagSequences& current, const TagSequences& gold,
    std::size_t max_context, const CandidateFilter& filter) {
  CheckAligned(current, gold);
  std::vector<ContextualRule> out;
  for (auto& [rule, count] : CountCandidates(current, gold, max_context, filter)) {
    out.push_back(rule);
  }
  std::sort(out.begin(), out.end(),
            [](const ContextualRule& a, const ContextualRule& b) {
              return a.Encoding() < b.Encoding();
            });
  return out;
}

LearnedRuleList LearnRules(TagSequences current, const TagSequences& gold,
                           const LearnerOptions& options) {
  CheckAligned(current, gold);
  if (options.min_score < 1) {
    throw std::invalid_argument("minimum rule score must be positive");
  }
  if (options.trigger_rules > 0 && !options.trigger_filter) {
    throw std::invalid_argument("the trigger stage needs a candidate filter");
  }
  Symbol max_tag = 0;
  for (const TagSequences* seqs : {&std::as_const(current), &gold}) {
    for (const auto& tags : *seqs) {
      for (Symbol t : tags) {
        if (t < 0) throw std::invalid_argument("negative tag");
        max_tag = std::max(max_tag, t);
      }
    }
  }

  LearnedRuleList learned;
  const std::pair<Stage, std::size_t> stages[] = {
      {Stage::kGeneral, options.general_rules},
      {Stage::kTrigger, options.trigger_rules}};
  for (const auto& [stage, cap] : stages) {
    const CandidateFilter filter =
        stage == Stage::kTrigger ? options.trigger_filter : nullptr;
    for (std::size_t n = 0; n < cap; ++n) {
      const auto counts =
          CountCandidates(current, gold, options.max_context, filter);
      std::vector<std::pair<std::int64_t, const ContextualRule*>> order;
      order.reserve(counts.size());
      for (const auto& [rule, count] : counts) order.emplace_back(count, &rule);
      std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return Preferred(*a.second, *b.second);
      });

      const TagIndex index = BuildIndex(current, max_tag + 1);
      const ContextualRule* best = nullptr;
      std::int64_t best_score = 0;
      for (const auto& [bound, rule] : order) {
        if (best != nullptr && bound < best_score) break;
        if (bound < options.min_score) break;
        const std::int64_t score = FastScore(current, gold, index, *rule);
        if (best == nullptr || score > best_score ||
            (score == best_score && Preferred(*rule, *best))) {
          best = rule;
          best_score = score;
        }
      }
      if (best == nullptr || best_score < options.min_score) break;

      learned.push_back({*best, best_score, stage});
      for (auto& tags : current) tags = ApplyRule(tags, *best);
      if (options.on_rule) options.on_rule(learned.back());
    }
  }
  return learned;
}

}  // namespace fstner
