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

#ifndef FSTNER_LEARNER_H_
#define FSTNER_LEARNER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fstner/rules.h"
#include "fstner/tag_alphabet.h"

namespace fstner {

// One tag sequence per sentence.
using TagSequences = std::vector<std::vector<Symbol>>;

// Throws std::invalid_argument unless both have the same shape.
void CheckAligned(const TagSequences& current, const TagSequences& gold);

std::int64_t CountErrors(const TagSequences& current, const TagSequences& gold);

// (# positions changed from wrong to correct) - (# changed from correct to
// wrong) when `rule` is applied to every sentence of `current`.
std::int64_t ScoreRule(const TagSequences& current, const TagSequences& gold,
                       const ContextualRule& rule);

// Keeps candidate rules by their (from, to) pair; null keeps everything.
using CandidateFilter = std::function<bool(Symbol from, Symbol to)>;

// Trigger tag rewritten into a B-* or I-* tag.
CandidateFilter TriggerToEntityFilter(const TagAlphabet& alphabet);

// Rules instantiated at every error position: for each i left and j right
// context tags available in the sentence (0 <= i, j <= max_context,
// i + j >= 1), the rule (current context, current tag -> gold tag). Sorted by
// encoding, no duplicates.
std::vector<ContextualRule> EnumerateCandidates(
    const TagSequences& current, const TagSequences& gold,
    std::size_t max_context, const CandidateFilter& filter = nullptr);

struct LearnerOptions {
  std::size_t general_rules = 100;
  std::size_t trigger_rules = 15;
  std::size_t max_context = 2;
  // Rules scoring below this end a stage. Must be positive.
  std::int64_t min_score = 1;
  // Required for the trigger stage when trigger_rules > 0.
  CandidateFilter trigger_filter;
  // Called after each rule is chosen.
  std::function<void(const LearnedRule&)> on_rule;
};

// Greedy transformation-based learning. Each step picks the best scoring
// candidate (ties: shorter pattern, then smaller encoding), records it and
// applies it to `current`. The general stage runs first, then the trigger
// stage restricted by options.trigger_filter.
LearnedRuleList LearnRules(TagSequences current, const TagSequences& gold,
                           const LearnerOptions& options);

}  // namespace fstner

#endif  // FSTNER_LEARNER_H_
