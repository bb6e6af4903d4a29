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

#ifndef FSTNER_RULES_H_
#define FSTNER_RULES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fstner/tag_alphabet.h"
#include "fstner/transducer.h"

namespace fstner {

// "left from right -> left to right": rewrite `from` to `to` where it is
// preceded by `left` and followed by `right`.
struct ContextualRule {
  std::vector<Symbol> left;
  Symbol from = 0;
  Symbol to = 0;
  std::vector<Symbol> right;

  std::size_t length() const { return left.size() + 1 + right.size(); }
  std::vector<Symbol> Pattern() const;
  RewriteRuleSpec ToSpec() const;
  // Lexicographic key used to break ties between equally scored rules.
  std::vector<Symbol> Encoding() const;

  auto operator<=>(const ContextualRule&) const = default;
};

enum class Stage { kGeneral = 1, kTrigger = 2 };

struct LearnedRule {
  ContextualRule rule;
  std::int64_t score = 0;
  Stage stage = Stage::kGeneral;

  bool operator==(const LearnedRule&) const = default;
};

using LearnedRuleList = std::vector<LearnedRule>;

// Leftmost non-overlapping application: scanning left to right, each
// position where the whole pattern matches the input gets `from` rewritten
// to `to` and the scan resumes after the match.
std::vector<Symbol> ApplyRule(std::span<const Symbol> tags,
                              const ContextualRule& rule);

// "left | from -> to | right # score=S stage=K", tags separated by spaces.
std::string FormatRule(const LearnedRule& rule, const TagAlphabet& alphabet);
// Throws std::invalid_argument on syntax errors or unknown tags.
LearnedRule ParseRule(std::string_view line, const TagAlphabet& alphabet);

}  // namespace fstner

#endif  // FSTNER_RULES_H_
