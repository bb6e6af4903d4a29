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

#ifndef FSTNER_EVALUATE_H_
#define FSTNER_EVALUATE_H_

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fstner/corpus.h"

namespace fstner {

class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EntityCounts {
  std::size_t gold = 0;
  std::size_t predicted = 0;
  std::size_t correct = 0;

  double precision() const;
  double recall() const;
  // 2PR / (P + R), or 0 when P + R = 0.
  double f1() const;
};

struct EvalReport {
  std::map<std::string, EntityCounts> by_type;
  EntityCounts overall;
  std::size_t tokens = 0;
};

// A maximal B-X (I-X)* span, [begin, end).
struct Entity {
  std::size_t begin;
  std::size_t end;
  std::string type;

  auto operator<=>(const Entity&) const = default;
};

// Trigger and PUNCT tags become O, and an I-X not preceded by B-X or I-X
// becomes B-X.
std::vector<TagId> RepairBio(std::span<const TagId> tags,
                             const TagAlphabet& alphabet);

bool IsBioConsistent(std::span<const TagId> tags, const TagAlphabet& alphabet);

// Entities of a repaired tag sequence.
std::vector<Entity> ExtractEntities(std::span<const TagId> tags,
                                    const TagAlphabet& alphabet);

// Exact-match entity scoring. The system output is repaired first; gold
// sequences go through the same lenient reading. Throws AlignmentError
// unless both corpora have the same sentences and token surfaces.
EvalReport Evaluate(const Corpus& predicted, const Corpus& gold,
                    const TagAlphabet& alphabet);

// conlleval-style summary with percentages to one decimal.
std::string FormatReport(const EvalReport& report);

}  // namespace fstner

#endif  // FSTNER_EVALUATE_H_
