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

#ifndef FSTNER_COMPILE_H_
#define FSTNER_COMPILE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fstner/determinize.h"
#include "fstner/rules.h"
#include "fstner/transducer.h"

namespace fstner {

struct CompileOptions {
  std::size_t state_cap = 1'000'000;
  std::size_t max_pattern_length = RewriteRuleSpec::kDefaultMaxLength;
};

struct CompileStats {
  // Largest intermediate composed transducer.
  std::size_t max_composed_states = 0;
  std::size_t composed_states = 0;
  DeterminizeStats determinized;
};

// Folds the rules in order into one transducer: starting from the identity,
// each rule's expanded local extension is composed on the right and the
// result trimmed; the final transducer is determinized. Running the result
// equals applying the rules one after another with ApplyRule.
SubsequentialTransducer CompileRules(std::span<const ContextualRule> rules,
                                     std::vector<Symbol> alphabet,
                                     const CompileOptions& options = {},
                                     CompileStats* stats = nullptr);

SubsequentialTransducer CompileRules(const LearnedRuleList& rules,
                                     std::vector<Symbol> alphabet,
                                     const CompileOptions& options = {},
                                     CompileStats* stats = nullptr);

}  // namespace fstner

#endif  // FSTNER_COMPILE_H_
