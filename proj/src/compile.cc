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

#include "fstner/compile.h"

#include <algorithm>

#include "fstner/fst_ops.h"
#include "fstner/local_extension.h"

namespace fstner {

SubsequentialTransducer CompileRules(std::span<const ContextualRule> rules,
                                     std::vector<Symbol> alphabet,
                                     const CompileOptions& options,
                                     CompileStats* stats) {
  if (alphabet.empty()) throw FstError("empty alphabet");
  CompileStats local;
  Transducer acc = Identity(alphabet);
  for (const ContextualRule& rule : rules) {
    const Transducer step = ExpandWildcards(
        LocalExtension(rule.ToSpec(), alphabet, options.max_pattern_length));
    acc = Compose(acc, step);
    local.max_composed_states = std::max<std::size_t>(
        local.max_composed_states, static_cast<std::size_t>(acc.state_count()));
  }
  local.composed_states = static_cast<std::size_t>(acc.state_count());
  auto result =
      Determinize(acc, {.state_cap = options.state_cap}, &local.determinized);
  if (stats != nullptr) *stats = local;
  return result;
}

SubsequentialTransducer CompileRules(const LearnedRuleList& rules,
                                     std::vector<Symbol> alphabet,
                                     const CompileOptions& options,
                                     CompileStats* stats) {
  std::vector<ContextualRule> plain;
  plain.reserve(rules.size());
  for (const LearnedRule& r : rules) plain.push_back(r.rule);
  return CompileRules(plain, std::move(alphabet), options, stats);
}

}  // namespace fstner
