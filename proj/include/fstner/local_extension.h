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

#ifndef FSTNER_LOCAL_EXTENSION_H_
#define FSTNER_LOCAL_EXTENSION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fstner/transducer.h"

namespace fstner {

// Transition of the KMP string-matching automaton for `pattern`: from state
// `q` (the length of the longest pattern prefix matched so far, q < |pattern|)
// reading `symbol`, returns the length of the longest prefix of `pattern`
// that is a suffix of pattern[0, q) + symbol.
int KmpNext(std::span<const Symbol> pattern, int q, Symbol symbol);

// Builds the local extension of a rewrite rule: the transducer that replaces
// every leftmost non-overlapping occurrence of spec.pattern by the pattern
// with spec.replacement at spec.position, copying all other symbols.
//
// Layout for a pattern of length m rewritten at position k:
//   states 0..m-1   prefix matching on the copy path, all final;
//   state m         the sink;
//   states m+1..2m-k-1 (only when k < m-1) verify the rest of an occurrence
//                   after the rewrite and are never final.
// Symbols of `alphabet` that do not occur in the pattern are covered by a
// wildcard edge back to state 0.
Transducer LocalExtension(
    const RewriteRuleSpec& spec, std::vector<Symbol> alphabet,
    std::size_t max_pattern_length = RewriteRuleSpec::kDefaultMaxLength);

}  // namespace fstner

#endif  // FSTNER_LOCAL_EXTENSION_H_
