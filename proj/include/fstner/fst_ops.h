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

#ifndef FSTNER_FST_OPS_H_
#define FSTNER_FST_OPS_H_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "fstner/transducer.h"

namespace fstner {

// Single-state transducer copying every alphabet symbol.
Transducer Identity(std::vector<Symbol> alphabet);

// Replaces each wildcard edge (p, ?, ?, q) by (p, a, a, q) for every alphabet
// symbol a that labels no other out-edge of p. Throws FstError on a wildcard
// edge whose output is not the wildcard, or a concrete input with wildcard
// output.
Transducer ExpandWildcards(const Transducer& t);

// Keeps the states reachable from the initial state and co-reachable to a
// final state, renumbered in increasing order of their old ids. A reachable
// designated sink is kept as well. The initial state always survives, so a
// transducer with an empty relation trims to a single non-final state.
Transducer Trim(const Transducer& t);

// Product construction feeding the output of `first` into `second`. Both
// operands must be wildcard-free and share the alphabet. The result is
// trimmed and has no sink.
Transducer Compose(const Transducer& first, const Transducer& second);

inline constexpr std::size_t kMaxEnumerationLength = 20;

// Outputs of all accepting paths that consume `input` entirely. Wildcard
// edges are interpreted directly. Throws FstError if |input| exceeds
// kMaxEnumerationLength.
std::set<std::vector<Symbol>> EnumeratePaths(const Transducer& t,
                                             std::span<const Symbol> input);

}  // namespace fstner

#endif  // FSTNER_FST_OPS_H_
