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

#ifndef FSTNER_TRANSDUCER_H_
#define FSTNER_TRANSDUCER_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fstner {

// Symbols of the tag alphabet. Non-negative values are real symbols; the
// wildcard stands for "any input symbol not labeling another out-edge of the
// source state" and, on the output side, for "copy the input symbol".
using Symbol = std::int32_t;
using StateId = std::int32_t;

inline constexpr Symbol kWildcard = -1;
inline constexpr StateId kNoState = -1;

class FstError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for rewrite rules that violate their invariants.
class MalformedRuleError : public FstError {
 public:
  using FstError::FstError;
};

struct Arc {
  Symbol input;
  Symbol output;
  StateId next;

  auto operator<=>(const Arc&) const = default;
};

struct Edge {
  StateId from;
  Symbol input;
  Symbol output;
  StateId to;

  auto operator<=>(const Edge&) const = default;
};

// Nondeterministic letter-to-letter transducer. The initial state is always
// state 0. Every edge reads exactly one symbol and writes exactly one symbol;
// at most one wildcard-input edge leaves any state, and the designated sink
// state (if any) has no out-going edges.
class Transducer {
 public:
  // Creates a transducer with `state_count` states (at least one) over the
  // given alphabet. The alphabet is sorted and deduplicated; symbols must be
  // non-negative.
  explicit Transducer(std::vector<Symbol> alphabet, StateId state_count = 1);

  StateId AddState();

  // Adds the edge unless an identical one exists. Throws FstError when an
  // endpoint is out of range, a symbol is outside the alphabet, a second
  // wildcard-input edge would leave `from`, or `from` is the sink.
  void AddEdge(StateId from, Symbol input, Symbol output, StateId to);
  void AddEdge(const Edge& e) { AddEdge(e.from, e.input, e.output, e.to); }

  void SetFinal(StateId s, bool final = true);
  void SetSink(StateId s);
  void ClearSink() { sink_ = kNoState; }

  StateId state_count() const { return static_cast<StateId>(arcs_.size()); }
  StateId initial() const { return 0; }
  bool IsFinal(StateId s) const { return finals_.at(s); }
  std::optional<StateId> sink() const {
    if (sink_ == kNoState) return std::nullopt;
    return sink_;
  }
  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  bool InAlphabet(Symbol a) const;

  std::span<const Arc> Arcs(StateId s) const { return arcs_.at(s); }
  std::size_t edge_count() const;
  bool HasWildcards() const;

  // All edges sorted by (from, input, output, to).
  std::vector<Edge> Edges() const;
  std::vector<StateId> Finals() const;

  // Structural equality: same alphabet, states, finals, sink and edge set.
  bool operator==(const Transducer& other) const;

 private:
  void CheckState(StateId s) const;

  std::vector<Symbol> alphabet_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<bool> finals_;
  StateId sink_ = kNoState;
};

// A rewrite rule P -> P' where P' equals P except at `position`, which holds
// `replacement`.
struct RewriteRuleSpec {
  static constexpr std::size_t kDefaultMaxLength = 5;

  std::vector<Symbol> pattern;
  std::size_t position = 0;
  Symbol replacement = 0;

  // Throws MalformedRuleError unless 1 <= |pattern| <= max_length,
  // position < |pattern| and replacement != pattern[position].
  void Validate(std::size_t max_length = kDefaultMaxLength) const;
};

// Deterministic transducer with string outputs on transitions and a final
// output flushed when the input ends in a final state.
class SubsequentialTransducer {
 public:
  struct Transition {
    StateId next = kNoState;
    std::uint32_t output_offset = 0;
    std::uint32_t output_length = 0;
  };

  struct RunStats {
    std::size_t transitions = 0;
  };

  explicit SubsequentialTransducer(std::vector<Symbol> alphabet);

  StateId AddState();
  // Sets the unique transition for (from, input). Throws FstError if one is
  // already defined or arguments are out of range.
  void SetTransition(StateId from, Symbol input, StateId next,
                     std::span<const Symbol> output);
  void SetFinal(StateId s, std::span<const Symbol> final_output);

  StateId state_count() const { return static_cast<StateId>(finals_.size()); }
  StateId initial() const { return 0; }
  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  bool IsFinal(StateId s) const { return finals_.at(s); }
  std::span<const Symbol> FinalOutput(StateId s) const;

  // Returns nullptr when no transition is defined.
  const Transition* Find(StateId s, Symbol input) const;
  std::span<const Symbol> Output(const Transition& t) const {
    return {output_pool_.data() + t.output_offset, t.output_length};
  }
  std::size_t transition_count() const;
  // Length of the longest transition or final output.
  std::size_t MaxOutputLength() const;

  // Follows the unique path for `input` and returns the concatenated outputs
  // plus the final output of the end state. Throws FstError when the input
  // leaves the domain.
  std::vector<Symbol> Run(std::span<const Symbol> input,
                          RunStats* stats = nullptr) const;

  bool operator==(const SubsequentialTransducer& other) const;

 private:
  int ColumnOf(Symbol a) const;
  std::uint32_t Intern(std::span<const Symbol> output);

  std::vector<Symbol> alphabet_;
  std::vector<int> column_;  // symbol value -> alphabet index, -1 if absent
  std::vector<Transition> table_;  // state_count x alphabet size
  std::vector<bool> finals_;
  std::vector<Transition> final_outputs_;  // `next` unused
  std::vector<Symbol> output_pool_;
};

}  // namespace fstner

#endif  // FSTNER_TRANSDUCER_H_
