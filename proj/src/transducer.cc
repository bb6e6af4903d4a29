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

#include "fstner/transducer.h"

#include <algorithm>
#include <limits>
#include <string>

namespace fstner {
namespace {

std::vector<Symbol> Normalize(std::vector<Symbol> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  if (!alphabet.empty() && alphabet.front() < 0) {
    throw FstError("alphabet symbols must be non-negative");
  }
  return alphabet;
}

}  // namespace

Transducer::Transducer(std::vector<Symbol> alphabet, StateId state_count)
    : alphabet_(Normalize(std::move(alphabet))) {
  if (state_count < 1) throw FstError("a transducer needs at least one state");
  arcs_.resize(state_count);
  finals_.resize(state_count, false);
}

StateId Transducer::AddState() {
  arcs_.emplace_back();
  finals_.push_back(false);
  return state_count() - 1;
}

bool Transducer::InAlphabet(Symbol a) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), a);
}

void Transducer::CheckState(StateId s) const {
  if (s < 0 || s >= state_count()) {
    throw FstError("state " + std::to_string(s) + " out of range");
  }
}

void Transducer::AddEdge(StateId from, Symbol input, Symbol output,
                         StateId to) {
  CheckState(from);
  CheckState(to);
  if (from == sink_) throw FstError("the sink state cannot have out-edges");
  for (Symbol a : {input, output}) {
    if (a != kWildcard && !InAlphabet(a)) {
      throw FstError("symbol " + std::to_string(a) + " not in alphabet");
    }
  }
  auto& out = arcs_[from];
  const Arc arc{input, output, to};
  for (const Arc& existing : out) {
    if (existing == arc) return;
    if (input == kWildcard && existing.input == kWildcard) {
      throw FstError("state " + std::to_string(from) +
                     " already has a wildcard edge");
    }
  }
  out.push_back(arc);
}

void Transducer::SetFinal(StateId s, bool final) {
  CheckState(s);
  finals_[s] = final;
}

void Transducer::SetSink(StateId s) {
  CheckState(s);
  if (!arcs_[s].empty()) throw FstError("a sink state has no out-edges");
  if (finals_[s]) throw FstError("a sink state cannot be final");
  sink_ = s;
}

std::size_t Transducer::edge_count() const {
  std::size_t n = 0;
  for (const auto& out : arcs_) n += out.size();
  return n;
}

bool Transducer::HasWildcards() const {
  for (const auto& out : arcs_) {
    for (const Arc& arc : out) {
      if (arc.input == kWildcard || arc.output == kWildcard) return true;
    }
  }
  return false;
}

std::vector<Edge> Transducer::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (StateId s = 0; s < state_count(); ++s) {
    for (const Arc& arc : arcs_[s]) {
      edges.push_back({s, arc.input, arc.output, arc.next});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<StateId> Transducer::Finals() const {
  std::vector<StateId> finals;
  for (StateId s = 0; s < state_count(); ++s) {
    if (finals_[s]) finals.push_back(s);
  }
  return finals;
}

bool Transducer::operator==(const Transducer& other) const {
  return alphabet_ == other.alphabet_ && finals_ == other.finals_ &&
         sink_ == other.sink_ && Edges() == other.Edges();
}

void RewriteRuleSpec::Validate(std::size_t max_length) const {
  if (pattern.empty() || pattern.size() > max_length) {
    throw MalformedRuleError("pattern length must be in [1, " +
                             std::to_string(max_length) + "]");
  }
  if (position >= pattern.size()) {
    throw MalformedRuleError("rewrite position outside the pattern");
  }
  if (replacement == pattern[position]) {
    throw MalformedRuleError("replacement equals the rewritten symbol");
  }
  for (Symbol a : pattern) {
    if (a < 0) throw MalformedRuleError("pattern contains a wildcard");
  }
  if (replacement < 0) throw MalformedRuleError("replacement is a wildcard");
}

SubsequentialTransducer::SubsequentialTransducer(std::vector<Symbol> alphabet)
    : alphabet_(Normalize(std::move(alphabet))) {
  if (!alphabet_.empty()) {
    column_.assign(static_cast<std::size_t>(alphabet_.back()) + 1, -1);
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      column_[alphabet_[i]] = static_cast<int>(i);
    }
  }
}

int SubsequentialTransducer::ColumnOf(Symbol a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= column_.size()) return -1;
  return column_[a];
}

StateId SubsequentialTransducer::AddState() {
  table_.resize(table_.size() + alphabet_.size());
  finals_.push_back(false);
  final_outputs_.emplace_back();
  return state_count() - 1;
}

std::uint32_t SubsequentialTransducer::Intern(std::span<const Symbol> output) {
  if (output_pool_.size() + output.size() >
      std::numeric_limits<std::uint32_t>::max()) {
    throw FstError("output pool overflow");
  }
  const auto offset = static_cast<std::uint32_t>(output_pool_.size());
  output_pool_.insert(output_pool_.end(), output.begin(), output.end());
  return offset;
}

void SubsequentialTransducer::SetTransition(StateId from, Symbol input,
                                            StateId next,
                                            std::span<const Symbol> output) {
  if (from < 0 || from >= state_count() || next < 0 ||
      next >= state_count()) {
    throw FstError("transition endpoint out of range");
  }
  const int col = ColumnOf(input);
  if (col < 0) throw FstError("transition symbol not in alphabet");
  for (Symbol b : output) {
    if (ColumnOf(b) < 0) throw FstError("output symbol not in alphabet");
  }
  Transition& t = table_[from * alphabet_.size() + col];
  if (t.next != kNoState) {
    throw FstError("duplicate transition from state " + std::to_string(from));
  }
  t.next = next;
  t.output_offset = Intern(output);
  t.output_length = static_cast<std::uint32_t>(output.size());
}

void SubsequentialTransducer::SetFinal(StateId s,
                                       std::span<const Symbol> final_output) {
  if (s < 0 || s >= state_count()) throw FstError("final state out of range");
  for (Symbol b : final_output) {
    if (ColumnOf(b) < 0) throw FstError("output symbol not in alphabet");
  }
  finals_[s] = true;
  final_outputs_[s].output_offset = Intern(final_output);
  final_outputs_[s].output_length =
      static_cast<std::uint32_t>(final_output.size());
}

std::span<const Symbol> SubsequentialTransducer::FinalOutput(StateId s) const {
  return Output(final_outputs_.at(s));
}

const SubsequentialTransducer::Transition* SubsequentialTransducer::Find(
    StateId s, Symbol input) const {
  const int col = ColumnOf(input);
  if (col < 0 || s < 0 || s >= state_count()) return nullptr;
  const Transition& t = table_[s * alphabet_.size() + col];
  return t.next == kNoState ? nullptr : &t;
}

std::size_t SubsequentialTransducer::transition_count() const {
  return std::count_if(table_.begin(), table_.end(),
                       [](const Transition& t) { return t.next != kNoState; });
}

std::size_t SubsequentialTransducer::MaxOutputLength() const {
  std::size_t longest = 0;
  for (const Transition& t : table_) {
    if (t.next != kNoState) longest = std::max<std::size_t>(longest, t.output_length);
  }
  for (const Transition& t : final_outputs_) {
    longest = std::max<std::size_t>(longest, t.output_length);
  }
  return longest;
}

std::vector<Symbol> SubsequentialTransducer::Run(
    std::span<const Symbol> input, RunStats* stats) const {
  std::vector<Symbol> output;
  output.reserve(input.size());
  const std::size_t width = alphabet_.size();
  StateId state = initial();
  if (state >= state_count()) throw FstError("empty transducer");
  for (Symbol a : input) {
    const int col = ColumnOf(a);
    if (col < 0) {
      throw FstError("input symbol " + std::to_string(a) +
                     " not in alphabet");
    }
    const Transition& t = table_[state * width + col];
    if (stats != nullptr) ++stats->transitions;
    if (t.next == kNoState) {
      throw FstError("no transition from state " + std::to_string(state));
    }
    const auto out = Output(t);
    output.insert(output.end(), out.begin(), out.end());
    state = t.next;
  }
  if (!finals_[state]) {
    throw FstError("input ends in non-final state " + std::to_string(state));
  }
  const auto flush = FinalOutput(state);
  output.insert(output.end(), flush.begin(), flush.end());
  return output;
}

bool SubsequentialTransducer::operator==(
    const SubsequentialTransducer& other) const {
  if (alphabet_ != other.alphabet_ || finals_ != other.finals_) return false;
  for (StateId s = 0; s < state_count(); ++s) {
    if (finals_[s] && !std::ranges::equal(FinalOutput(s),
                                          other.FinalOutput(s))) {
      return false;
    }
    for (Symbol a : alphabet_) {
      const Transition* t = Find(s, a);
      const Transition* u = other.Find(s, a);
      if ((t == nullptr) != (u == nullptr)) return false;
      if (t != nullptr &&
          (t->next != u->next || !std::ranges::equal(Output(*t), other.Output(*u)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace fstner
