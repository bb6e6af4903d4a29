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

#include "fstner/determinize.h"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fstner/fst_ops.h"

namespace fstner {
namespace {

struct Element {
  StateId state;
  std::vector<Symbol> pending;

  auto operator<=>(const Element&) const = default;
};

// Sorted by source state; each source state appears once.
using Subset = std::vector<Element>;

}  // namespace

SubsequentialTransducer Determinize(const Transducer& input,
                                    const DeterminizeOptions& options,
                                    DeterminizeStats* stats) {
  if (input.HasWildcards()) {
    throw FstError("expand wildcards before determinizing");
  }
  // Dead branches would carry pending output forever.
  Transducer t = input;
  t.ClearSink();
  t = Trim(t);

  SubsequentialTransducer out(t.alphabet());
  std::map<Subset, StateId> ids;
  std::deque<const Subset*> queue;
  std::size_t max_pending = 0;

  auto intern = [&](Subset subset) {
    auto [it, inserted] = ids.emplace(std::move(subset), out.state_count());
    if (inserted) {
      if (ids.size() > options.state_cap) {
        throw DeterminizeError(
            DeterminizeError::Kind::kStateCap,
            "determinization exceeded the state cap of " +
                std::to_string(options.state_cap));
      }
      out.AddState();
      queue.push_back(&it->first);
      for (const Element& e : it->first) {
        max_pending = std::max(max_pending, e.pending.size());
      }
    }
    return it->second;
  };

  intern(Subset{{t.initial(), {}}});
  // Candidate next elements, keyed by target state, for one input symbol.
  std::map<StateId, std::vector<Symbol>> candidates;
  while (!queue.empty()) {
    const Subset& subset = *queue.front();
    queue.pop_front();
    const StateId from = ids.at(subset);

    const std::vector<Symbol>* final_output = nullptr;
    for (const Element& e : subset) {
      if (!t.IsFinal(e.state)) continue;
      if (final_output != nullptr && *final_output != e.pending) {
        throw DeterminizeError(DeterminizeError::Kind::kNonFunctional,
                               "conflicting final outputs in subset of state " +
                                   std::to_string(from));
      }
      final_output = &e.pending;
    }
    if (final_output != nullptr) out.SetFinal(from, *final_output);

    for (Symbol a : t.alphabet()) {
      candidates.clear();
      for (const Element& e : subset) {
        for (const Arc& arc : t.Arcs(e.state)) {
          if (arc.input != a) continue;
          std::vector<Symbol> pending = e.pending;
          pending.push_back(arc.output);
          auto [it, inserted] = candidates.emplace(arc.next, pending);
          if (!inserted && it->second != pending) {
            throw DeterminizeError(
                DeterminizeError::Kind::kNonFunctional,
                "state " + std::to_string(arc.next) +
                    " reached with different outputs");
          }
        }
      }
      if (candidates.empty()) continue;

      std::size_t common = candidates.begin()->second.size();
      const auto& reference = candidates.begin()->second;
      for (const auto& [state, pending] : candidates) {
        const auto mismatch =
            std::mismatch(reference.begin(), reference.begin() + common,
                          pending.begin(), pending.end());
        common = std::min<std::size_t>(common,
                                       mismatch.first - reference.begin());
      }
      const std::vector<Symbol> emitted(reference.begin(),
                                        reference.begin() + common);
      Subset next;
      next.reserve(candidates.size());
      for (auto& [state, pending] : candidates) {
        next.push_back({state, std::vector<Symbol>(pending.begin() + common,
                                                   pending.end())});
      }
      const StateId to = intern(std::move(next));
      out.SetTransition(from, a, to, emitted);
    }
  }
  if (stats != nullptr) {
    stats->states = static_cast<std::size_t>(out.state_count());
    stats->max_pending = max_pending;
  }
  return out;
}

}  // namespace fstner
