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

#include "fstner/fst_ops.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>

namespace fstner {

Transducer Identity(std::vector<Symbol> alphabet) {
  Transducer t(std::move(alphabet));
  for (Symbol a : t.alphabet()) t.AddEdge(0, a, a, 0);
  t.SetFinal(0);
  return t;
}

Transducer ExpandWildcards(const Transducer& t) {
  Transducer out(t.alphabet(), t.state_count());
  for (StateId s = 0; s < t.state_count(); ++s) {
    out.SetFinal(s, t.IsFinal(s));
    std::vector<Symbol> explicit_inputs;
    for (const Arc& arc : t.Arcs(s)) {
      if (arc.input != kWildcard) {
        if (arc.output == kWildcard) {
          throw FstError("concrete input with wildcard output at state " +
                         std::to_string(s));
        }
        explicit_inputs.push_back(arc.input);
        out.AddEdge(s, arc.input, arc.output, arc.next);
      } else if (arc.output != kWildcard) {
        throw FstError("wildcard edge with concrete output at state " +
                       std::to_string(s));
      }
    }
    std::sort(explicit_inputs.begin(), explicit_inputs.end());
    for (const Arc& arc : t.Arcs(s)) {
      if (arc.input != kWildcard) continue;
      for (Symbol a : t.alphabet()) {
        if (!std::binary_search(explicit_inputs.begin(), explicit_inputs.end(),
                                a)) {
          out.AddEdge(s, a, a, arc.next);
        }
      }
    }
  }
  if (t.sink()) out.SetSink(*t.sink());
  return out;
}

Transducer Trim(const Transducer& t) {
  const StateId n = t.state_count();
  std::vector<bool> reachable(n, false);
  std::vector<StateId> stack = {t.initial()};
  reachable[t.initial()] = true;
  std::vector<std::vector<StateId>> reverse(n);
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const Arc& arc : t.Arcs(s)) {
      reverse[arc.next].push_back(s);
      if (!reachable[arc.next]) {
        reachable[arc.next] = true;
        stack.push_back(arc.next);
      }
    }
  }
  std::vector<bool> coreachable(n, false);
  for (StateId s = 0; s < n; ++s) {
    if (reachable[s] && t.IsFinal(s)) {
      coreachable[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (StateId prev : reverse[s]) {
      if (!coreachable[prev]) {
        coreachable[prev] = true;
        stack.push_back(prev);
      }
    }
  }

  const auto sink = t.sink();
  std::vector<StateId> renumber(n, kNoState);
  StateId kept = 0;
  for (StateId s = 0; s < n; ++s) {
    const bool keep = s == t.initial() || (reachable[s] && coreachable[s]) ||
                      (sink && s == *sink && reachable[s]);
    if (keep) renumber[s] = kept++;
  }
  Transducer out(t.alphabet(), kept);
  for (StateId s = 0; s < n; ++s) {
    if (renumber[s] == kNoState) continue;
    out.SetFinal(renumber[s], t.IsFinal(s) && coreachable[s]);
    if (!coreachable[s]) continue;
    for (const Arc& arc : t.Arcs(s)) {
      if (renumber[arc.next] == kNoState) continue;
      out.AddEdge(renumber[s], arc.input, arc.output, renumber[arc.next]);
    }
  }
  if (sink && renumber[*sink] != kNoState) out.SetSink(renumber[*sink]);
  return out;
}

Transducer Compose(const Transducer& first, const Transducer& second) {
  if (first.alphabet() != second.alphabet()) {
    throw FstError("cannot compose transducers over different alphabets");
  }
  if (first.HasWildcards() || second.HasWildcards()) {
    throw FstError("expand wildcards before composing");
  }

  // Out-arcs of `second` grouped by input symbol, per state.
  std::vector<std::unordered_map<Symbol, std::vector<Arc>>> by_input(
      second.state_count());
  for (StateId s = 0; s < second.state_count(); ++s) {
    for (const Arc& arc : second.Arcs(s)) by_input[s][arc.input].push_back(arc);
  }

  auto key = [](StateId a, StateId b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  };
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  Transducer out(first.alphabet());
  ids.emplace(key(0, 0), 0);
  queue.emplace_back(0, 0);
  auto lookup = [&](StateId a, StateId b) {
    auto [it, inserted] = ids.emplace(key(a, b), out.state_count());
    if (inserted) {
      out.AddState();
      queue.emplace_back(a, b);
    }
    return it->second;
  };

  while (!queue.empty()) {
    const auto [s1, s2] = queue.front();
    queue.pop_front();
    const StateId from = ids.at(key(s1, s2));
    out.SetFinal(from, first.IsFinal(s1) && second.IsFinal(s2));
    for (const Arc& a1 : first.Arcs(s1)) {
      const auto it = by_input[s2].find(a1.output);
      if (it == by_input[s2].end()) continue;
      for (const Arc& a2 : it->second) {
        out.AddEdge(from, a1.input, a2.output, lookup(a1.next, a2.next));
      }
    }
  }
  return Trim(out);
}

std::set<std::vector<Symbol>> EnumeratePaths(const Transducer& t,
                                             std::span<const Symbol> input) {
  if (input.size() > kMaxEnumerationLength) {
    throw FstError("input too long for path enumeration");
  }
  std::set<std::vector<Symbol>> results;
  std::vector<Symbol> output;
  std::function<void(StateId, std::size_t)> visit = [&](StateId s,
                                                         std::size_t pos) {
    if (pos == input.size()) {
      if (t.IsFinal(s)) results.insert(output);
      return;
    }
    const Symbol a = input[pos];
    const auto arcs = t.Arcs(s);
    const bool explicitly_labeled = std::ranges::any_of(
        arcs, [a](const Arc& arc) { return arc.input == a; });
    for (const Arc& arc : arcs) {
      const bool matches = arc.input == a ||
                           (arc.input == kWildcard && !explicitly_labeled);
      if (!matches) continue;
      output.push_back(arc.output == kWildcard ? a : arc.output);
      visit(arc.next, pos + 1);
      output.pop_back();
    }
  };
  visit(t.initial(), 0);
  return results;
}

}  // namespace fstner
