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

#include "fstner/local_extension.h"

#include <algorithm>

namespace fstner {
namespace {

using SymbolSpan = std::span<const Symbol>;

bool IsSuffix(SymbolSpan suffix, SymbolSpan text) {
  return suffix.size() <= text.size() &&
         std::equal(suffix.begin(), suffix.end(),
                    text.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

bool IsPrefix(SymbolSpan prefix, SymbolSpan text) {
  return prefix.size() <= text.size() &&
         std::equal(prefix.begin(), prefix.end(), text.begin());
}

}  // namespace

int KmpNext(std::span<const Symbol> pattern, int q, Symbol symbol) {
  const int m = static_cast<int>(pattern.size());
  std::vector<Symbol> text(pattern.begin(), pattern.begin() + q);
  text.push_back(symbol);
  // j indexes the last symbol of the candidate prefix; j = -1 is the empty
  // prefix, which is a suffix of everything.
  int j = std::min(m, q + 1);
  do {
    --j;
  } while (!IsSuffix(pattern.first(j + 1), text));
  return j + 1;
}

Transducer LocalExtension(const RewriteRuleSpec& spec,
                          std::vector<Symbol> alphabet,
                          std::size_t max_pattern_length) {
  spec.Validate(max_pattern_length);
  const SymbolSpan p = spec.pattern;
  const int m = static_cast<int>(p.size());
  const int k = static_cast<int>(spec.position);
  const Symbol c = spec.replacement;

  Transducer t(std::move(alphabet));
  for (Symbol a : p) {
    if (!t.InAlphabet(a)) throw MalformedRuleError("pattern symbol not in alphabet");
  }
  if (!t.InAlphabet(c)) throw MalformedRuleError("replacement not in alphabet");

  std::vector<Symbol> pattern_symbols(p.begin(), p.end());
  std::sort(pattern_symbols.begin(), pattern_symbols.end());
  pattern_symbols.erase(
      std::unique(pattern_symbols.begin(), pattern_symbols.end()),
      pattern_symbols.end());
  const bool has_other_symbols = std::ranges::any_of(
      t.alphabet(), [&](Symbol a) {
        return !std::binary_search(pattern_symbols.begin(),
                                   pattern_symbols.end(), a);
      });

  const int state_count = k < m - 1 ? 2 * m - k : m + 1;
  while (t.state_count() < state_count) t.AddState();

  // Copy path: the string-matching automaton. Reaching m means a complete
  // occurrence went unrewritten, so m is the sink.
  for (int q = 0; q < m; ++q) {
    for (Symbol a : pattern_symbols) {
      t.AddEdge(q, a, a, KmpNext(p, q, a));
    }
    if (has_other_symbols) t.AddEdge(q, kWildcard, kWildcard, 0);
    t.SetFinal(q);
  }
  t.SetSink(m);

  // Rewrite path: after P[k]/c the rest of the occurrence must follow.
  StateId trans_node = 0;
  if (k < m - 1) {
    trans_node = m + 1;
    for (int i = k + 1; i <= m - 2; ++i) {
      const StateId node = m + i - k;
      t.AddEdge(node, p[i], p[i], node + 1);
      t.AddEdge(node, kWildcard, kWildcard, m);
    }
  }
  t.AddEdge(k, p[k], c, trans_node);
  if (k < m - 1) {
    const StateId last = 2 * m - k - 1;
    t.AddEdge(last, p[m - 1], p[m - 1], 0);
    t.AddEdge(last, kWildcard, kWildcard, m);
  }

  // Rewrites that start inside a partial, not yet rewritten occurrence. The
  // new occurrence is admissible only if its first k symbols end the text
  // read so far and the pending occurrence cannot complete inside it.
  for (int i = k + 1; i <= m - 1; ++i) {
    std::vector<Symbol> s(p.begin() + k, p.begin() + i);
    s.insert(s.end(), p.begin() + k, p.end());
    const SymbolSpan sv = s;
    const bool continues_prefix = IsSuffix(p.first(k), p.first(i));
    const bool completes_pending = IsPrefix(sv.first(m - k), sv.subspan(i - k));
    if (continues_prefix && !completes_pending) {
      t.AddEdge(i, p[k], c, trans_node);
    }
  }
  return t;
}

}  // namespace fstner
