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

#include "fstner/dot.h"

#include <sstream>

namespace fstner {
namespace {

std::string Escape(const std::string& s) {
  std::string escaped;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') escaped += '\\';
    escaped += ch;
  }
  return escaped;
}

std::string Quote(const std::string& s) { return "\"" + Escape(s) + "\""; }

std::string Label(Symbol a, const SymbolLabeler& label) {
  return a == kWildcard ? "?" : label(a);
}

std::string Join(std::span<const Symbol> symbols, const SymbolLabeler& label) {
  if (symbols.empty()) return "ε";
  std::string joined;
  for (Symbol a : symbols) {
    if (!joined.empty()) joined += ' ';
    joined += Label(a, label);
  }
  return joined;
}

void Header(std::ostringstream& out, const char* name) {
  out << "digraph " << name << " {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n"
      << "  start [shape=point];\n"
      << "  start -> 0;\n";
}

}  // namespace

std::string DefaultSymbolLabel(Symbol a) {
  if (a >= 0x21 && a < 0x7f) return std::string(1, static_cast<char>(a));
  return std::to_string(a);
}

std::string ToDot(const Transducer& t, const SymbolLabeler& label) {
  std::ostringstream out;
  Header(out, "Transducer");
  for (StateId s = 0; s < t.state_count(); ++s) {
    out << "  " << s;
    if (t.IsFinal(s)) {
      out << " [shape=doublecircle]";
    } else if (t.sink() == s) {
      out << " [style=dashed]";
    }
    out << ";\n";
  }
  for (const Edge& e : t.Edges()) {
    out << "  " << e.from << " -> " << e.to << " [label="
        << Quote(Label(e.input, label) + "/" + Label(e.output, label))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ToDot(const SubsequentialTransducer& t,
                  const SymbolLabeler& label) {
  std::ostringstream out;
  Header(out, "Subsequential");
  for (StateId s = 0; s < t.state_count(); ++s) {
    out << "  " << s;
    if (t.IsFinal(s)) {
      out << " [shape=doublecircle, label=\"" << s << "\\n/"
          << Escape(Join(t.FinalOutput(s), label)) << "\"]";
    }
    out << ";\n";
  }
  for (StateId s = 0; s < t.state_count(); ++s) {
    for (Symbol a : t.alphabet()) {
      const auto* tr = t.Find(s, a);
      if (tr == nullptr) continue;
      out << "  " << s << " -> " << tr->next << " [label="
          << Quote(Label(a, label) + "/" + Join(t.Output(*tr), label))
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fstner
