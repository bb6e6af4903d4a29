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

#ifndef FSTNER_DOT_H_
#define FSTNER_DOT_H_

#include <functional>
#include <string>

#include "fstner/transducer.h"

namespace fstner {

// Maps a symbol to its display label. The wildcard is always shown as "?".
using SymbolLabeler = std::function<std::string(Symbol)>;

// Labels printable ASCII symbols by their character, others by number.
std::string DefaultSymbolLabel(Symbol a);

// Graphviz DOT. Edges are labeled "in/out", final states are double circles,
// the sink (if any) is drawn dashed.
std::string ToDot(const Transducer& t,
                  const SymbolLabeler& label = DefaultSymbolLabel);

// As above; multi-symbol outputs are joined by spaces, an empty output is
// shown as "ε", and final outputs appear inside final state labels.
std::string ToDot(const SubsequentialTransducer& t,
                  const SymbolLabeler& label = DefaultSymbolLabel);

}  // namespace fstner

#endif  // FSTNER_DOT_H_
