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

#ifndef FSTNER_DETERMINIZE_H_
#define FSTNER_DETERMINIZE_H_

#include <cstddef>

#include "fstner/transducer.h"

namespace fstner {

class DeterminizeError : public FstError {
 public:
  enum class Kind { kNonFunctional, kStateCap };

  DeterminizeError(Kind kind, const std::string& what)
      : FstError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct DeterminizeOptions {
  std::size_t state_cap = 1'000'000;
};

struct DeterminizeStats {
  std::size_t states = 0;
  // Longest pending (delayed) output held by any subset element.
  std::size_t max_pending = 0;
};

// Turns a wildcard-free transducer that is functional on its domain into an
// equivalent subsequential transducer. Subset elements are (source state,
// pending output) pairs; each transition emits the longest common prefix of
// the candidates' pending outputs.
//
// Throws DeterminizeError(kNonFunctional) when two paths on the same input
// disagree, and DeterminizeError(kStateCap) once more than
// options.state_cap states would be created.
SubsequentialTransducer Determinize(const Transducer& t,
                                    const DeterminizeOptions& options = {},
                                    DeterminizeStats* stats = nullptr);

}  // namespace fstner

#endif  // FSTNER_DETERMINIZE_H_
