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

// Command-line front end. Exposed as a library so tests can drive it.

#ifndef FSTNER_TOOLS_COMMANDS_H_
#define FSTNER_TOOLS_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fstner/transducer.h"

namespace fstner::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kMisaligned = 3,
  kCompileError = 4,
};

// "bbac:2:b": pattern bytes, rewrite position, replacement byte.
RewriteRuleSpec ParseRuleSpec(std::string_view text);

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fstner::cli

#endif  // FSTNER_TOOLS_COMMANDS_H_
