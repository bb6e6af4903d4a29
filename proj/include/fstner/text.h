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

#ifndef FSTNER_TEXT_H_
#define FSTNER_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace fstner {

bool IsValidUtf8(std::string_view text);

// Number of code points; invalid bytes count one each.
std::size_t CodePointCount(std::string_view text);

// The last `n` code points of `text` (all of it when shorter).
std::string_view LastCodePoints(std::string_view text, std::size_t n);

// Reverses the order of code points, keeping each one's bytes intact.
std::string ReverseCodePoints(std::string_view text);

// Uppercase and titlecase letters become 'X', lowercase letters 'x', decimal
// digits 'd'; everything else is copied.
std::string ShapeEncode(std::string_view word);

// True for a non-empty token made only of Unicode punctuation (general
// categories Pc, Pd, Ps, Pe, Pi, Pf, Po).
bool IsPunctuation(std::string_view token);

}  // namespace fstner

#endif  // FSTNER_TEXT_H_
