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

#include "fstner/text.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <vector>

namespace fstner {
namespace {

// Calls fn(code_point, begin, end) per code point; code_point < 0 marks an
// ill-formed sequence.
template <typename Fn>
void ForEachCodePoint(std::string_view text, Fn fn) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    fn(c, static_cast<std::size_t>(start), static_cast<std::size_t>(i));
  }
}

}  // namespace

bool IsValidUtf8(std::string_view text) {
  bool valid = true;
  ForEachCodePoint(text, [&](UChar32 c, std::size_t, std::size_t) {
    if (c < 0) valid = false;
  });
  return valid;
}

std::size_t CodePointCount(std::string_view text) {
  std::size_t n = 0;
  ForEachCodePoint(text, [&](UChar32, std::size_t, std::size_t) { ++n; });
  return n;
}

std::string_view LastCodePoints(std::string_view text, std::size_t n) {
  std::vector<std::size_t> starts;
  ForEachCodePoint(text, [&](UChar32, std::size_t begin, std::size_t) {
    starts.push_back(begin);
  });
  if (starts.size() <= n) return text;
  return text.substr(starts[starts.size() - n]);
}

std::string ReverseCodePoints(std::string_view text) {
  std::vector<std::string_view> pieces;
  ForEachCodePoint(text, [&](UChar32, std::size_t begin, std::size_t end) {
    pieces.push_back(text.substr(begin, end - begin));
  });
  std::string out;
  out.reserve(text.size());
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) out += *it;
  return out;
}

std::string ShapeEncode(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  ForEachCodePoint(word, [&](UChar32 c, std::size_t begin, std::size_t end) {
    if (c >= 0) {
      const int8_t category = u_charType(c);
      if (category == U_UPPERCASE_LETTER || category == U_TITLECASE_LETTER) {
        out += 'X';
        return;
      }
      if (category == U_LOWERCASE_LETTER) {
        out += 'x';
        return;
      }
      if (category == U_DECIMAL_DIGIT_NUMBER) {
        out += 'd';
        return;
      }
    }
    out.append(word.substr(begin, end - begin));
  });
  return out;
}

bool IsPunctuation(std::string_view token) {
  if (token.empty()) return false;
  bool all = true;
  ForEachCodePoint(token, [&](UChar32 c, std::size_t, std::size_t) {
    if (c < 0 || !u_ispunct(c)) all = false;
  });
  return all;
}

}  // namespace fstner
