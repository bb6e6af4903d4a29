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

#ifndef FSTNER_TRIE_H_
#define FSTNER_TRIE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fstner/tag_alphabet.h"

namespace fstner {

// Byte-keyed trie mapping strings to tags. Lookup follows one edge per key
// byte.
class Trie {
 public:
  Trie() : nodes_(1) {}

  // Overwrites an existing payload. Throws std::invalid_argument for an
  // empty key.
  void Insert(std::string_view key, TagId tag);

  // `steps`, when given, receives the number of edges followed.
  std::optional<TagId> Lookup(std::string_view key,
                              std::size_t* steps = nullptr) const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // All (key, tag) pairs in byte-lexicographic key order.
  std::vector<std::pair<std::string, TagId>> Entries() const;

  bool operator==(const Trie& other) const {
    return Entries() == other.Entries();
  }

 private:
  static constexpr TagId kNoPayload = -1;

  struct Node {
    // Sorted by byte.
    std::vector<std::pair<unsigned char, std::int32_t>> children;
    TagId payload = kNoPayload;
  };

  std::int32_t Child(std::int32_t node, unsigned char byte) const;

  std::vector<Node> nodes_;
  std::size_t size_ = 0;
};

}  // namespace fstner

#endif  // FSTNER_TRIE_H_
