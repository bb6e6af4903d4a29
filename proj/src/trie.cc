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

#include "fstner/trie.h"

#include <algorithm>
#include <stdexcept>

namespace fstner {

std::int32_t Trie::Child(std::int32_t node, unsigned char byte) const {
  const auto& children = nodes_[node].children;
  const auto it = std::lower_bound(
      children.begin(), children.end(), byte,
      [](const auto& child, unsigned char b) { return child.first < b; });
  if (it == children.end() || it->first != byte) return -1;
  return it->second;
}

void Trie::Insert(std::string_view key, TagId tag) {
  if (key.empty()) throw std::invalid_argument("empty trie key");
  std::int32_t node = 0;
  for (char ch : key) {
    const auto byte = static_cast<unsigned char>(ch);
    std::int32_t next = Child(node, byte);
    if (next < 0) {
      next = static_cast<std::int32_t>(nodes_.size());
      nodes_.emplace_back();
      auto& children = nodes_[node].children;
      children.insert(
          std::lower_bound(
              children.begin(), children.end(), byte,
              [](const auto& child, unsigned char b) { return child.first < b; }),
          {byte, next});
    }
    node = next;
  }
  if (nodes_[node].payload == kNoPayload) ++size_;
  nodes_[node].payload = tag;
}

std::optional<TagId> Trie::Lookup(std::string_view key,
                                  std::size_t* steps) const {
  std::int32_t node = 0;
  std::size_t taken = 0;
  for (char ch : key) {
    node = Child(node, static_cast<unsigned char>(ch));
    if (node < 0) break;
    ++taken;
  }
  if (steps != nullptr) *steps = taken;
  if (node < 0 || key.empty() || nodes_[node].payload == kNoPayload) {
    return std::nullopt;
  }
  return nodes_[node].payload;
}

std::vector<std::pair<std::string, TagId>> Trie::Entries() const {
  std::vector<std::pair<std::string, TagId>> out;
  out.reserve(size_);
  std::string key;
  // Depth-first in byte order yields sorted keys.
  struct Frame {
    std::int32_t node;
    std::size_t next_child;
  };
  std::vector<Frame> stack = {{0, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Node& node = nodes_[top.node];
    if (top.next_child == 0 && node.payload != kNoPayload) {
      out.emplace_back(key, node.payload);
    }
    if (top.next_child < node.children.size()) {
      const auto [byte, child] = node.children[top.next_child++];
      key.push_back(static_cast<char>(byte));
      stack.push_back({child, 0});
    } else {
      stack.pop_back();
      if (!key.empty()) key.pop_back();
    }
  }
  return out;
}

}  // namespace fstner
