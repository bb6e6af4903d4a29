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

#include "fstner/tag_alphabet.h"

#include <algorithm>
#include <stdexcept>

namespace fstner {

std::vector<std::string> TagAlphabet::DefaultTriggers() {
  return {"de", "del", "en", "por", "según"};
}

TagAlphabet::TagAlphabet(std::vector<std::string> trigger_words)
    : triggers_(std::move(trigger_words)) {
  for (std::string_view tag : kBioTags) names_.emplace_back(tag);
  names_.emplace_back(kPunctuationTag);
  for (const std::string& word : triggers_) {
    if (word.empty() ||
        std::ranges::any_of(word, [](char ch) {
          return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
        })) {
      throw std::invalid_argument("bad trigger word '" + word + "'");
    }
    names_.push_back(std::string(kTriggerPrefix) + word);
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!ids_.emplace(names_[i], static_cast<TagId>(i)).second) {
      throw std::invalid_argument("duplicate tag " + names_[i]);
    }
  }
}

std::vector<Symbol> TagAlphabet::symbols() const {
  std::vector<Symbol> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Symbol>(i);
  return out;
}

std::optional<TagId> TagAlphabet::Find(std::string_view name) const {
  const auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TagId TagAlphabet::Id(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw std::invalid_argument("unknown tag '" + std::string(name) + "'");
}

std::optional<TagId> TagAlphabet::TriggerTag(std::string_view word) const {
  const auto it = std::ranges::find(triggers_, word);
  if (it == triggers_.end()) return std::nullopt;
  return punctuation_ + 1 + static_cast<TagId>(it - triggers_.begin());
}

std::string_view TagAlphabet::EntityType(TagId tag) const {
  if (!IsEntity(tag)) return {};
  return std::string_view(names_[tag]).substr(2);
}

}  // namespace fstner
