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

#ifndef FSTNER_TAG_ALPHABET_H_
#define FSTNER_TAG_ALPHABET_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fstner/transducer.h"

namespace fstner {

using TagId = Symbol;

// The tagging alphabet: the nine BIO tags, PUNCT, then one TRIG_<word> tag
// per trigger word. Tag ids are positions in this order, which also decides
// every tie between tags.
class TagAlphabet {
 public:
  static constexpr std::array<std::string_view, 9> kBioTags = {
      "B-PER", "I-PER", "B-ORG", "I-ORG", "B-LOC",
      "I-LOC", "B-MISC", "I-MISC", "O"};
  static constexpr std::string_view kPunctuationTag = "PUNCT";
  static constexpr std::string_view kTriggerPrefix = "TRIG_";

  static std::vector<std::string> DefaultTriggers();

  // Trigger words must be distinct non-empty strings without whitespace;
  // std::invalid_argument otherwise.
  explicit TagAlphabet(std::vector<std::string> trigger_words = DefaultTriggers());

  std::size_t size() const { return names_.size(); }
  const std::string& Name(TagId tag) const { return names_.at(tag); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& trigger_words() const { return triggers_; }
  // 0 .. size()-1.
  std::vector<Symbol> symbols() const;

  std::optional<TagId> Find(std::string_view name) const;
  // Throws std::invalid_argument for unknown names.
  TagId Id(std::string_view name) const;

  TagId outside() const { return outside_; }
  TagId punctuation() const { return punctuation_; }
  std::optional<TagId> TriggerTag(std::string_view word) const;

  bool IsBio(TagId tag) const { return tag >= 0 && tag < kBioCount; }
  bool IsEntity(TagId tag) const { return IsBio(tag) && tag != outside_; }
  bool IsBegin(TagId tag) const { return IsEntity(tag) && tag % 2 == 0; }
  bool IsInside(TagId tag) const { return IsEntity(tag) && tag % 2 == 1; }
  bool IsTrigger(TagId tag) const {
    return tag > punctuation_ && tag < static_cast<TagId>(size());
  }
  // "PER", "ORG", ... for entity tags, empty otherwise.
  std::string_view EntityType(TagId tag) const;
  TagId BeginOf(TagId inside) const { return inside - 1; }

  bool operator==(const TagAlphabet& other) const {
    return names_ == other.names_;
  }

 private:
  static constexpr TagId kBioCount = 9;

  std::vector<std::string> names_;
  std::vector<std::string> triggers_;
  std::unordered_map<std::string, TagId> ids_;
  TagId outside_ = 8;
  TagId punctuation_ = 9;
};

}  // namespace fstner

#endif  // FSTNER_TAG_ALPHABET_H_
