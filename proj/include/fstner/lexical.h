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

#ifndef FSTNER_LEXICAL_H_
#define FSTNER_LEXICAL_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fstner/corpus.h"
#include "fstner/tag_alphabet.h"
#include "fstner/trie.h"

namespace fstner {

// Decision steps of the lexical tagger, in the order they are tried.
enum class LexicalSource {
  kPunctuation,
  kTrigger,
  kWord,
  kSuffix,
  kShape,
  kDefault,
};

struct LexicalTrace {
  std::array<bool, 6> consulted{};
  LexicalSource source = LexicalSource::kDefault;
};

// Initial tagger: most likely tag per known word, with suffix and word-shape
// fallbacks for unknown words.
class LexicalModel {
 public:
  static constexpr std::size_t kSuffixLength = 4;

  explicit LexicalModel(TagAlphabet alphabet);

  const TagAlphabet& alphabet() const { return alphabet_; }
  TagId default_tag() const { return alphabet_.outside(); }

  void AddWord(std::string_view word, TagId tag);
  // `suffix` in reading order; it is stored reversed.
  void AddSuffix(std::string_view suffix, TagId tag);
  void AddShape(std::string_view shape, TagId tag);

  const Trie& word_trie() const { return words_; }
  const Trie& suffix_trie() const { return suffixes_; }
  const Trie& shape_trie() const { return shapes_; }
  // Suffixes in reading order, sorted.
  std::vector<std::pair<std::string, TagId>> SuffixEntries() const;

  // Punctuation, trigger word, known word, suffix, shape, then O.
  TagId TagToken(std::string_view token, LexicalTrace* trace = nullptr) const;
  std::vector<TagId> TagSentence(std::span<const std::string> tokens) const;
  std::vector<TagId> TagSentence(const Sentence& sentence) const;

  bool operator==(const LexicalModel& other) const;

 private:
  void CheckTag(TagId tag) const;

  TagAlphabet alphabet_;
  Trie words_;
  Trie suffixes_;
  Trie shapes_;
};

// Key under which a word's suffix is stored: its last kSuffixLength code
// points (the whole word when shorter), reversed.
std::string SuffixKey(std::string_view word);

// Counts tags per word, per suffix and per shape over `corpus` and keeps the
// most frequent tag of each key; ties go to the smaller tag id. Throws
// std::invalid_argument on an empty corpus or tags outside `alphabet`.
LexicalModel TrainLexical(const Corpus& corpus, const TagAlphabet& alphabet);

}  // namespace fstner

#endif  // FSTNER_LEXICAL_H_
