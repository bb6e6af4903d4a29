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

#include "fstner/lexical.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "fstner/text.h"

namespace fstner {
namespace {

using Counts = std::unordered_map<std::string, std::vector<std::size_t>>;

void Count(Counts& counts, std::string key, TagId tag, std::size_t tags) {
  auto& row = counts[std::move(key)];
  if (row.empty()) row.resize(tags, 0);
  ++row[tag];
}

TagId Argmax(const std::vector<std::size_t>& row) {
  // max_element keeps the first maximum, i.e. the smallest tag id.
  return static_cast<TagId>(std::max_element(row.begin(), row.end()) -
                            row.begin());
}

}  // namespace

std::string SuffixKey(std::string_view word) {
  return ReverseCodePoints(LastCodePoints(word, LexicalModel::kSuffixLength));
}

LexicalModel::LexicalModel(TagAlphabet alphabet)
    : alphabet_(std::move(alphabet)) {}

void LexicalModel::CheckTag(TagId tag) const {
  if (tag < 0 || static_cast<std::size_t>(tag) >= alphabet_.size()) {
    throw std::invalid_argument("tag outside the alphabet");
  }
}

void LexicalModel::AddWord(std::string_view word, TagId tag) {
  CheckTag(tag);
  words_.Insert(word, tag);
}

void LexicalModel::AddSuffix(std::string_view suffix, TagId tag) {
  CheckTag(tag);
  suffixes_.Insert(ReverseCodePoints(suffix), tag);
}

void LexicalModel::AddShape(std::string_view shape, TagId tag) {
  CheckTag(tag);
  shapes_.Insert(shape, tag);
}

std::vector<std::pair<std::string, TagId>> LexicalModel::SuffixEntries() const {
  auto entries = suffixes_.Entries();
  for (auto& [key, tag] : entries) key = ReverseCodePoints(key);
  std::sort(entries.begin(), entries.end());
  return entries;
}

TagId LexicalModel::TagToken(std::string_view token,
                             LexicalTrace* trace) const {
  LexicalTrace local;
  LexicalTrace& t = trace != nullptr ? *trace : local;
  t = LexicalTrace{};
  auto consult = [&](LexicalSource source) {
    t.consulted[static_cast<std::size_t>(source)] = true;
    t.source = source;
  };

  consult(LexicalSource::kPunctuation);
  if (IsPunctuation(token)) return alphabet_.punctuation();
  consult(LexicalSource::kTrigger);
  if (auto tag = alphabet_.TriggerTag(token)) return *tag;
  if (token.empty()) {
    consult(LexicalSource::kDefault);
    return default_tag();
  }
  consult(LexicalSource::kWord);
  if (auto tag = words_.Lookup(token)) return *tag;
  consult(LexicalSource::kSuffix);
  if (auto tag = suffixes_.Lookup(SuffixKey(token))) return *tag;
  consult(LexicalSource::kShape);
  if (auto tag = shapes_.Lookup(ShapeEncode(token))) return *tag;
  consult(LexicalSource::kDefault);
  return default_tag();
}

std::vector<TagId> LexicalModel::TagSentence(
    std::span<const std::string> tokens) const {
  std::vector<TagId> tags;
  tags.reserve(tokens.size());
  for (const std::string& token : tokens) tags.push_back(TagToken(token));
  return tags;
}

std::vector<TagId> LexicalModel::TagSentence(const Sentence& sentence) const {
  std::vector<TagId> tags;
  tags.reserve(sentence.size());
  for (const Token& token : sentence) tags.push_back(TagToken(token.surface));
  return tags;
}

bool LexicalModel::operator==(const LexicalModel& other) const {
  return alphabet_ == other.alphabet_ && words_ == other.words_ &&
         suffixes_ == other.suffixes_ && shapes_ == other.shapes_;
}

LexicalModel TrainLexical(const Corpus& corpus, const TagAlphabet& alphabet) {
  if (corpus.token_count() == 0) {
    throw std::invalid_argument("cannot train on an empty corpus");
  }
  const std::size_t tags = alphabet.size();
  Counts words;
  Counts suffixes;
  Counts shapes;
  for (const Sentence* sentence : corpus.sentences()) {
    for (const Token& token : *sentence) {
      if (token.tag < 0 || static_cast<std::size_t>(token.tag) >= tags) {
        throw std::invalid_argument("tag outside the alphabet");
      }
      if (token.surface.empty()) continue;
      Count(words, token.surface, token.tag, tags);
      Count(suffixes, SuffixKey(token.surface), token.tag, tags);
      Count(shapes, ShapeEncode(token.surface), token.tag, tags);
    }
  }
  LexicalModel model(alphabet);
  // Sorted insertion keeps the trie layout independent of hash order.
  auto fill = [](const Counts& counts, auto insert) {
    std::map<std::string_view, TagId> sorted;
    for (const auto& [key, row] : counts) sorted.emplace(key, Argmax(row));
    for (const auto& [key, tag] : sorted) insert(key, tag);
  };
  fill(words, [&](std::string_view k, TagId t) { model.AddWord(k, t); });
  fill(suffixes, [&](std::string_view k, TagId t) {
    model.AddSuffix(ReverseCodePoints(k), t);
  });
  fill(shapes, [&](std::string_view k, TagId t) { model.AddShape(k, t); });
  return model;
}

}  // namespace fstner
