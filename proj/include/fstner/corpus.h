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

#ifndef FSTNER_CORPUS_H_
#define FSTNER_CORPUS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fstner/tag_alphabet.h"

namespace fstner {

struct Token {
  std::string surface;
  TagId tag = 0;

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct Document {
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;

  std::size_t sentence_count() const;
  std::size_t token_count() const;
  // Sentences in order across documents.
  std::vector<const Sentence*> sentences() const;

  bool operator==(const Corpus&) const = default;
};

class ConllError : public std::runtime_error {
 public:
  ConllError(std::size_t line, const std::string& what);
  // 1-based; 0 when the problem is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ConllOptions {
  // Accept input without any tokens.
  bool allow_empty = false;
  // When false, lines may carry only the token; a second column is ignored
  // and every tag is set to O.
  bool require_tags = true;
};

// CoNLL-2002: one "token tag" line per token, columns separated by spaces or
// tabs, blank lines between sentences. "-DOCSTART-" lines open a new
// document.
Corpus ParseConll(std::string_view text, const TagAlphabet& alphabet,
                  const ConllOptions& options = {});

// Inverse of ParseConll. Trigger and PUNCT tags are written as O. Document
// markers are written only when there is more than one document.
std::string WriteConll(const Corpus& corpus, const TagAlphabet& alphabet);

// Gold copy for rule learning: trigger words and punctuation tokens whose
// gold tag is O get their trigger tag or PUNCT. Entity tags are never
// changed.
Corpus RelabelForTraining(const Corpus& corpus, const TagAlphabet& alphabet);

// Maps trigger and PUNCT tags back to O.
TagId OutputTag(TagId tag, const TagAlphabet& alphabet);

// First ceil(fraction * N) sentences, clamped to [1, N-1], and the rest.
// Throws std::invalid_argument unless 0 < fraction < 1 and N >= 2.
std::pair<Corpus, Corpus> SplitCorpus(const Corpus& corpus, double fraction);

// One tag sequence per sentence.
std::vector<std::vector<TagId>> CorpusTags(const Corpus& corpus);

// Replaces the tags of every token, sentence by sentence.
void AssignTags(Corpus& corpus, const std::vector<std::vector<TagId>>& tags);

}  // namespace fstner

#endif  // FSTNER_CORPUS_H_
