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

// On-disk model: lexical tries, learned rules and the compiled transducer.

#ifndef FSTNER_MODEL_H_
#define FSTNER_MODEL_H_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fstner/corpus.h"
#include "fstner/lexical.h"
#include "fstner/rules.h"
#include "fstner/transducer.h"

namespace fstner {

class ModelFormatError : public std::runtime_error {
 public:
  ModelFormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Model {
  LexicalModel lexical;
  LearnedRuleList rules;
  SubsequentialTransducer fst;

  const TagAlphabet& alphabet() const { return lexical.alphabet(); }

  // Lexical tags followed by one transducer pass. Tags may include trigger
  // and PUNCT symbols; map them with OutputTag for output.
  std::vector<TagId> TagSentence(const Sentence& sentence,
                                 std::size_t* transitions = nullptr) const;
  // Copy of `corpus` with every token retagged.
  Corpus TagCorpus(const Corpus& corpus,
                   std::size_t* transitions = nullptr) const;
};

inline constexpr std::string_view kModelHeader = "fstner-model 1";

// Canonical text form. LoadModel(SaveModel(m)) re-saves byte-identically.
std::string SaveModel(const Model& model);
Model LoadModel(std::string_view text);

}  // namespace fstner

#endif  // FSTNER_MODEL_H_
