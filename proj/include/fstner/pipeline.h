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

// End-to-end training: lexical tagger, rule learning, rule compilation.

#ifndef FSTNER_PIPELINE_H_
#define FSTNER_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "fstner/compile.h"
#include "fstner/corpus.h"
#include "fstner/model.h"

namespace fstner {

struct TrainOptions {
  // Share of sentences used for the lexical tagger; the rest trains rules.
  double lexical_split = 0.85;
  std::size_t general_rules = 100;
  std::size_t trigger_rules = 15;
  std::size_t max_context = 2;
  std::int64_t min_score = 1;
  std::size_t state_cap = 1'000'000;
};

struct TrainReport {
  std::size_t lexical_sentences = 0;
  std::size_t rule_sentences = 0;
  // Token errors on the rule-training part, against relabeled gold.
  std::int64_t errors_before = 0;
  std::int64_t errors_after = 0;
  CompileStats compile;
};

// The lexical model is trained on the first part with its gold tags as
// given; rules are learned on the second part against relabeled gold.
// Throws std::invalid_argument for corpora too small to split and
// DeterminizeError when compilation fails.
Model TrainModel(const Corpus& corpus, const TagAlphabet& alphabet,
                 const TrainOptions& options, TrainReport* report = nullptr,
                 const std::function<void(const LearnedRule&)>& on_rule = nullptr);

}  // namespace fstner

#endif  // FSTNER_PIPELINE_H_
