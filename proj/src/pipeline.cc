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

#include "fstner/pipeline.h"

#include "fstner/learner.h"
#include "fstner/lexical.h"

namespace fstner {

Model TrainModel(const Corpus& corpus, const TagAlphabet& alphabet,
                 const TrainOptions& options, TrainReport* report,
                 const std::function<void(const LearnedRule&)>& on_rule) {
  const auto [lexical_part, rule_part] =
      SplitCorpus(corpus, options.lexical_split);
  LexicalModel lexical = TrainLexical(lexical_part, alphabet);

  std::vector<std::vector<TagId>> current;
  for (const Sentence* s : rule_part.sentences()) {
    current.push_back(lexical.TagSentence(*s));
  }
  const auto gold = CorpusTags(RelabelForTraining(rule_part, alphabet));

  LearnerOptions learner;
  learner.general_rules = options.general_rules;
  learner.trigger_rules = options.trigger_rules;
  learner.max_context = options.max_context;
  learner.min_score = options.min_score;
  learner.trigger_filter = TriggerToEntityFilter(alphabet);
  learner.on_rule = on_rule;
  LearnedRuleList rules = LearnRules(current, gold, learner);

  TrainReport local;
  local.lexical_sentences = lexical_part.sentence_count();
  local.rule_sentences = rule_part.sentence_count();
  local.errors_before = CountErrors(current, gold);
  for (auto& tags : current) {
    for (const LearnedRule& r : rules) tags = ApplyRule(tags, r.rule);
  }
  local.errors_after = CountErrors(current, gold);

  SubsequentialTransducer fst =
      CompileRules(rules, alphabet.symbols(),
                   {.state_cap = options.state_cap}, &local.compile);
  if (report != nullptr) *report = local;
  return {std::move(lexical), std::move(rules), std::move(fst)};
}

}  // namespace fstner
