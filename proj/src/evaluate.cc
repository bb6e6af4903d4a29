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

#include "fstner/evaluate.h"

#include <algorithm>
#include <cstdio>
#include <iterator>

namespace fstner {
namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string Row(const std::string& name, const EntityCounts& c) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-10s %9.1f %6.1f %5.1f\n", name.c_str(),
                100.0 * c.precision(), 100.0 * c.recall(), 100.0 * c.f1());
  return buf;
}

}  // namespace

double EntityCounts::precision() const { return Ratio(correct, predicted); }
double EntityCounts::recall() const { return Ratio(correct, gold); }

double EntityCounts::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

std::vector<TagId> RepairBio(std::span<const TagId> tags,
                             const TagAlphabet& alphabet) {
  std::vector<TagId> out(tags.size());
  for (std::size_t i = 0; i < tags.size(); ++i) {
    TagId tag = OutputTag(tags[i], alphabet);
    if (alphabet.IsInside(tag)) {
      const bool continues = i > 0 && alphabet.IsEntity(out[i - 1]) &&
                             alphabet.EntityType(out[i - 1]) ==
                                 alphabet.EntityType(tag);
      if (!continues) tag = alphabet.BeginOf(tag);
    }
    out[i] = tag;
  }
  return out;
}

bool IsBioConsistent(std::span<const TagId> tags, const TagAlphabet& alphabet) {
  const auto repaired = RepairBio(tags, alphabet);
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (alphabet.IsInside(OutputTag(tags[i], alphabet)) &&
        repaired[i] != tags[i]) {
      return false;
    }
  }
  return true;
}

std::vector<Entity> ExtractEntities(std::span<const TagId> tags,
                                    const TagAlphabet& alphabet) {
  std::vector<Entity> entities;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (!alphabet.IsBegin(tags[i])) continue;
    const std::string_view type = alphabet.EntityType(tags[i]);
    std::size_t end = i + 1;
    while (end < tags.size() && alphabet.IsInside(tags[end]) &&
           alphabet.EntityType(tags[end]) == type) {
      ++end;
    }
    entities.push_back({i, end, std::string(type)});
  }
  return entities;
}

EvalReport Evaluate(const Corpus& predicted, const Corpus& gold,
                    const TagAlphabet& alphabet) {
  const auto pred_sentences = predicted.sentences();
  const auto gold_sentences = gold.sentences();
  if (pred_sentences.size() != gold_sentences.size()) {
    throw AlignmentError("sentence counts differ: " +
                         std::to_string(pred_sentences.size()) + " vs " +
                         std::to_string(gold_sentences.size()));
  }
  EvalReport report;
  for (std::size_t s = 0; s < gold_sentences.size(); ++s) {
    const Sentence& p = *pred_sentences[s];
    const Sentence& g = *gold_sentences[s];
    if (p.size() != g.size()) {
      throw AlignmentError("sentence " + std::to_string(s + 1) +
                           " has different lengths");
    }
    std::vector<TagId> p_tags;
    std::vector<TagId> g_tags;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (p[i].surface != g[i].surface) {
        throw AlignmentError("sentence " + std::to_string(s + 1) +
                             ": token '" + p[i].surface + "' vs '" +
                             g[i].surface + "'");
      }
      p_tags.push_back(p[i].tag);
      g_tags.push_back(g[i].tag);
    }
    report.tokens += g.size();
    const auto p_entities = ExtractEntities(RepairBio(p_tags, alphabet), alphabet);
    const auto g_entities = ExtractEntities(RepairBio(g_tags, alphabet), alphabet);
    std::vector<Entity> correct;
    std::set_intersection(p_entities.begin(), p_entities.end(),
                          g_entities.begin(), g_entities.end(),
                          std::back_inserter(correct));
    for (const Entity& e : p_entities) {
      ++report.by_type[e.type].predicted;
      ++report.overall.predicted;
    }
    for (const Entity& e : g_entities) {
      ++report.by_type[e.type].gold;
      ++report.overall.gold;
    }
    for (const Entity& e : correct) {
      ++report.by_type[e.type].correct;
      ++report.overall.correct;
    }
  }
  return report;
}

std::string FormatReport(const EvalReport& report) {
  std::string out = "processed " + std::to_string(report.tokens) +
                    " tokens with " + std::to_string(report.overall.gold) +
                    " phrases; found: " +
                    std::to_string(report.overall.predicted) +
                    " phrases; correct: " +
                    std::to_string(report.overall.correct) + ".\n";
  out += "type       precision recall F1\n";
  for (const auto& [type, counts] : report.by_type) out += Row(type, counts);
  out += Row("overall", report.overall);
  return out;
}

}  // namespace fstner
