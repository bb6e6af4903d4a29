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

#include "fstner/rules.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fstner {
namespace {

std::string_view Strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

std::vector<Symbol> Tags(std::string_view s, const TagAlphabet& alphabet) {
  std::vector<Symbol> tags;
  for (std::string_view w : Words(s)) tags.push_back(alphabet.Id(w));
  return tags;
}

std::int64_t Number(std::string_view field, std::string_view name) {
  if (field.substr(0, name.size()) != name) {
    throw std::invalid_argument("expected '" + std::string(name) + "'");
  }
  field.remove_prefix(name.size());
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("bad number in '" + std::string(name) + "'");
  }
  return value;
}

void AppendTags(std::string& out, std::span<const Symbol> tags,
                const TagAlphabet& alphabet) {
  for (Symbol t : tags) {
    out += alphabet.Name(t);
    out += ' ';
  }
}

}  // namespace

std::vector<Symbol> ContextualRule::Pattern() const {
  std::vector<Symbol> p = left;
  p.push_back(from);
  p.insert(p.end(), right.begin(), right.end());
  return p;
}

RewriteRuleSpec ContextualRule::ToSpec() const {
  return {Pattern(), left.size(), to};
}

std::vector<Symbol> ContextualRule::Encoding() const {
  std::vector<Symbol> key = {static_cast<Symbol>(left.size())};
  key.insert(key.end(), left.begin(), left.end());
  key.push_back(from);
  key.push_back(to);
  key.insert(key.end(), right.begin(), right.end());
  return key;
}

std::vector<Symbol> ApplyRule(std::span<const Symbol> tags,
                              const ContextualRule& rule) {
  const std::vector<Symbol> pattern = rule.Pattern();
  std::vector<Symbol> out(tags.begin(), tags.end());
  std::size_t i = 0;
  while (i + pattern.size() <= tags.size()) {
    if (std::equal(pattern.begin(), pattern.end(), tags.begin() + i)) {
      out[i + rule.left.size()] = rule.to;
      i += pattern.size();
    } else {
      ++i;
    }
  }
  return out;
}

std::string FormatRule(const LearnedRule& learned,
                       const TagAlphabet& alphabet) {
  const ContextualRule& r = learned.rule;
  std::string out;
  AppendTags(out, r.left, alphabet);
  out += "| " + alphabet.Name(r.from) + " -> " + alphabet.Name(r.to) + " | ";
  AppendTags(out, r.right, alphabet);
  out += "# score=" + std::to_string(learned.score) +
         " stage=" + std::to_string(static_cast<int>(learned.stage));
  return out;
}

LearnedRule ParseRule(std::string_view line, const TagAlphabet& alphabet) {
  const auto hash = line.find('#');
  if (hash == std::string_view::npos) {
    throw std::invalid_argument("rule without '# score=... stage=...'");
  }
  const std::string_view body = line.substr(0, hash);
  const auto meta = Words(line.substr(hash + 1));
  const auto bar1 = body.find('|');
  const auto bar2 = bar1 == std::string_view::npos ? bar1 : body.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos ||
      body.find('|', bar2 + 1) != std::string_view::npos) {
    throw std::invalid_argument("rule needs exactly two '|' separators");
  }
  const std::string_view middle = body.substr(bar1 + 1, bar2 - bar1 - 1);
  const auto arrow = middle.find("->");
  if (arrow == std::string_view::npos) throw std::invalid_argument("rule without '->'");
  const auto from = Words(middle.substr(0, arrow));
  const auto to = Words(middle.substr(arrow + 2));
  if (from.size() != 1 || to.size() != 1) {
    throw std::invalid_argument("rule must rewrite exactly one tag");
  }
  if (meta.size() != 2) throw std::invalid_argument("bad rule metadata");

  LearnedRule learned;
  learned.rule.left = Tags(Strip(body.substr(0, bar1)), alphabet);
  learned.rule.from = alphabet.Id(from[0]);
  learned.rule.to = alphabet.Id(to[0]);
  learned.rule.right = Tags(Strip(body.substr(bar2 + 1)), alphabet);
  if (learned.rule.from == learned.rule.to) {
    throw std::invalid_argument("rule rewrites a tag to itself");
  }
  learned.score = Number(meta[0], "score=");
  const auto stage = Number(meta[1], "stage=");
  if (stage != 1 && stage != 2) throw std::invalid_argument("stage must be 1 or 2");
  learned.stage = static_cast<Stage>(stage);
  return learned;
}

}  // namespace fstner
