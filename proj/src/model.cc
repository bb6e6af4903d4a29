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

#include "fstner/model.h"

#include <algorithm>
#include <charconv>
#include <optional>

namespace fstner {
namespace {

constexpr std::string_view kSections[] = {"[ALPHABET]", "[TRIGGERS]",
                                          "[LEXICON]",  "[SUFFIX]",
                                          "[SHAPE]",    "[RULES]",
                                          "[FST]"};

void AppendOutput(std::string& out, std::span<const Symbol> tags,
                  const TagAlphabet& alphabet) {
  if (tags.empty()) {
    out += " -";
    return;
  }
  for (Symbol t : tags) {
    out += ' ';
    out += alphabet.Name(t);
  }
}

void AppendEntries(std::string& out,
                   const std::vector<std::pair<std::string, TagId>>& entries,
                   const TagAlphabet& alphabet) {
  for (const auto& [key, tag] : entries) {
    out += key;
    out += '\t';
    out += alphabet.Name(tag);
    out += '\n';
  }
}

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  // Next line without its newline, or nullopt at end of input.
  std::optional<std::string_view> Next() {
    if (pos_ >= text_.size()) return std::nullopt;
    const std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) {
      throw Error("missing final newline");
    }
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_;
    return line;
  }
  std::optional<std::string_view> Peek() {
    const std::size_t pos = pos_, line = line_;
    auto result = Next();
    pos_ = pos;
    line_ = line;
    return result;
  }

  ModelFormatError Error(const std::string& message) const {
    return ModelFormatError(line_, message);
  }

  void Expect(std::string_view want) {
    const auto line = Next();
    if (line != want) throw Error("expected '" + std::string(want) + "'");
  }

  // Lines up to the next section header.
  std::vector<std::string_view> Body() {
    std::vector<std::string_view> lines;
    while (const auto line = Peek()) {
      if (IsHeader(*line)) break;
      lines.push_back(*Next());
    }
    return lines;
  }

  std::size_t line() const { return line_; }

 private:
  static bool IsHeader(std::string_view line) {
    for (auto h : kSections) {
      if (line == h) return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::int64_t ParseNumber(std::string_view field, const Reader& reader) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
    throw reader.Error("bad number '" + std::string(field) + "'");
  }
  return value;
}

TagId ParseTag(std::string_view name, const TagAlphabet& alphabet,
               const Reader& reader) {
  const auto tag = alphabet.Find(name);
  if (!tag) throw reader.Error("unknown tag '" + std::string(name) + "'");
  return *tag;
}

std::vector<Symbol> ParseOutput(std::span<const std::string_view> fields,
                                const TagAlphabet& alphabet,
                                const Reader& reader) {
  if (fields.size() == 1 && fields[0] == "-") return {};
  if (fields.empty()) throw reader.Error("missing output");
  std::vector<Symbol> out;
  for (auto f : fields) out.push_back(ParseTag(f, alphabet, reader));
  return out;
}

SubsequentialTransducer ParseFst(Reader& reader, const TagAlphabet& alphabet) {
  SubsequentialTransducer fst(alphabet.symbols());
  const auto header = reader.Next();
  const auto count_fields = header ? Fields(*header) : std::vector<std::string_view>{};
  if (count_fields.size() != 2 || count_fields[0] != "states") {
    throw reader.Error("expected 'states N'");
  }
  const std::int64_t states = ParseNumber(count_fields[1], reader);
  if (states < 1) throw reader.Error("transducer needs at least one state");
  for (std::int64_t i = 0; i < states; ++i) fst.AddState();
  reader.Expect("initial 0");

  const auto state = [&](std::string_view field) {
    const std::int64_t s = ParseNumber(field, reader);
    if (s >= states) throw reader.Error("state out of range");
    return static_cast<StateId>(s);
  };
  while (const auto line = reader.Next()) {
    const auto f = Fields(*line);
    try {
      if (f.size() >= 3 && f[0] == "final") {
        fst.SetFinal(state(f[1]),
                     ParseOutput(std::span(f).subspan(2), alphabet, reader));
      } else if (f.size() >= 5 && f[0] == "edge") {
        fst.SetTransition(state(f[1]), ParseTag(f[2], alphabet, reader),
                          state(f[3]),
                          ParseOutput(std::span(f).subspan(4), alphabet, reader));
      } else {
        throw reader.Error("expected 'final' or 'edge' line");
      }
    } catch (const FstError& e) {
      throw reader.Error(e.what());
    }
  }
  return fst;
}

}  // namespace

ModelFormatError::ModelFormatError(std::size_t line, const std::string& message)
    : std::runtime_error("model line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::vector<TagId> Model::TagSentence(const Sentence& sentence,
                                      std::size_t* transitions) const {
  const std::vector<TagId> initial = lexical.TagSentence(sentence);
  SubsequentialTransducer::RunStats stats;
  std::vector<TagId> tags = fst.Run(initial, &stats);
  if (transitions != nullptr) *transitions += stats.transitions;
  return tags;
}

Corpus Model::TagCorpus(const Corpus& corpus, std::size_t* transitions) const {
  Corpus out = corpus;
  for (Document& doc : out.documents) {
    for (Sentence& sentence : doc.sentences) {
      const auto tags = TagSentence(sentence, transitions);
      for (std::size_t i = 0; i < sentence.size(); ++i) sentence[i].tag = tags[i];
    }
  }
  return out;
}

std::string SaveModel(const Model& model) {
  const TagAlphabet& alphabet = model.alphabet();
  std::string out(kModelHeader);
  out += '\n';
  out += "[ALPHABET]\n";
  for (const std::string& name : alphabet.names()) out += name + '\n';
  out += "[TRIGGERS]\n";
  for (const std::string& word : alphabet.trigger_words()) out += word + '\n';
  out += "[LEXICON]\n";
  AppendEntries(out, model.lexical.word_trie().Entries(), alphabet);
  out += "[SUFFIX]\n";
  AppendEntries(out, model.lexical.SuffixEntries(), alphabet);
  out += "[SHAPE]\n";
  AppendEntries(out, model.lexical.shape_trie().Entries(), alphabet);
  out += "[RULES]\n";
  for (const LearnedRule& rule : model.rules) {
    out += FormatRule(rule, alphabet) + '\n';
  }
  out += "[FST]\n";
  const SubsequentialTransducer& fst = model.fst;
  out += "states " + std::to_string(fst.state_count()) + "\ninitial 0\n";
  for (StateId s = 0; s < fst.state_count(); ++s) {
    if (fst.IsFinal(s)) {
      out += "final " + std::to_string(s);
      AppendOutput(out, fst.FinalOutput(s), alphabet);
      out += '\n';
    }
    for (Symbol a : fst.alphabet()) {
      const auto* t = fst.Find(s, a);
      if (t == nullptr) continue;
      out += "edge " + std::to_string(s) + ' ' + alphabet.Name(a) + ' ' +
             std::to_string(t->next);
      AppendOutput(out, fst.Output(*t), alphabet);
      out += '\n';
    }
  }
  return out;
}

Model LoadModel(std::string_view text) {
  Reader reader(text);
  reader.Expect(kModelHeader);

  reader.Expect("[ALPHABET]");
  const auto names = reader.Body();
  reader.Expect("[TRIGGERS]");
  std::vector<std::string> triggers;
  for (auto w : reader.Body()) triggers.emplace_back(w);
  std::optional<TagAlphabet> alphabet;
  try {
    alphabet.emplace(triggers);
  } catch (const std::invalid_argument& e) {
    throw reader.Error(e.what());
  }
  if (!std::ranges::equal(names, alphabet->names())) {
    throw reader.Error("[ALPHABET] does not match the trigger list");
  }

  LexicalModel lexical(*alphabet);
  const auto entries = [&](auto add) {
    for (std::string_view line : reader.Body()) {
      const auto tab = line.find('\t');
      if (tab == std::string_view::npos || tab == 0 ||
          line.find('\t', tab + 1) != std::string_view::npos) {
        throw reader.Error("expected 'key<TAB>tag'");
      }
      add(line.substr(0, tab), ParseTag(line.substr(tab + 1), *alphabet, reader));
    }
  };
  reader.Expect("[LEXICON]");
  entries([&](std::string_view k, TagId t) { lexical.AddWord(k, t); });
  reader.Expect("[SUFFIX]");
  entries([&](std::string_view k, TagId t) { lexical.AddSuffix(k, t); });
  reader.Expect("[SHAPE]");
  entries([&](std::string_view k, TagId t) { lexical.AddShape(k, t); });

  reader.Expect("[RULES]");
  LearnedRuleList rules;
  for (std::string_view line : reader.Body()) {
    try {
      rules.push_back(ParseRule(line, *alphabet));
    } catch (const std::invalid_argument& e) {
      throw reader.Error(e.what());
    }
  }
  reader.Expect("[FST]");
  SubsequentialTransducer fst = ParseFst(reader, *alphabet);
  return {std::move(lexical), std::move(rules), std::move(fst)};
}

}  // namespace fstner
