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

#include "fstner/corpus.h"

#include <algorithm>
#include <cmath>

#include "fstner/text.h"

namespace fstner {
namespace {

constexpr std::string_view kDocStart = "-DOCSTART-";

bool IsBlank(char ch) { return ch == ' ' || ch == '\t'; }

std::vector<std::string_view> Columns(std::string_view line) {
  std::vector<std::string_view> columns;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsBlank(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsBlank(line[i])) ++i;
    if (i > start) columns.push_back(line.substr(start, i - start));
  }
  return columns;
}

}  // namespace

ConllError::ConllError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " +
                                         what),
      line_(line) {}

std::size_t Corpus::sentence_count() const {
  std::size_t n = 0;
  for (const Document& doc : documents) n += doc.sentences.size();
  return n;
}

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const Document& doc : documents) {
    for (const Sentence& s : doc.sentences) n += s.size();
  }
  return n;
}

std::vector<const Sentence*> Corpus::sentences() const {
  std::vector<const Sentence*> out;
  for (const Document& doc : documents) {
    for (const Sentence& s : doc.sentences) out.push_back(&s);
  }
  return out;
}

Corpus ParseConll(std::string_view text, const TagAlphabet& alphabet,
                  const ConllOptions& options) {
  Corpus corpus;
  corpus.documents.emplace_back();
  Sentence sentence;
  auto end_sentence = [&] {
    if (!sentence.empty()) {
      corpus.documents.back().sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  };

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto columns = Columns(line);
    if (columns.empty()) {
      end_sentence();
      continue;
    }
    if (columns.front() == kDocStart) {
      end_sentence();
      if (!corpus.documents.back().sentences.empty()) {
        corpus.documents.emplace_back();
      }
      continue;
    }
    if (columns.size() > 2 || (options.require_tags && columns.size() != 2)) {
      throw ConllError(line_number, "expected 'token tag', got " +
                                        std::to_string(columns.size()) +
                                        " column(s)");
    }
    if (!IsValidUtf8(columns[0])) {
      throw ConllError(line_number, "token is not valid UTF-8");
    }
    TagId tag = alphabet.outside();
    if (options.require_tags) {
      const auto found = alphabet.Find(columns[1]);
      if (!found) {
        throw ConllError(line_number,
                         "unknown tag '" + std::string(columns[1]) + "'");
      }
      tag = *found;
    }
    sentence.push_back({std::string(columns[0]), tag});
  }
  end_sentence();
  if (corpus.documents.back().sentences.empty() &&
      corpus.documents.size() > 1) {
    corpus.documents.pop_back();
  }
  if (corpus.token_count() == 0) {
    if (!options.allow_empty) throw ConllError(0, "no tokens in input");
    corpus.documents.clear();
  }
  return corpus;
}

TagId OutputTag(TagId tag, const TagAlphabet& alphabet) {
  return alphabet.IsBio(tag) ? tag : alphabet.outside();
}

std::string WriteConll(const Corpus& corpus, const TagAlphabet& alphabet) {
  std::string out;
  const bool markers = corpus.documents.size() > 1;
  for (const Document& doc : corpus.documents) {
    if (markers) {
      out += kDocStart;
      out += ' ';
      out += alphabet.Name(alphabet.outside());
      out += "\n\n";
    }
    for (const Sentence& sentence : doc.sentences) {
      for (const Token& token : sentence) {
        out += token.surface;
        out += ' ';
        out += alphabet.Name(OutputTag(token.tag, alphabet));
        out += '\n';
      }
      out += '\n';
    }
  }
  return out;
}

Corpus RelabelForTraining(const Corpus& corpus, const TagAlphabet& alphabet) {
  Corpus out = corpus;
  for (Document& doc : out.documents) {
    for (Sentence& sentence : doc.sentences) {
      for (Token& token : sentence) {
        if (token.tag != alphabet.outside()) continue;
        if (auto trigger = alphabet.TriggerTag(token.surface)) {
          token.tag = *trigger;
        } else if (IsPunctuation(token.surface)) {
          token.tag = alphabet.punctuation();
        }
      }
    }
  }
  return out;
}

std::pair<Corpus, Corpus> SplitCorpus(const Corpus& corpus, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("split fraction must be in (0, 1)");
  }
  const std::size_t n = corpus.sentence_count();
  if (n < 2) {
    throw std::invalid_argument("cannot split a corpus of fewer than 2 sentences");
  }
  auto first_size = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(n) - 1e-9));
  first_size = std::clamp<std::size_t>(first_size, 1, n - 1);

  std::pair<Corpus, Corpus> parts;
  std::size_t seen = 0;
  for (const Document& doc : corpus.documents) {
    Document head;
    Document tail;
    for (const Sentence& s : doc.sentences) {
      (seen++ < first_size ? head : tail).sentences.push_back(s);
    }
    if (!head.sentences.empty()) parts.first.documents.push_back(std::move(head));
    if (!tail.sentences.empty()) parts.second.documents.push_back(std::move(tail));
  }
  return parts;
}

std::vector<std::vector<TagId>> CorpusTags(const Corpus& corpus) {
  std::vector<std::vector<TagId>> out;
  for (const Sentence* s : corpus.sentences()) {
    auto& tags = out.emplace_back();
    tags.reserve(s->size());
    for (const Token& token : *s) tags.push_back(token.tag);
  }
  return out;
}

void AssignTags(Corpus& corpus, const std::vector<std::vector<TagId>>& tags) {
  std::size_t i = 0;
  for (Document& doc : corpus.documents) {
    for (Sentence& sentence : doc.sentences) {
      if (i >= tags.size() || tags[i].size() != sentence.size()) {
        throw std::invalid_argument("tag sequences do not match the corpus");
      }
      for (std::size_t j = 0; j < sentence.size(); ++j) {
        sentence[j].tag = tags[i][j];
      }
      ++i;
    }
  }
  if (i != tags.size()) {
    throw std::invalid_argument("tag sequences do not match the corpus");
  }
}

}  // namespace fstner
