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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "fstner/fst_ops.h"
#include "fstner/local_extension.h"
#include "testing/oracles.h"

namespace fstner {
namespace {

using testing::Str;

const std::vector<Symbol> kAb = Str("ab");

Transducer Ext(std::string_view pattern, std::size_t k, char c,
               const std::vector<Symbol>& alphabet = kAb) {
  return LocalExtension({Str(pattern), k, c}, alphabet);
}

// Same accepted inputs with the same output sets on every string up to
// `max_length`.
void CheckSameRelation(const Transducer& a, const Transducer& b,
                       std::size_t max_length = 6) {
  for (const auto& in : testing::AllStringsUpTo(a.alphabet(), max_length)) {
    REQUIRE(EnumeratePaths(a, in) == EnumeratePaths(b, in));
  }
}

TEST_CASE("ExpandWildcards replaces a wildcard by the unlabeled symbols") {
  Transducer t(Str("abc"));
  t.AddEdge(0, 'a', 'a', 0);
  t.AddEdge(0, kWildcard, kWildcard, 0);
  const Transducer x = ExpandWildcards(t);
  CHECK(x.Edges() == std::vector<Edge>{{0, 'a', 'a', 0},
                                       {0, 'b', 'b', 0},
                                       {0, 'c', 'c', 0}});
  CHECK_FALSE(x.HasWildcards());
}

TEST_CASE("ExpandWildcards preserves the relation") {
  const Transducer t = Ext("aa", 0, 'b');
  CheckSameRelation(t, ExpandWildcards(t));
  const Transducer u = Ext("bbac", 2, 'b', Str("abc"));
  CheckSameRelation(u, ExpandWildcards(u), 7);
}

TEST_CASE("ExpandWildcards leaves wildcard-free machines unchanged") {
  const Transducer id = Identity(kAb);
  CHECK(ExpandWildcards(id) == id);
}

TEST_CASE("ExpandWildcards rejects wildcard inputs with concrete output") {
  Transducer t(kAb);
  t.AddEdge(0, kWildcard, 'a', 0);
  CHECK_THROWS_AS(ExpandWildcards(t), FstError);
}

TEST_CASE("Transducer rejects a second wildcard edge and sink out-edges") {
  Transducer t(kAb, 2);
  t.AddEdge(0, kWildcard, kWildcard, 0);
  CHECK_THROWS_AS(t.AddEdge(0, kWildcard, kWildcard, 1), FstError);
  t.SetSink(1);
  CHECK_THROWS_AS(t.AddEdge(1, 'a', 'a', 0), FstError);
  CHECK_THROWS_AS(t.AddEdge(0, 'a', 'a', 5), FstError);
  CHECK_THROWS_AS(t.AddEdge(0, 'z', 'a', 0), FstError);
}

TEST_CASE("Compose with identity keeps the relation") {
  const Transducer t = ExpandWildcards(Ext("aa", 0, 'b'));
  CheckSameRelation(Compose(t, Identity(kAb)), t);
  CheckSameRelation(Compose(Identity(kAb), t), t);
}

TEST_CASE("Compose applies the first rule, then the second") {
  const Transducer t1 = ExpandWildcards(Ext("aa", 0, 'b'));
  const Transducer t2 = ExpandWildcards(Ext("ba", 1, 'b'));
  const Transducer both = Compose(t1, t2);
  CHECK(EnumeratePaths(both, Str("aa")) ==
        std::set<std::vector<Symbol>>{Str("bb")});
  CHECK_FALSE(both.sink().has_value());
}

TEST_CASE("Compose rejects wildcards and alphabet mismatch") {
  CHECK_THROWS_AS(Compose(Ext("aa", 0, 'b'), Identity(kAb)), FstError);
  CHECK_THROWS_AS(Compose(Identity(kAb), Identity(Str("abc"))), FstError);
}

TEST_CASE("composition of local extensions is unambiguous and sequential") {
  std::mt19937 rng(7);
  const std::vector<Symbol> alphabet = Str("abc");
  auto random_spec = [&] {
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> sym(0, 2);
    RewriteRuleSpec spec;
    spec.pattern.resize(len(rng));
    for (Symbol& a : spec.pattern) a = alphabet[sym(rng)];
    spec.position = std::uniform_int_distribution<std::size_t>(
        0, spec.pattern.size() - 1)(rng);
    do {
      spec.replacement = alphabet[sym(rng)];
    } while (spec.replacement == spec.pattern[spec.position]);
    return spec;
  };
  const auto inputs = testing::AllStringsUpTo(alphabet, 6);
  for (int round = 0; round < 30; ++round) {
    const RewriteRuleSpec s1 = random_spec();
    const RewriteRuleSpec s2 = random_spec();
    const Transducer both =
        Compose(ExpandWildcards(LocalExtension(s1, alphabet)),
                ExpandWildcards(LocalExtension(s2, alphabet)));
    for (const auto& in : inputs) {
      const auto mid = testing::ReplaceLeftmost(in, s1.pattern, s1.position,
                                                s1.replacement);
      const auto expected = testing::ReplaceLeftmost(
          mid, s2.pattern, s2.position, s2.replacement);
      const auto outputs = EnumeratePaths(both, in);
      REQUIRE(outputs.size() == 1);
      REQUIRE(*outputs.begin() == expected);
    }
  }
}

TEST_CASE("Trim drops unreachable and dead states") {
  Transducer t = ExpandWildcards(Ext("aa", 0, 'b'));
  const StateId orphan = t.AddState();
  t.AddEdge(orphan, 'a', 'a', 0);
  t.SetFinal(orphan);
  const Transducer trimmed = Trim(t);
  CHECK(trimmed.state_count() == t.state_count() - 1);
  CheckSameRelation(trimmed, t);
}

TEST_CASE("Trim keeps the designated sink of a local extension") {
  const Transducer t = Trim(Ext("bbac", 2, 'b', Str("abc")));
  CHECK(t.state_count() == 6);
  CHECK(t.sink() == 4);
  CHECK(t == Ext("bbac", 2, 'b', Str("abc")));
}

TEST_CASE("Trim is idempotent") {
  Transducer t = ExpandWildcards(Ext("aba", 1, 'a'));
  t.AddState();
  t.ClearSink();
  const Transducer once = Trim(t);
  CHECK(Trim(once) == once);
  const Transducer with_sink = Trim(Ext("aba", 1, 'a'));
  CHECK(Trim(with_sink) == with_sink);
}

TEST_CASE("Trim of an empty relation leaves a single non-final state") {
  Transducer t(kAb, 3);
  t.AddEdge(0, 'a', 'a', 1);
  const Transducer trimmed = Trim(t);
  CHECK(trimmed.state_count() == 1);
  CHECK(trimmed.edge_count() == 0);
  CHECK_FALSE(trimmed.IsFinal(0));
}

TEST_CASE("EnumeratePaths on the empty input") {
  CHECK(EnumeratePaths(Identity(kAb), {}) ==
        std::set<std::vector<Symbol>>{{}});
  Transducer nonfinal(kAb);
  CHECK(EnumeratePaths(nonfinal, {}).empty());
}

TEST_CASE("EnumeratePaths guards the input length") {
  const std::vector<Symbol> input(kMaxEnumerationLength + 1, 'a');
  CHECK_THROWS_AS(EnumeratePaths(Identity(kAb), input), FstError);
}

}  // namespace
}  // namespace fstner
