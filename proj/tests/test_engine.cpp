// Copyright 2026 The artcong Authors
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

#include <doctest.h>

#include "artcong/engine.hpp"
#include "artcong/error.hpp"

using namespace artcong;

namespace {

Word cw(const CoxeterGraph& g, const char* text) { return parse_word(text, g, WordMode::kCoxeter); }
Word aw(const CoxeterGraph& g, const char* text) { return parse_word(text, g, WordMode::kArtin); }

IntegerMatrix exact(const RepresentationSpec& spec, const Word& w) {
  return std::get<IntegerMatrix>(eval_word(spec, w));
}

}  // namespace

TEST_CASE("word parsing") {
  const CoxeterGraph a1t = catalog_graph("~A1");
  const Word w = cw(a1t, "0 1 0");
  CHECK(w.letters == std::vector<int>{2, 1, 2});
  CHECK(format_word(w, a1t) == "0 1 0");
  CHECK(aw(catalog_graph("A3"), "1 -2 +3").letters == std::vector<int>{1, -2, 3});
  CHECK(cw(catalog_graph("A3"), "").empty());
  CHECK_THROWS_AS(cw(catalog_graph("A3"), "1 -2"), Error);
  CHECK_THROWS_AS(cw(catalog_graph("A3"), "4"), Error);
  CHECK_THROWS_AS(cw(catalog_graph("A3"), "0"), Error);
  CHECK_THROWS_AS(cw(catalog_graph("A3"), "1 x"), Error);
  CHECK(inverse(aw(catalog_graph("A3"), "1 -2 3")).letters == std::vector<int>{-3, 2, -1});
  CHECK(power(cw(a1t, "0 1"), 3).length() == 6);
}

TEST_CASE("eval_word oracles") {
  const CoxeterGraph a1t = catalog_graph("~A1");
  const IntegerMatrix m = exact(RepresentationSpec::tits(a1t), cw(a1t, "0 1"));
  CHECK(m == IntegerMatrix{{-1, 2}, {-2, 3}});
  CHECK(to_display_order(m, a1t) == IntegerMatrix{{3, -2}, {2, -1}});

  const CoxeterGraph a2 = catalog_graph("A2");
  CHECK(exact(RepresentationSpec::sigma_tilde(a2), aw(a2, "1 2 1 -2 -1 -2")).is_identity());
  CHECK(exact(RepresentationSpec::tits(a2), Word{}).is_identity());
  CHECK(std::get<LaurentMatrix>(eval_word(RepresentationSpec::burau(a2), aw(a2, "1 2 1 -2 -1 -2"))) ==
        LaurentMatrix::identity(2));
  try {
    eval_word(RepresentationSpec::tits(a2), aw(a2, "1 -2"));
    FAIL("expected InverseInCoxeterMode");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInverseInCoxeterMode);
  }
  Word bad;
  bad.letters = {3};
  CHECK_THROWS_AS(eval_word(RepresentationSpec::tits(a2), bad), Error);
}

TEST_CASE("eval_word agrees across backends") {
  const CoxeterGraph d5 = catalog_graph("D5");
  const Word w = aw(d5, "1 -3 2 5 -4 3 3 -1 2 4 -5");
  const auto spec = RepresentationSpec::sigma_tilde(d5);
  const IntegerMatrix direct = exact(spec, w);
  IntegerMatrix slow = IntegerMatrix::identity(5);
  for (int l : w.letters) slow = slow * burau_generator_specialized(d5, l < 0 ? -l : l, 1, -1, l < 0);
  CHECK(direct == slow);
  CHECK(specialize(std::get<LaurentMatrix>(eval_word(RepresentationSpec::burau(d5), w)), 1, -1) ==
        direct);
  for (std::uint64_t m : {2ULL, 3ULL, 7ULL}) CHECK(eval_word_mod(spec, w, m) == reduce_mod(direct, m));
  const auto num = std::get<NumericMatrix>(eval_word(spec.numeric(), w));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) CHECK(num(i, j) == doctest::Approx(direct(i, j).get_d()));
  }
}

TEST_CASE("enumerate_group orders") {
  CHECK(enumerate_group(catalog_graph("A2")).order == 6);
  CHECK(enumerate_group(catalog_graph("A2")).longest_word.length() == 3);
  CHECK(enumerate_group(catalog_graph("A4")).order == 120);
  CHECK(enumerate_group(catalog_graph("A5")).order == 720);
  CHECK(enumerate_group(catalog_graph("D5")).order == 1920);
  CHECK(enumerate_group(parse_graph("coxeter n=3")).order == 8);
  const auto d4 = enumerate_group(catalog_graph("D4"));
  CHECK(d4.order == 192);
  CHECK(d4.longest_word.length() == 12);
  REQUIRE(d4.center_words.size() == 2);
  const Word z = d4.center_words[1];
  const auto spec = RepresentationSpec::tits(catalog_graph("D4"));
  CHECK(exact(spec, z) == exact(spec, power(cw(catalog_graph("D4"), "1 2 3 4"), 3)));
  CHECK(exact(spec, z) == -IntegerMatrix::identity(4));
}

TEST_CASE("enumerate_group cap") {
  try {
    enumerate_group(catalog_graph("~A1"), 1000);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
  CHECK_THROWS_AS(enumerate_group(catalog_graph("A3"), 23), Error);
  CHECK(enumerate_group(catalog_graph("A3"), 24).order == 24);
}

TEST_CASE("BFS words are lex-least shortest") {
  const CoxeterGraph a3 = catalog_graph("A3");
  const auto e = enumerate_group(a3);
  const auto spec = RepresentationSpec::tits(a3);
  for (std::uint32_t idx = 0; idx < e.order; ++idx) {
    const Word w = e.word(idx);
    const auto m = e.closure.matrix(idx);
    const IntegerMatrix img = exact(spec, w);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(img(i, j) == m[static_cast<std::size_t>(i) * 3 + j]);
    }
  }
  CHECK(format_word(e.longest_word, a3) == "1 2 1 3 2 1");
}

TEST_CASE("parallel closure matches sequential") {
  const auto gens = sigma_tilde_generators(catalog_graph("D4"), false);
  const Closure one = close_under(4, gens, {.modulus = 3, .cap = kDefaultCap, .threads = 1});
  const Closure four = close_under(4, gens, {.modulus = 3, .cap = kDefaultCap, .threads = 4});
  REQUIRE(one.size() == four.size());
  for (std::uint32_t i = 0; i < one.size(); i += 97) {
    CHECK(one.word(i) == four.word(i));
    CHECK(one.matrix(i) == four.matrix(i));
  }
  CHECK(one.layers() == four.layers());
}

TEST_CASE("longest element") {
  CHECK(format_word(longest_element(catalog_graph("A1")), catalog_graph("A1")) == "1");
  CHECK(longest_element(catalog_graph("A3")).length() == 6);
  const CoxeterGraph a2 = catalog_graph("A2");
  const Word w0 = longest_element(a2);
  CHECK(exact(RepresentationSpec::tits(a2), w0) == exact(RepresentationSpec::tits(a2), cw(a2, "1 2 1")));
  CHECK(longest_element(catalog_graph("E6")).length() == 36);
  CHECK(longest_element(catalog_graph("E8")).length() == 120);
  CHECK(longest_element(catalog_graph("F4")).length() == 24);
  CHECK(longest_element(catalog_graph("H4")).length() == 60);
  CHECK(longest_element(catalog_graph("I2(7)")).length() == 7);
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"}) {
    CAPTURE(name);
    const CoxeterGraph g = catalog_graph(name);
    CHECK(longest_element(g) == enumerate_group(g).longest_word);
  }
  CHECK_THROWS_AS(longest_element(catalog_graph("~A2")), Error);
}

TEST_CASE("longest element normalizes the generators") {
  for (const char* name : {"A3", "D4", "D5", "E6"}) {
    CAPTURE(name);
    const CoxeterGraph g = catalog_graph(name);
    const auto spec = RepresentationSpec::tits(g);
    const IntegerMatrix w0 = exact(spec, longest_element(g));
    CHECK((w0 * w0).is_identity());
    std::vector<IntegerMatrix> gens;
    for (int i = 1; i <= g.rank(); ++i) gens.push_back(tits_generator(g, i));
    for (const auto& s : gens) {
      const IntegerMatrix c = w0 * s * w0;
      CHECK(std::find(gens.begin(), gens.end(), c) != gens.end());
    }
  }
}

TEST_CASE("Garside element") {
  const auto a2 = garside_delta(catalog_graph("A2"));
  CHECK(a2.squared);
  CHECK(a2.delta.letters == std::vector<int>{1, 2, 1});
  CHECK(a2.delta.mode == WordMode::kArtin);
  CHECK_FALSE(garside_delta(catalog_graph("D4")).squared);
  CHECK(garside_delta(catalog_graph("D5")).squared);
  CHECK(garside_delta(catalog_graph("E6")).squared);
  CHECK_FALSE(garside_delta(catalog_graph("E7")).squared);
  CHECK_FALSE(garside_delta(catalog_graph("F4")).squared);
  CHECK(garside_delta(catalog_graph("I2(5)")).squared);
  CHECK_FALSE(garside_delta(catalog_graph("I2(6)")).squared);
  const auto a1 = garside_delta(catalog_graph("A1"));
  CHECK(a1.delta.letters == std::vector<int>{1});
  CHECK_FALSE(a1.squared);
  CHECK_THROWS_AS(garside_delta(parse_graph("coxeter n=2")), Error);
  CHECK_THROWS_AS(garside_delta(catalog_graph("~A2")), Error);
}

TEST_CASE("sigma-tilde of Delta") {
  const CoxeterGraph a2 = catalog_graph("A2");
  const auto spec = RepresentationSpec::sigma_tilde(a2);
  const auto d = garside_delta(a2);
  CHECK(exact(spec, d.delta) == IntegerMatrix{{0, 1}, {-1, 0}});
  CHECK(exact(spec, d.center_generator()) == -IntegerMatrix::identity(2));
}

TEST_CASE("Delta image does not depend on the reduced word") {
  for (const char* name : {"A2", "A3", "B3", "D4"}) {
    CAPTURE(name);
    const CoxeterGraph g = catalog_graph(name);
    if (!g.is_small()) continue;
    const auto e = enumerate_group(g);
    const auto spec = RepresentationSpec::sigma_tilde(g);
    const IntegerMatrix ref = exact(spec, as_artin(e.longest_word));
    // reversed word of an involution is another reduced word for w0
    Word rev = e.longest_word;
    std::reverse(rev.letters.begin(), rev.letters.end());
    CHECK(exact(RepresentationSpec::tits(g), rev) == exact(RepresentationSpec::tits(g), e.longest_word));
    CHECK(exact(spec, as_artin(rev)) == ref);
  }
}
