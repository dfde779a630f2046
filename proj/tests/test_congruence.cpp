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

#include "artcong/congruence.hpp"
#include "artcong/error.hpp"

using namespace artcong;

namespace {

CoxeterGraph inf_path(int n) {
  std::string text = "coxeter n=" + std::to_string(n) + ";";
  for (int i = 1; i < n; ++i) text += " m " + std::to_string(i) + " " + std::to_string(i + 1) + " = inf;";
  return parse_graph(text);
}

Word cw(const CoxeterGraph& g, const std::string& text) { return parse_word(text, g, WordMode::kCoxeter); }
Word aw(const CoxeterGraph& g, const std::string& text) { return parse_word(text, g, WordMode::kArtin); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{0};
}

}  // namespace

TEST_CASE("membership oracles") {
  const CoxeterGraph a1t = catalog_graph("~A1");
  CHECK(member({a1t, GroupKind::kCoxeter, 3}, power(cw(a1t, "0 1"), 3)));
  CHECK_FALSE(member({a1t, GroupKind::kCoxeter, 3}, power(cw(a1t, "0 1"), 2)));
  CHECK(member({a1t, GroupKind::kCoxeter, 4}, power(cw(a1t, "0 1"), 2)));
  CHECK_FALSE(member({a1t, GroupKind::kCoxeter, 4}, cw(a1t, "0 1")));
  const CoxeterGraph a2 = catalog_graph("A2");
  CHECK_FALSE(member({a2, GroupKind::kArtin, 2}, aw(a2, "1")));
  CHECK(member({a2, GroupKind::kArtin, 2}, aw(a2, "1 1")));
  CHECK(code_of([&] { member({catalog_graph("B3"), GroupKind::kArtin, 2}, Word{}); }) ==
        ErrorCode::kNotSmall);
}

TEST_CASE("image orders") {
  const auto a2 = image_order({catalog_graph("A2"), GroupKind::kArtin, 2});
  CHECK(a2.order == 6);
  CHECK_FALSE(a2.abelian);
  const auto pair = image_order({inf_path(2), GroupKind::kArtin, 4});
  CHECK(pair.order == 4);
  CHECK(pair.abelian);
  for (int n = 2; n <= 5; ++n) CHECK(image_order({inf_path(n), GroupKind::kArtin, 2}).order == 1);
  CHECK(image_order({catalog_graph("A2"), GroupKind::kArtin, 6}).order == 144);
  CHECK(image_order({catalog_graph("A2"), GroupKind::kArtin, 3}).order == 24);
  CHECK(image_order({catalog_graph("A3"), GroupKind::kCoxeter, 2}).order == 24);
  CHECK(code_of([] { image_order({catalog_graph("A5"), GroupKind::kArtin, 3}, 100); }) ==
        ErrorCode::kCapExceeded);
}

TEST_CASE("image order ignores generator order and threads") {
  const CoxeterGraph d4 = catalog_graph("D4");
  // D4 with the branch vertex renumbered to 1
  const CoxeterGraph relabeled = parse_graph("coxeter n=4; m 1 2 = 3; m 1 3 = 3; m 1 4 = 3");
  const auto a = image_order({d4, GroupKind::kArtin, 3});
  const auto b = image_order({relabeled, GroupKind::kArtin, 3});
  const auto c = image_order({d4, GroupKind::kArtin, 3}, kDefaultCap, 3);
  CHECK(a.order == b.order);
  CHECK(a.order == c.order);
}

TEST_CASE("generator powers and kernels") {
  for (const char* name : {"A3", "D4", "~A2"}) {
    CAPTURE(name);
    const CoxeterGraph g = catalog_graph(name);
    for (std::uint64_t m = 2; m <= 6; ++m) {
      for (int v = 1; v <= g.rank(); ++v) {
        Word w;
        w.mode = WordMode::kArtin;
        w.letters.assign(m, v);
        CHECK(member({g, GroupKind::kArtin, m}, w));
      }
    }
  }
  const CoxeterGraph p = inf_path(3);
  for (std::uint64_t m = 1; m <= 4; ++m) {
    for (int v = 1; v <= 3; ++v) {
      Word w;
      w.mode = WordMode::kArtin;
      w.letters.assign(m, v);
      CHECK(member({p, GroupKind::kArtin, 2 * m}, w));
    }
  }
}

TEST_CASE("kernel is closed under products and inverses") {
  const CoxeterGraph g = catalog_graph("A3");
  std::mt19937_64 rng(99);
  const CongruenceQuery q{g, GroupKind::kArtin, 3};
  for (int trial = 0; trial < 30; ++trial) {
    const Word u = random_artin_word(rng, 3, 8);
    const Word v = random_artin_word(rng, 3, 8);
    Word cube;
    cube.mode = WordMode::kArtin;
    cube.letters = {2, 2, 2};
    const Word x = concat(concat(u, cube), inverse(u));
    const Word y = concat(concat(v, inverse(cube)), inverse(v));
    CHECK(member(q, x));
    CHECK(member(q, concat(x, y)));
    CHECK(member(q, inverse(concat(x, y))));
  }
}

TEST_CASE("normal closure verifier") {
  SamplingOptions opt;
  const Report a3 = verify_normal_closure(catalog_graph("A3"), 3, opt);
  CHECK(a3.status == Status::kPass);
  CHECK(a3.data["checked"] == 300);
  const Report p = verify_normal_closure(inf_path(3), 2, opt);
  CHECK(p.status == Status::kPass);
  CHECK(p.data["right_angled"] == true);
  CHECK(verify_normal_closure(catalog_graph("D4"), 2, opt).status == Status::kPass);
  // identical seeds give identical reports
  CHECK(verify_normal_closure(catalog_graph("A3"), 3, opt).to_json() == a3.to_json());
}

TEST_CASE("level-2 spherical verifier") {
  const Report a3 = verify_level2_spherical(catalog_graph("A3"));
  CHECK(a3.status == Status::kPass);
  CHECK(a3.data["image_order"] == 24);
  const Report d4 = verify_level2_spherical(catalog_graph("D4"));
  CHECK(d4.status == Status::kPass);
  CHECK(d4.data["coxeter_order"] == 192);
  CHECK(d4.data["center_order"] == 2);
  CHECK(d4.data["image_order"] == 96);
  CHECK(code_of([] { verify_level2_spherical(catalog_graph("~A2")); }) == ErrorCode::kNotSpherical);
  CHECK(code_of([] { verify_level2_spherical(catalog_graph("B3")); }) == ErrorCode::kNotSmall);
}

TEST_CASE("level-4 right-angled verifier") {
  const Report one = verify_level4_raag(inf_path(2));
  CHECK(one.status == Status::kPass);
  CHECK(one.data["image_order_4"] == 4);
  const Report four = verify_level4_raag(inf_path(4));
  CHECK(four.status == Status::kPass);
  CHECK(four.data["image_order_4"] == 16);
  CHECK(code_of([] { verify_level4_raag(parse_graph("coxeter n=3; m 1 2 = inf")); }) ==
        ErrorCode::kHypothesisViolated);
  CHECK(code_of([] { verify_level4_raag(catalog_graph("A3")); }) == ErrorCode::kHypothesisViolated);
}

TEST_CASE("commutator lemma") {
  const auto inf = commutator_matrix(inf_path(2), 1, 2);
  CHECK(inf.direct == IntegerMatrix{{13, 8}, {8, 5}});
  CHECK(inf.match);
  CHECK(reduce_mod(inf.direct, 4).is_identity());
  const auto flat = commutator_matrix(parse_graph("coxeter n=2"), 1, 2);
  CHECK(flat.direct.is_identity());
  CHECK(flat.match);
  const auto three = commutator_matrix(catalog_graph("A2"), 1, 2);
  CHECK(three.formula == IntegerMatrix{{1, 1}, {1, 2}});
  CHECK(three.match);
  CHECK_THROWS_AS(commutator_matrix(catalog_graph("A2"), 1, 1), Error);
  CHECK_THROWS_AS(commutator_matrix(catalog_graph("A2"), 1, 3), Error);
}

TEST_CASE("commutator formula on every pair of mixed graphs") {
  const CoxeterGraph mixed = parse_graph(
      "coxeter n=5; m 1 2 = inf; m 1 3 = 3; m 2 4 = 3; m 3 4 = inf; m 4 5 = 3; m 2 5 = inf");
  for (const CoxeterGraph& g : {mixed, catalog_graph("E6"), catalog_graph("~A3"), inf_path(4)}) {
    for (int k = 1; k <= g.rank(); ++k) {
      for (int l = 1; l <= g.rank(); ++l) {
        if (k == l) continue;
        CAPTURE(k);
        CAPTURE(l);
        CHECK(commutator_matrix(g, k, l).match);
      }
    }
  }
}

TEST_CASE("direct sum and divisors") {
  SamplingOptions opt;
  opt.samples = 50;
  const Report a = verify_direct_sum(catalog_graph("A2"), catalog_graph("A2"), 2, opt);
  CHECK(a.status == Status::kPass);
  CHECK(a.data["members_of_both"].get<int>() > 0);
  CHECK(verify_direct_sum(catalog_graph("A2"), catalog_graph("~A1"), 3, opt).status == Status::kPass);
  CHECK(verify_direct_sum(catalog_graph("A3"), parse_graph("coxeter n=1"), 3, opt).status ==
        Status::kPass);

  const CoxeterGraph a2 = catalog_graph("A2");
  const Report six = divisor_containment(a2, aw(a2, "1 1 1 1 1 1"), 6);
  CHECK(six.status == Status::kPass);
  CHECK(six.data["member"] == true);
  CHECK(six.data["levels"]["2"] == true);
  CHECK(six.data["levels"]["3"] == true);
  const Report prime = divisor_containment(a2, aw(a2, "1 2"), 5);
  CHECK(prime.status == Status::kPass);
  CHECK(prime.data["member"] == false);
  const Report sampled = sample_divisor_containment(catalog_graph("D4"), 6, opt);
  CHECK(sampled.status == Status::kPass);
  CHECK(sampled.data["members"].get<int>() > 0);
}

TEST_CASE("odd-k quotient") {
  const Report k3 = oddk_quotient_check(catalog_graph("A2"), 3);
  CHECK(k3.status == Status::kPass);
  CHECK(k3.data["ratio"] == 6);
  CHECK(oddk_quotient_check(catalog_graph("A2"), 5).status == Status::kPass);
  const Report pair = oddk_quotient_check(inf_path(2), 3);
  CHECK(pair.status == Status::kPass);
  CHECK(pair.data["ratio"] == 1);
  CHECK(code_of([] { oddk_quotient_check(catalog_graph("A2"), 4); }) == ErrorCode::kBadLevel);
}

TEST_CASE("conjecture probe") {
  const Report a1t = level2_conjecture_probe(catalog_graph("~A1"));
  CHECK(a1t.status == Status::kProbe);
  CHECK(a1t.data["artin_image_order"] == 1);
  CHECK(a1t.data["coxeter_image_order"] == 1);
  const Report a3 = level2_conjecture_probe(catalog_graph("A3"));
  CHECK(a3.data["artin_image_order"] == 24);
  CHECK(a3.data["coxeter_image_order"] == 24);
  CHECK(level2_conjecture_probe(catalog_graph("~A2")).status == Status::kProbe);
}

TEST_CASE("center images") {
  const Report a2 = center_image_check(catalog_graph("A2"));
  CHECK(a2.status == Status::kPass);
  CHECK(a2.data["sign"] == -1);
  const Report a3 = center_image_check(catalog_graph("A3"));
  CHECK(a3.status == Status::kPass);
  CHECK(a3.data["sign"] == 1);
  const Report f4 = center_image_check(catalog_graph("F4"));
  CHECK(f4.status == Status::kPass);
  CHECK(f4.data["sign"] == -1);
  CHECK(f4.data["arithmetic"] == "numeric");
  CHECK(center_image_check(catalog_graph("E6")).data["sign"] == 1);
  CHECK(center_image_check(catalog_graph("D4")).status == Status::kPass);
  CHECK_THROWS_AS(center_image_check(catalog_graph("~A2")), Error);
}
