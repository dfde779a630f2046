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

#include "artcong/error.hpp"
#include "artcong/graph.hpp"

using namespace artcong;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{0};
}

}  // namespace

TEST_CASE("parse A3 from the DSL") {
  const CoxeterGraph g = parse_graph("coxeter n=3; m 1 2 = 3; m 2 3 = 3");
  CHECK(g.rank() == 3);
  CHECK(g.label(1, 2) == Label::finite(3));
  CHECK(g.label(2, 3) == Label::finite(3));
  CHECK(g.label(1, 3) == Label::finite(2));
  CHECK(g.label(3, 2) == Label::finite(3));
  CHECK(g == catalog_graph("A3"));
}

TEST_CASE("absent edges default to 2") {
  const CoxeterGraph g = parse_graph("coxeter n=2");
  CHECK(g.label(1, 2) == Label::finite(2));
  CHECK(g == disjoint_union(catalog_graph("A1"), catalog_graph("A1")));
}

TEST_CASE("infinite labels") {
  const CoxeterGraph g = parse_graph("coxeter n=2; m 1 2 = inf");
  CHECK(g.label(1, 2).is_infinite());
  CHECK(g == catalog_graph("~A1"));
}

TEST_CASE("comments and trailing semicolons") {
  const CoxeterGraph g = parse_graph("# header\ncoxeter n=3;\nm 1 2 = 3; # edge\nm 2 3 = 4;\n");
  CHECK(g.label(2, 3) == Label::finite(4));
  CHECK(g == catalog_graph("B3"));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_graph("coxeter n=3; m 1 2 = 1"); }) == ErrorCode::kInvalidLabel);
  CHECK(code_of([] { parse_graph("coxeter n=3; m 2 2 = 3"); }) == ErrorCode::kInvalidLabel);
  CHECK(code_of([] { parse_graph("coxeter n=3; m 1 2 = 3; m 2 1 = 4"); }) ==
        ErrorCode::kDuplicatePair);
  CHECK(code_of([] { parse_graph("coxeter n=3; m 1 4 = 3"); }) == ErrorCode::kVertexOutOfRange);
  CHECK(code_of([] { parse_graph("coxeter n=3; m 1 two = 3"); }) == ErrorCode::kSyntax);
  CHECK(code_of([] { parse_graph("graph n=3"); }) == ErrorCode::kSyntax);
  // repeating an identical label is harmless
  CHECK(parse_graph("coxeter n=2; m 1 2 = 3; m 2 1 = 3") == catalog_graph("A2"));
}

TEST_CASE("catalog shapes") {
  CHECK(catalog_graph("A2").label(1, 2) == Label::finite(3));
  const CoxeterGraph a2t = catalog_graph("~A2");
  CHECK(a2t.rank() == 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) CHECK(a2t.label(i, j) == Label::finite(3));
  }
  CHECK(a2t.affine_vertex() == 3);
  CHECK(catalog_graph("I2(6)").label(1, 2) == Label::finite(6));
  const CoxeterGraph d4 = catalog_graph("D4");
  CHECK(d4.degree(2) == 3);
  const CoxeterGraph e6 = catalog_graph("E6");
  CHECK(e6.label(2, 4) == Label::finite(3));
  CHECK(e6.label(1, 3) == Label::finite(3));
  CHECK(e6.degree(4) == 3);
  CHECK(catalog_graph("H3").label(1, 2) == Label::finite(5));
  CHECK(catalog_graph("F4").label(2, 3) == Label::finite(4));
  CHECK(catalog_graph("~E8").label(8, 9) == Label::finite(3));
  CHECK(catalog_graph("~D6").label(2, 7) == Label::finite(3));
  CHECK(catalog_graph("~E7").label(1, 8) == Label::finite(3));
  CHECK(catalog_graph("~E6").label(2, 7) == Label::finite(3));
}

TEST_CASE("catalog errors") {
  CHECK(code_of([] { catalog_graph("D3"); }) == ErrorCode::kRankOutOfRange);
  CHECK(code_of([] { catalog_graph("E9"); }) == ErrorCode::kRankOutOfRange);
  CHECK(code_of([] { catalog_graph("Q7"); }) == ErrorCode::kUnknownName);
  CHECK(code_of([] { catalog_graph("I2(2)"); }) == ErrorCode::kRankOutOfRange);
}

TEST_CASE("classify flags") {
  const auto a4 = classify(catalog_graph("A4"));
  CHECK(a4.is_small);
  CHECK(a4.is_spherical);
  CHECK(a4.is_crystallographic);
  CHECK_FALSE(a4.is_affine);

  const auto raag = classify(parse_graph("coxeter n=3; m 1 2 = inf; m 2 3 = inf"));
  CHECK(raag.is_right_angled);
  CHECK(raag.is_small);
  CHECK_FALSE(raag.is_spherical);

  const auto h3 = classify(catalog_graph("H3"));
  CHECK_FALSE(h3.is_small);
  CHECK(h3.is_spherical);
  CHECK_FALSE(h3.is_crystallographic);
}

TEST_CASE("classify recognizes relabeled components") {
  // A3 with the path drawn 2-1-3
  const auto r = classify(parse_graph("coxeter n=3; m 1 2 = 3; m 1 3 = 3"));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].type == "A3");
  const auto mixed = classify(disjoint_union(catalog_graph("A2"), catalog_graph("~A1")));
  REQUIRE(mixed.components.size() == 2);
  CHECK(mixed.components[0].type == "A2");
  CHECK(mixed.components[1].type == "~A1");
  CHECK(mixed.components[1].vertices == std::vector<int>{3, 4});
  CHECK_FALSE(mixed.is_spherical);
  CHECK_FALSE(mixed.is_affine);
}

TEST_CASE("every catalog graph is classified into its own family") {
  const char* spherical[] = {"A1", "A5", "B4", "D4", "D6", "E6", "E7", "E8",
                             "F4", "H3", "H4", "I2(5)", "I2(8)"};
  for (const char* name : spherical) {
    CAPTURE(name);
    const auto r = classify(catalog_graph(name));
    CHECK(r.is_spherical);
    CHECK_FALSE(r.is_affine);
  }
  const char* affine[] = {"~A1", "~A2", "~A5", "~B3", "~C3", "~D4", "~D6",
                          "~E6", "~E7", "~E8", "~F4", "~G2"};
  for (const char* name : affine) {
    CAPTURE(name);
    const auto r = classify(catalog_graph(name));
    CHECK(r.is_affine);
    CHECK_FALSE(r.is_spherical);
  }
}

TEST_CASE("classify of a union concatenates components") {
  const CoxeterGraph g1 = catalog_graph("D5");
  const CoxeterGraph g2 = catalog_graph("~A3");
  const auto c1 = classify(g1).components;
  const auto c2 = classify(g2).components;
  const auto cu = classify(disjoint_union(g1, g2)).components;
  REQUIRE(cu.size() == c1.size() + c2.size());
  CHECK(cu[0].type == c1[0].type);
  CHECK(cu[1].type == c2[0].type);
  auto shifted = c2[0].vertices;
  for (int& v : shifted) v += g1.rank();
  CHECK(cu[1].vertices == shifted);
}

TEST_CASE("disjoint union blocks") {
  const CoxeterGraph u = disjoint_union(catalog_graph("A2"), catalog_graph("A2"));
  CHECK(u.rank() == 4);
  CHECK(u.label(1, 2) == Label::finite(3));
  CHECK(u.label(3, 4) == Label::finite(3));
  CHECK(u.label(2, 3) == Label::finite(2));
  CHECK(u.label(1, 4) == Label::finite(2));
}

TEST_CASE("serialize round trip") {
  const char* names[] = {"A1", "A4", "B3", "D5", "E8", "F4", "H4", "I2(7)", "~A1", "~A4", "~E7"};
  for (const char* name : names) {
    CAPTURE(name);
    const CoxeterGraph g = catalog_graph(name);
    CHECK(parse_graph(serialize_graph(g)) == g);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(load_graph_text(graph_to_json(g).dump()) == g);
  }
}

TEST_CASE("JSON mirror") {
  const auto j = nlohmann::json::parse(R"({"n":3,"labels":[[1,2,3],[2,3,"inf"]]})");
  const CoxeterGraph g = graph_from_json(j);
  CHECK(g.label(1, 2) == Label::finite(3));
  CHECK(g.label(2, 3).is_infinite());
  CHECK(graph_hash(g) == graph_hash(parse_graph("coxeter n=3; m 2 3 = inf; m 1 2 = 3")));
  CHECK(graph_hash(g).size() == 16);
}
