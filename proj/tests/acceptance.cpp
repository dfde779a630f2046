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

// Acceptance gate: one line per criterion. Usage:
//   artcong_acceptance [--criterion N] [--big]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "artcong/congruence.hpp"
#include "artcong/engine.hpp"
#include "artcong/error.hpp"
#include "artcong/roots.hpp"
#include "artcong/suite.hpp"

using namespace artcong;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome(bool big)> run;
};

bool is_pass(const Report& r) { return r.status == Status::kPass; }

Outcome relations(bool) {
  Outcome o;
  int n = 0;
  for (const auto& name : catalog_names(8)) {
    ++n;
    o.require(is_pass(relations_check(catalog_graph(name))), name);
  }
  o.require(n >= 50, "catalog too small");
  if (o.pass) o.detail = std::to_string(n) + " graphs";
  return o;
}

Outcome hecke(bool) {
  Outcome o;
  int n = 0;
  for (const auto& name : catalog_names(8)) {
    const CoxeterGraph g = catalog_graph(name);
    if (!g.is_small()) continue;
    ++n;
    o.require(is_pass(hecke_check(g)), name);
  }
  if (o.pass) o.detail = std::to_string(n) + " small graphs";
  return o;
}

Outcome braid(bool) {
  Outcome o;
  o.require(is_pass(braid_cross_check(9)), "braid Z_i mismatch");
  std::vector<CoxeterGraph> small;
  for (const auto& name : catalog_names(8)) {
    const CoxeterGraph g = catalog_graph(name);
    if (g.is_small()) small.push_back(g);
  }
  o.require(is_pass(specialization_check(small)), "s = t = 1 specialization mismatch");
  if (o.pass) o.detail = "n = 2..9, " + std::to_string(small.size()) + " graphs specialized";
  return o;
}

Outcome level2(bool big) {
  Outcome o;
  std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A2", 6}, {"A3", 24}, {"A4", 120}, {"A5", 720}, {"D4", 96}, {"D5", 1920}, {"E6", 51840}};
  if (big) cases.emplace_back("E7", 1451520);
  for (const auto& [name, expected] : cases) {
    const Report r = verify_level2_spherical(catalog_graph(name));
    o.require(is_pass(r), name + " report failed");
    o.require(r.data["image_order"].get<std::size_t>() == expected,
              name + " image order " + r.data["image_order"].dump());
  }
  if (o.pass) o.detail = big ? "A2..E6 and E7" : "A2..E6 (E7 needs --big)";
  return o;
}

Outcome level4(bool) {
  Outcome o;
  std::vector<CoxeterGraph> graphs;
  for (int n = 2; n <= 6; ++n) graphs.push_back(infinity_path(n));
  for (int n = 2; n <= 6; ++n) graphs.push_back(infinity_cycle(n));
  graphs.push_back(infinity_star(3));
  for (const auto& g : graphs) {
    const Report r = verify_level4_raag(g);
    o.require(is_pass(r), g.name());
    o.require(r.data["image_order_4"].get<std::size_t>() == (std::size_t{1} << g.rank()), g.name() + " order");
    o.require(r.data["image_order_2"] == 1, g.name() + " level-2 image");
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " right-angled graphs";
  return o;
}

Outcome commutator(bool) {
  Outcome o;
  for (const Label m : {Label::finite(2), Label::finite(3), Label::infinity()}) {
    o.require(is_pass(commutator_check(label_pair(m))), "label " + m.to_string());
  }
  const CommutatorResult inf = commutator_matrix(label_pair(Label::infinity()), 1, 2);
  IntegerMatrix expected(2);
  expected(0, 0) = 13;
  expected(0, 1) = 8;
  expected(1, 0) = 8;
  expected(1, 1) = 5;
  o.require(inf.direct == expected && inf.formula == expected, "inf pair is not [[13,8],[8,5]]");
  o.require(reduce_mod(inf.direct, 4).is_identity(), "inf pair not I mod 4");
  if (o.pass) o.detail = "labels 2, 3, inf";
  return o;
}

Outcome displays(bool) {
  Outcome o;
  for (const char* t : {"~D6", "~E7", "~E8"}) {
    const Report r = central_element_check(t);
    o.require(is_pass(r), t);
    o.require(r.data["expected_source"] == "display", std::string(t) + " not compared to a display");
  }
  if (o.pass) o.detail = "~D6, ~E7, ~E8 match; I mod m iff m = 2";
  return o;
}

Outcome translation_orders(bool) {
  Outcome o;
  for (const char* name : {"~A2", "~A3", "~D4", "~D5", "~E6"}) {
    for (std::uint64_t m = 2; m <= 8; ++m) {
      o.require(is_pass(translation_order_check(catalog_graph(name), m)),
                std::string(name) + " m=" + std::to_string(m));
    }
  }
  for (std::uint64_t m = 3; m <= 12; ++m) {
    const Report r = translation_order_check(catalog_graph("~A1"), m);
    const std::uint64_t expected = m % 2 ? m : m / 2;
    o.require(r.data["minimal_power"].get<std::uint64_t>() == expected, "~A1 m=" + std::to_string(m));
  }
  if (o.pass) o.detail = "5 graphs x m = 2..8, ~A1 m = 3..12";
  return o;
}

Outcome s_theta(bool) {
  Outcome o;
  std::vector<std::string> names;
  for (int n = 1; n <= 7; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) names.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) names.push_back("E" + std::to_string(n));
  for (const auto& name : names) {
    const CoxeterGraph g = catalog_graph(name);
    o.require(is_pass(root_count_check(g)), name + " root count");
    const Report r = s_theta_table_check(g);
    o.require(is_pass(r), name + " table word " + r.data["word"].get<std::string>() + " fails");
  }
  if (o.pass) o.detail = "all table words and root counts";
  return o;
}

Outcome sampling(bool) {
  Outcome o;
  const std::vector<std::pair<std::string, CoxeterGraph>> graphs = {
      {"A3", catalog_graph("A3")},
      {"D4", catalog_graph("D4")},
      {"inf-path3", infinity_path(3)},
      {"A2+~A1", disjoint_union(catalog_graph("A2"), catalog_graph("~A1"))},
  };
  const std::vector<std::pair<CoxeterGraph, CoxeterGraph>> pairs = {
      {catalog_graph("A2"), catalog_graph("~A1")},
      {catalog_graph("A3"), infinity_path(3)},
      {catalog_graph("D4"), catalog_graph("A2")},
  };
  SamplingOptions opt;
  opt.samples = 100;
  int reports = 0;
  for (std::uint64_t m = 2; m <= 6; ++m) {
    for (const auto& [name, g] : graphs) {
      reports += 2;
      o.require(is_pass(verify_normal_closure(g, m, opt)), "normal closure " + name);
      o.require(is_pass(sample_divisor_containment(g, m, opt)), "divisors " + name);
    }
    for (const auto& [a, b] : pairs) {
      ++reports;
      o.require(is_pass(verify_direct_sum(a, b, m, opt)), "direct sum " + a.name() + "+" + b.name());
    }
  }
  if (o.pass) o.detail = std::to_string(reports) + " sampled reports, no counterexamples";
  return o;
}

Outcome odd_quotient(bool) {
  Outcome o;
  for (std::uint64_t k : {3, 5}) {
    const Report r = oddk_quotient_check(catalog_graph("A2"), k);
    o.require(is_pass(r), "k=" + std::to_string(k));
    o.require(r.data["ratio"] == 6 && r.data["order_2"] == 6, "k=" + std::to_string(k) + " ratio");
  }
  if (o.pass) o.detail = "A2, k = 3, 5: ratio 6";
  return o;
}

Outcome center(bool) {
  Outcome o;
  for (const char* name : {"A3", "A5", "E6"}) {
    const Report r = center_image_check(catalog_graph(name));
    o.require(is_pass(r) && r.data["sign"] == 1, std::string(name) + " not I");
  }
  const Report a2 = center_image_check(catalog_graph("A2"));
  o.require(is_pass(a2) && a2.data["sign"] == -1 && a2.data["generator"] == "Delta^2", "A2 not -I");
  const Report f4 = center_image_check(catalog_graph("F4"));
  o.require(is_pass(f4) && f4.data["sign"] == -1 && f4.data["generator"] == "Delta" &&
                f4.data["arithmetic"] == "numeric" && f4.data["deviation"].get<double>() <= 1e-9,
            "F4 not -I");
  if (o.pass) o.detail = "A3, A5, E6 -> I; A2 -> -I; F4 -> -I numerically";
  return o;
}

Outcome conjecture(bool) {
  Outcome o;
  std::string d;
  for (const char* name : {"~A1", "~A2", "~A3", "~D4"}) {
    const Report r = level2_conjecture_probe(catalog_graph(name));
    o.require(r.status == Status::kProbe, std::string(name) + " status");
    d += std::string(d.empty() ? "" : ", ") + name + " " + r.data["artin_image_order"].dump() + "/" +
         r.data["coxeter_image_order"].dump();
  }
  if (o.pass) o.detail = "probe " + d;
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "relations suite", 10, relations},
      {2, "K* identity and quadratic relation", 5, hecke},
      {3, "braid cross-check and specialization", 5, braid},
      {4, "level-2 spherical quotients", 60, level2},
      {5, "level-4 right-angled quotients", 10, level4},
      {6, "commutator closed form", 1, commutator},
      {7, "affine central-element displays", 30, displays},
      {8, "translation orders", 20, translation_orders},
      {9, "s_theta table words and root counts", 10, s_theta},
      {10, "sampling probes", 30, sampling},
      {11, "odd-k quotient", 30, odd_quotient},
      {12, "center image", 10, center},
      {13, "conjecture probe", 60, conjecture},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool big = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--big") == 0) {
      big = true;
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N] [--big]\n", argv[0]);
      return 2;
    }
  }
  int failures = 0;
  int ran = 0;
  for (const Criterion& c : criteria()) {
    if (only && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(big);
    } catch (const Error& e) {
      o.pass = false;
      o.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    double limit = c.limit_seconds;
    if (c.id == 4 && big) limit = 300;
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > limit) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    std::printf("%s criterion %2d: %s [%.2fs / %.0fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, elapsed,
                limit, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no such criterion\n");
    return 2;
  }
  return failures ? 1 : 0;
}
