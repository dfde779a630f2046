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

#include "artcong/suite.hpp"

#include <chrono>
#include <functional>

#include "artcong/error.hpp"
#include "artcong/laurent.hpp"
#include "artcong/representation.hpp"
#include "artcong/roots.hpp"

namespace artcong {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  const SuiteOptions& opt;
  SuiteResult& out;

  void add(const std::string& id, const std::function<Report()>& fn) {
    SuiteCheck c;
    c.id = id;
    const auto start = Clock::now();
    try {
      c.report = fn();
    } catch (const Error& e) {
      c.report.claim = id;
      c.report.paper_ref = "check raised an error";
      c.report.status = Status::kFail;
      c.report.data = {{"error", error_code_name(e.code())}, {"message", e.what()}};
    }
    c.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    out.checks.push_back(std::move(c));
  }
};

CoxeterGraph graph_named(const CoxeterGraph& g, const std::string& name) {
  CoxeterGraph copy = g;
  copy.set_name(name);
  return copy;
}

std::string level_id(const std::string& prefix, const std::string& graph, std::uint64_t m) {
  return prefix + "." + graph + ".m" + std::to_string(m);
}

CoxeterGraph a2_plus_a1_tilde() {
  return disjoint_union(catalog_graph("A2"), catalog_graph("~A1"));
}

void suite_relations(Runner& r) {
  std::vector<CoxeterGraph> small;
  for (const auto& name : catalog_names(8)) {
    const CoxeterGraph g = catalog_graph(name);
    if (g.is_small()) small.push_back(g);
    r.add("relations." + name, [g] { return relations_check(g); });
  }
  r.add("relations.braid-cross-check", [] { return braid_cross_check(9); });
  r.add("relations.specialization", [small] { return specialization_check(small); });
}

void suite_hecke(Runner& r) {
  for (const auto& name : catalog_names(8)) {
    const CoxeterGraph g = catalog_graph(name);
    if (!g.is_small()) continue;
    r.add("hecke." + name, [g] { return hecke_check(g); });
  }
}

void suite_level2(Runner& r) {
  const SuiteOptions& o = r.opt;
  std::vector<std::string> spherical{"A2", "A3", "A4", "A5", "D4", "D5", "E6"};
  if (o.big) spherical.push_back("E7");
  for (const auto& name : spherical) {
    r.add("level2.spherical." + name, [&o, name] {
      return verify_level2_spherical(catalog_graph(name), o.cap, o.threads, o.store);
    });
  }
  for (const char* name : {"A2", "A3", "A5", "D4", "E6", "F4"}) {
    r.add(std::string("level2.center.") + name, [name] { return center_image_check(catalog_graph(name)); });
  }
  for (std::uint64_t k : {3, 5}) {
    r.add("level2.odd-quotient.A2.k" + std::to_string(k), [&o, k] {
      return oddk_quotient_check(catalog_graph("A2"), k, o.cap, o.threads, o.store);
    });
  }
  r.add("level2.odd-quotient.inf-pair.k3", [&o] {
    return oddk_quotient_check(infinity_path(2), 3, o.cap, o.threads, o.store);
  });
  const std::vector<std::pair<std::string, CoxeterGraph>> sampled = {
      {"A3", catalog_graph("A3")},
      {"D4", catalog_graph("D4")},
      {"inf-path3", infinity_path(3)},
      {"A2+~A1", a2_plus_a1_tilde()},
  };
  for (const auto& [name, g] : sampled) {
    for (std::uint64_t m = 2; m <= 6; ++m) {
      r.add(level_id("level2.normal-closure", name, m), [&o, g = g, m] {
        return verify_normal_closure(g, m, o.sampling);
      });
      r.add(level_id("level2.divisors", name, m), [&o, g = g, m] {
        return sample_divisor_containment(g, m, o.sampling);
      });
    }
  }
  const std::vector<std::tuple<std::string, CoxeterGraph, CoxeterGraph>> pairs = {
      {"A2+~A1", catalog_graph("A2"), catalog_graph("~A1")},
      {"A2+A2", catalog_graph("A2"), catalog_graph("A2")},
      {"A3+inf-path3", catalog_graph("A3"), infinity_path(3)},
      {"D4+A2", catalog_graph("D4"), catalog_graph("A2")},
  };
  for (const auto& [name, g1, g2] : pairs) {
    for (std::uint64_t m = 2; m <= 6; ++m) {
      r.add(level_id("level2.direct-sum", name, m), [&o, g1 = g1, g2 = g2, m] {
        return verify_direct_sum(g1, g2, m, o.sampling);
      });
    }
  }
}

void suite_level4(Runner& r) {
  const SuiteOptions& o = r.opt;
  std::vector<std::pair<std::string, CoxeterGraph>> graphs;
  for (int n = 2; n <= 6; ++n) graphs.emplace_back("inf-path" + std::to_string(n), infinity_path(n));
  for (int n = 3; n <= 6; ++n) graphs.emplace_back("inf-cycle" + std::to_string(n), infinity_cycle(n));
  graphs.emplace_back("inf-star4", infinity_star(3));
  for (const auto& [name, g] : graphs) {
    r.add("level4.raag." + name, [&o, g = g] { return verify_level4_raag(g, o.cap, o.threads, o.store); });
  }
}

void suite_commutator(Runner& r) {
  for (const Label m : {Label::finite(2), Label::finite(3), Label::infinity()}) {
    r.add("commutator.pair-" + m.to_string(), [m] { return commutator_check(label_pair(m)); });
  }
  const CoxeterGraph mixed =
      graph_named(parse_graph("coxeter n=4; m 1 2 = 3; m 2 3 = inf; m 3 4 = 3; m 1 4 = inf"), "mixed4");
  r.add("commutator.mixed4", [mixed] { return commutator_check(mixed); });
}

void suite_affine(Runner& r) {
  std::vector<std::string> ade;
  for (int n = 1; n <= 7; ++n) ade.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) ade.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) ade.push_back("E" + std::to_string(n));
  for (const auto& name : ade) {
    r.add("affine.roots." + name, [name] { return root_count_check(catalog_graph(name)); });
  }
  for (const auto& name : ade) {
    r.add("affine.s-theta." + name, [name] { return s_theta_table_check(catalog_graph(name)); });
  }
  for (const char* name : {"~A1", "~A2", "~A3", "~D4", "~D5", "~E6", "~E7", "~E8"}) {
    r.add(std::string("affine.translations.") + name,
          [name] { return translations_commute(catalog_graph(name)); });
  }
  for (const char* name : {"~A2", "~A3", "~D4", "~D5", "~E6"}) {
    for (std::uint64_t m = 2; m <= 8; ++m) {
      r.add(level_id("affine.translation-order", name, m),
            [name, m] { return translation_order_check(catalog_graph(name), m); });
    }
  }
  for (std::uint64_t m = 3; m <= 12; ++m) {
    r.add(level_id("affine.a1-tilde", "~A1", m), [m] { return a1_tilde_level_check(m); });
  }
  for (const char* name : {"~D4", "~D6", "~E7", "~E8"}) {
    r.add(std::string("affine.central.") + name, [name] { return central_element_check(name); });
  }
}

void suite_conjecture(Runner& r) {
  const SuiteOptions& o = r.opt;
  for (const char* name : {"~A1", "~A2", "~A3", "~D4", "A3"}) {
    r.add(std::string("conjecture.") + name, [&o, name] {
      Report rep = level2_conjecture_probe(catalog_graph(name), o.cap, o.threads, o.store);
      rep.status = Status::kProbe;
      return rep;
    });
  }
}

void fill(const std::string& name, Runner& r) {
  if (name == "relations") return suite_relations(r);
  if (name == "hecke") return suite_hecke(r);
  if (name == "level2") return suite_level2(r);
  if (name == "level4") return suite_level4(r);
  if (name == "commutator") return suite_commutator(r);
  if (name == "affine") return suite_affine(r);
  if (name == "conjecture") return suite_conjecture(r);
  if (name == "all") {
    for (const auto& s : suite_names()) {
      if (s != "all") fill(s, r);
    }
    return;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace

bool SuiteResult::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.report.failed(); });
}

nlohmann::json SuiteResult::to_json(bool timing) const {
  nlohmann::json list = nlohmann::json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : checks) {
    nlohmann::json j = c.report.to_json();
    j["id"] = c.id;
    if (timing) j["elapsed"] = c.elapsed;
    list.push_back(std::move(j));
    ++counts[static_cast<int>(c.report.status)];
  }
  return {{"suite", name},
          {"status", failed() ? "fail" : "pass"},
          {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"probe", counts[2]}}},
          {"checks", list}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "hecke",  "level2",     "level4",
                                                 "commutator", "affine", "conjecture", "all"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteResult out;
  out.name = name;
  Runner r{opt, out};
  fill(name, r);
  return out;
}

std::vector<std::string> catalog_names(int max_rank) {
  std::vector<std::string> candidates;
  for (int n = 1; n <= max_rank; ++n) candidates.push_back("A" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) candidates.push_back("B" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) candidates.push_back("D" + std::to_string(n));
  for (const char* s : {"E6", "E7", "E8", "F4", "H3", "H4"}) candidates.push_back(s);
  for (int p = 5; p <= 8; ++p) candidates.push_back("I2(" + std::to_string(p) + ")");
  for (int n = 1; n < max_rank; ++n) candidates.push_back("~A" + std::to_string(n));
  for (int n = 3; n < max_rank; ++n) candidates.push_back("~B" + std::to_string(n));
  for (int n = 2; n < max_rank; ++n) candidates.push_back("~C" + std::to_string(n));
  for (int n = 4; n < max_rank; ++n) candidates.push_back("~D" + std::to_string(n));
  for (const char* s : {"~E6", "~E7", "~F4", "~G2"}) candidates.push_back(s);
  std::vector<std::string> out;
  for (const auto& name : candidates) {
    try {
      if (catalog_graph(name).rank() <= max_rank) out.push_back(name);
    } catch (const Error&) {
    }
  }
  return out;
}

CoxeterGraph infinity_path(int n) {
  CoxeterGraph g(n);
  for (int i = 1; i < n; ++i) g.set_label(i, i + 1, Label::infinity());
  g.set_name("inf-path" + std::to_string(n));
  return g;
}

CoxeterGraph infinity_cycle(int n) {
  CoxeterGraph g = infinity_path(n);
  if (n >= 3) g.set_label(1, n, Label::infinity());
  g.set_name("inf-cycle" + std::to_string(n));
  return g;
}

CoxeterGraph infinity_star(int leaves) {
  CoxeterGraph g(leaves + 1);
  for (int i = 2; i <= leaves + 1; ++i) g.set_label(1, i, Label::infinity());
  g.set_name("inf-star" + std::to_string(leaves + 1));
  return g;
}

CoxeterGraph label_pair(Label m) {
  CoxeterGraph g(2);
  g.set_label(1, 2, m);
  g.set_name("pair-" + m.to_string());
  return g;
}

Report relations_check(const CoxeterGraph& g) {
  const bool exact = g.is_small();
  RepresentationSpec tits = RepresentationSpec::tits(g);
  RepresentationSpec burau = RepresentationSpec::burau(g);
  if (!exact) {
    tits = tits.numeric();
    burau = burau.numeric();
  }
  const RelationReport t = check_relations(tits);
  const RelationReport b = check_relations(burau);
  Report r;
  r.claim = "Tits images satisfy the Coxeter relations; Burau images satisfy the braid relations";
  r.paper_ref = "Tits and generalised Burau representations";
  r.status = t.pass && b.pass ? Status::kPass : Status::kFail;
  r.data = {{"graph", g.name().empty() ? serialize_graph(g) : g.name()},
            {"arithmetic", exact ? "exact" : "numeric"},
            {"tits", t.to_json()},
            {"burau", b.to_json()}};
  return r;
}

Report hecke_check(const CoxeterGraph& g) {
  const bool kstar = check_k_star(g);
  const RelationReport h = check_hecke(RepresentationSpec::burau(g));
  Report r;
  r.claim = "K* = s^-1 t^-1 K and sigma(a_i)^2 + (st - 1) sigma(a_i) - st I = 0";
  r.paper_ref = "quadratic relation of the generalised Burau generators";
  r.status = kstar && h.pass ? Status::kPass : Status::kFail;
  r.data = {{"graph", g.name()}, {"k_star", kstar}, {"hecke", h.to_json()}};
  return r;
}

Report braid_cross_check(int max_strands) {
  int checked = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (int n = 2; n <= max_strands; ++n) {
    const CoxeterGraph a = catalog_graph("A" + std::to_string(n - 1));
    for (int i = 1; i < n; ++i) {
      ++checked;
      if (!(braid_Zi(n, i) == burau_generator(a, i))) bad.push_back({n, i});
    }
  }
  Report r;
  r.claim = "braid-group Burau matrices Z_i equal the A_(n-1) generalised Burau generators";
  r.paper_ref = "braid group case of the generalised Burau representation";
  r.status = bad.empty() ? Status::kPass : Status::kFail;
  r.data = {{"max_strands", max_strands}, {"checked", checked}, {"mismatches", bad}};
  return r;
}

Report specialization_check(const std::vector<CoxeterGraph>& graphs) {
  int checked = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& g : graphs) {
    for (int i = 1; i <= g.rank(); ++i) {
      ++checked;
      if (!(specialize(burau_generator(g, i), 1, 1) == tits_generator(g, i))) bad.push_back({g.name(), i});
    }
  }
  Report r;
  r.claim = "Burau generators at s = t = 1 equal the Tits generators";
  r.paper_ref = "specialization of the generalised Burau representation";
  r.status = bad.empty() ? Status::kPass : Status::kFail;
  r.data = {{"graphs", graphs.size()}, {"checked", checked}, {"mismatches", bad}};
  return r;
}

Report root_count_check(const CoxeterGraph& g) {
  const RootSystem rs = enumerate_roots(g);
  const long n = g.rank();
  long expected = 0;
  switch (rs.type[0]) {
    case 'A': expected = n * (n + 1); break;
    case 'D': expected = 2 * n * (n - 1); break;
    default: expected = n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  Report r;
  r.claim = "root system has the expected number of roots";
  r.paper_ref = "root systems of simply laced types";
  r.status = static_cast<long>(rs.roots.size()) == expected ? Status::kPass : Status::kFail;
  r.data = {{"type", rs.type}, {"roots", rs.roots.size()}, {"expected", expected},
            {"highest_root", rs.highest_root}};
  return r;
}

Report s_theta_table_check(const CoxeterGraph& g) {
  const RootSystem rs = enumerate_roots(g);
  const Word w = table_s_theta_word(g);
  Report r;
  r.claim = "the tabulated word for s_theta is the reflection in the highest root";
  r.paper_ref = "table of highest-root reflection words";
  r.data = {{"type", rs.type}, {"word", format_word(w, g)}, {"highest_root", rs.highest_root}};
  try {
    s_theta_word(g);
    r.status = Status::kPass;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTableInconsistent) throw;
    r.status = Status::kFail;
    r.data["error"] = error_code_name(e.code());
    r.data["message"] = e.what();
    r.data["derived_word"] = format_word(derived_s_theta_word(g), g);
  }
  return r;
}

Report a1_tilde_level_check(std::uint64_t m) {
  const A1TildeLevel l = a1_tilde_level(m);
  const Report order = translation_order_check(catalog_graph("~A1"), m);
  Report r;
  r.claim = "~A1 level-m subgroup is generated by (s0 s1)^m for odd m and (s0 s1)^(m/2) for even m";
  r.paper_ref = "closed form of the ~A1 congruence subgroups";
  r.status = l.validated && !order.failed() ? Status::kPass : Status::kFail;
  r.data = l.to_json();
  r.data["minimal_power"] = order.data["minimal_power"];
  return r;
}

Report commutator_check(const CoxeterGraph& g) {
  nlohmann::json pairs = nlohmann::json::array();
  bool all = true;
  bool mod4 = true;
  for (int k = 1; k <= g.rank(); ++k) {
    for (int l = 1; l <= g.rank(); ++l) {
      if (k == l) continue;
      const CommutatorResult c = commutator_matrix(g, k, l);
      all = all && c.match;
      nlohmann::json j = c.to_json();
      j["k"] = k;
      j["l"] = l;
      if (g.is_right_angled()) {
        const bool id = reduce_mod(c.direct, 4).is_identity();
        j["identity_mod_4"] = id;
        mod4 = mod4 && id;
      }
      pairs.push_back(std::move(j));
    }
  }
  Report r;
  r.claim = "sigma-tilde commutator matches the closed-form entries";
  r.paper_ref = "commutator matrix lemma";
  r.status = all && mod4 ? Status::kPass : Status::kFail;
  r.data = {{"graph", g.name()}, {"pairs", pairs}};
  return r;
}

}  // namespace artcong
