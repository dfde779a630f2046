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

#include "artcong/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "artcong/engine.hpp"
#include "artcong/error.hpp"
#include "artcong/representation.hpp"

namespace artcong {

namespace {

std::string ade_type(const CoxeterGraph& g) {
  const ClassificationReport r = classify(g);
  if (r.components.size() != 1 || !r.is_spherical) {
    throw Error(ErrorCode::kNotADE, "expected a connected A, D or E graph");
  }
  const std::string& t = r.components[0].type;
  if (t.empty() || (t[0] != 'A' && t[0] != 'D' && t[0] != 'E')) {
    throw Error(ErrorCode::kNotADE, "type " + t + " is not simply laced");
  }
  return t;
}

long height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0L); }

nlohmann::json vec_json(const RootVector& v) { return nlohmann::json(v); }

Word coxeter_word(std::vector<int> letters) {
  Word w;
  w.letters = std::move(letters);
  return w;
}

Word conjugate_of_one(const std::vector<int>& w) {
  std::vector<int> letters = w;
  letters.push_back(1);
  letters.insert(letters.end(), w.rbegin(), w.rend());
  return coxeter_word(std::move(letters));
}

// Base finite graph of a catalog affine A/D/E graph.
CoxeterGraph affine_base_graph(const CoxeterGraph& g_affine) {
  const auto& base = g_affine.affine_base();
  if (!base || base->empty() || ((*base)[0] != 'A' && (*base)[0] != 'D' && (*base)[0] != 'E')) {
    throw Error(ErrorCode::kNotAffineADE, "expected an affine graph of type A, D or E");
  }
  const CoxeterGraph expected = catalog_graph("~" + *base);
  if (!(expected == g_affine)) {
    throw Error(ErrorCode::kNotAffineADE, "graph differs from the catalog ~" + *base);
  }
  return catalog_graph(*base);
}

IntegerMatrix theta_reflection(const RootSystem& rs) {
  const int n = rs.graph.rank();
  RootVector b_theta(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    long acc = 0;
    for (int k = 0; k < n; ++k) acc += rs.gram(k, c).get_si() * rs.highest_root[k];
    b_theta[c] = acc;
  }
  IntegerMatrix r = IntegerMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < n; ++c) r(i, c) -= rs.highest_root[i] * b_theta[c];
  }
  return r;
}

struct SThetaChoice {
  Word word;
  std::string source;
};

SThetaChoice choose_s_theta(const CoxeterGraph& base) {
  const Word table = table_s_theta_word(base);
  if (is_s_theta(base, table)) return {table, "table"};
  return {derived_s_theta_word(base), "derived"};
}

}  // namespace

nlohmann::json RootSystem::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : roots) rs.push_back(vec_json(r));
  return {{"type", type},
          {"rank", graph.rank()},
          {"root_count", roots.size()},
          {"positive_count", positive_count()},
          {"highest_root", vec_json(highest_root)},
          {"gram", artcong::to_json(gram)},
          {"roots", rs}};
}

RootVector reflect(const IntegerMatrix& gram, int i, const RootVector& v) {
  RootVector out = v;
  long pairing = 0;
  for (std::size_t k = 0; k < v.size(); ++k) pairing += gram(i - 1, static_cast<int>(k)).get_si() * v[k];
  out[i - 1] -= pairing;
  return out;
}

RootSystem enumerate_roots(const CoxeterGraph& g) {
  RootSystem rs;
  rs.type = ade_type(g);
  rs.graph = g;
  rs.gram = tits_gram(g);
  const int n = g.rank();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    const RootVector v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      RootVector w = reflect(rs.gram, i, v);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  std::vector<RootVector> positive;
  for (const auto& v : seen) {
    if (height(v) > 0) positive.push_back(v);
  }
  std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    const long ha = height(a);
    const long hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rs.roots = positive;
  for (const auto& v : positive) {
    RootVector neg = v;
    for (long& x : neg) x = -x;
    rs.roots.push_back(neg);
  }
  rs.highest_root = positive.back();
  for (const auto& v : positive) {
    for (int i = 0; i < n; ++i) {
      if (v[i] > rs.highest_root[i]) {
        throw Error(ErrorCode::kNotADE, "no dominant root");  // cannot happen for ADE
      }
    }
  }
  return rs;
}

Word table_s_theta_word(const CoxeterGraph& g) {
  const std::string type = ade_type(g);
  const int n = g.rank();
  const char family = type[0];
  if (family == 'A') {
    std::vector<int> letters;
    for (int i = 1; i <= n; ++i) letters.push_back(i);
    for (int i = n - 1; i >= 1; --i) letters.push_back(i);
    return coxeter_word(letters);
  }
  if (family == 'D') {
    // w = s_2 ... s_{n-3} s_{n-1} s_1 ... s_{n-2}
    std::vector<int> w;
    for (int i = 2; i <= n - 3; ++i) w.push_back(i);
    w.push_back(n - 1);
    for (int i = 1; i <= n - 2; ++i) w.push_back(i);
    return conjugate_of_one(w);
  }
  static const std::map<int, std::vector<int>> kE = {
      {6, {2, 4, 5, 6, 3, 4, 5, 2, 4, 3}},
      {7, {1, 3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5, 2, 4, 3}},
      {8, {8, 7, 6, 5, 4, 3, 1, 2, 4, 5, 6, 7, 8, 3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5, 2, 4, 3}},
  };
  return conjugate_of_one(kE.at(n));
}

bool is_s_theta(const CoxeterGraph& g, const Word& w) {
  const RootSystem rs = enumerate_roots(g);
  const IntegerMatrix m = eval_word_exact(RepresentationSpec::tits(g), w);
  return m == theta_reflection(rs);
}

Word s_theta_word(const CoxeterGraph& g) {
  const Word w = table_s_theta_word(g);
  if (is_s_theta(g, w)) return w;
  const RootSystem rs = enumerate_roots(g);
  const IntegerMatrix m = eval_word_exact(RepresentationSpec::tits(g), w);
  // The word is w' s_1 w'^-1, a reflection in w'(alpha_1) = column 1 of w'.
  Word half;
  half.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(w.length() / 2));
  const IntegerMatrix hm = eval_word_exact(RepresentationSpec::tits(g), half);
  RootVector col;
  for (int i = 0; i < g.rank(); ++i) col.push_back(hm(i, 0).get_si());
  throw Error(ErrorCode::kTableInconsistent,
              "table word for " + rs.type + " reflects in " + vec_json(col).dump() +
                  ", not in the highest root " + vec_json(rs.highest_root).dump());
}

Word find_conjugator(const CoxeterGraph& g, int i) {
  const RootSystem rs = enumerate_roots(g);
  const int n = g.rank();
  if (i < 1 || i > n) throw Error(ErrorCode::kBadIndex, "root index out of range");
  RootVector target(static_cast<std::size_t>(n), 0);
  target[i - 1] = 1;
  // word[v] = u with u(theta) = v; letters prepend.
  std::map<RootVector, std::vector<int>> word;
  std::deque<RootVector> queue{rs.highest_root};
  word[rs.highest_root] = {};
  while (!queue.empty()) {
    const RootVector v = queue.front();
    queue.pop_front();
    if (v == target) {
      Word out;
      out.letters = word[v];
      return out;
    }
    for (int j = 1; j <= n; ++j) {
      RootVector next = reflect(rs.gram, j, v);
      if (word.count(next)) continue;
      std::vector<int> letters{j};
      const auto& prev = word[v];
      letters.insert(letters.end(), prev.begin(), prev.end());
      word.emplace(next, std::move(letters));
      queue.push_back(std::move(next));
    }
  }
  throw Error(ErrorCode::kNotADE, "simple root not in the orbit of the highest root");
}

Word derived_s_theta_word(const CoxeterGraph& g) {
  Word best;
  bool have = false;
  for (int i = 1; i <= g.rank(); ++i) {
    const Word w = find_conjugator(g, i);
    if (!have || w.length() < best.length()) {
      // theta = w^-1 alpha_i, so s_theta = w^-1 s_i w
      best = inverse(w);
      best.letters.push_back(i);
      best.letters.insert(best.letters.end(), w.letters.begin(), w.letters.end());
      have = true;
    }
  }
  return best;
}

nlohmann::json TranslationElement::to_json(const CoxeterGraph& affine) const {
  return {{"index", index},
          {"conjugator", format_word(conjugator, affine)},
          {"s_theta", format_word(s_theta, affine)},
          {"s_theta_source", s_theta_source},
          {"word", format_word(full_word, affine)},
          {"matrix", artcong::to_json(matrix)},
          {"display_matrix", artcong::to_json(to_display_order(matrix, affine))},
          {"unipotent", unipotent}};
}

TranslationElement translation_word(const CoxeterGraph& g_affine, int i) {
  const CoxeterGraph base = affine_base_graph(g_affine);
  const int n = base.rank();
  if (i < 1 || i > n) throw Error(ErrorCode::kBadIndex, "translation index out of range");
  TranslationElement t;
  t.index = i;
  t.conjugator = find_conjugator(base, i);
  const SThetaChoice st = choose_s_theta(base);
  t.s_theta = st.word;
  t.s_theta_source = st.source;
  t.full_word = t.conjugator;
  t.full_word.letters.push_back(n + 1);
  t.full_word = concat(concat(t.full_word, t.s_theta), inverse(t.conjugator));
  t.matrix = eval_word_exact(RepresentationSpec::tits(g_affine), t.full_word);
  const IntegerMatrix nil = t.matrix - IntegerMatrix::identity(n + 1);
  t.unipotent = (nil * nil) == IntegerMatrix(n + 1);
  return t;
}

Report translations_commute(const CoxeterGraph& g_affine) {
  const CoxeterGraph base = affine_base_graph(g_affine);
  Report r;
  r.claim = "translations are unipotent and commute pairwise";
  r.paper_ref = "coroot lattice as the abelian normal subgroup of the affine group";
  std::vector<TranslationElement> ts;
  bool unipotent = true;
  for (int i = 1; i <= base.rank(); ++i) {
    ts.push_back(translation_word(g_affine, i));
    unipotent = unipotent && ts.back().unipotent;
  }
  bool commute = true;
  for (std::size_t a = 0; a < ts.size(); ++a) {
    for (std::size_t b = a + 1; b < ts.size(); ++b) {
      if (!(ts[a].matrix * ts[b].matrix == ts[b].matrix * ts[a].matrix)) commute = false;
    }
  }
  nlohmann::json words = nlohmann::json::array();
  for (const auto& t : ts) words.push_back(format_word(t.full_word, g_affine));
  r.status = unipotent && commute ? Status::kPass : Status::kFail;
  r.data = {{"graph", g_affine.name()}, {"words", words}, {"unipotent", unipotent}, {"commute", commute},
            {"s_theta_source", ts.front().s_theta_source}};
  return r;
}

Report translation_order_check(const CoxeterGraph& g_affine, std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::kBadLevel, "level must be >= 2");
  const CoxeterGraph base = affine_base_graph(g_affine);
  const int n = base.rank();
  const SThetaChoice st = choose_s_theta(base);
  Word w;
  w.letters.push_back(n + 1);
  w = concat(w, st.word);
  const IntegerMatrix step = eval_word_exact(RepresentationSpec::tits(g_affine), w);
  const ResidueMatrix step_mod = reduce_mod(step, m);
  ResidueMatrix p = ResidueMatrix::identity(m, n + 1);
  std::uint64_t minimal = 0;
  bool power_m = false;
  for (std::uint64_t k = 1; k <= m; ++k) {
    p = p * step_mod;
    if (p.is_identity() && minimal == 0) minimal = k;
    if (k == m) power_m = p.is_identity();
  }
  const bool a1 = *g_affine.affine_base() == "A1";
  const std::uint64_t expected = a1 ? m / std::gcd(m, std::uint64_t{2}) : m;
  Report r;
  r.claim = "rho(s0 s_theta)^m = I mod m with no smaller power";
  r.paper_ref = a1 ? "closed form of the ~A1 congruence subgroups"
                   : "order of the translation s0 s_theta modulo m";
  r.status = power_m && minimal == expected ? Status::kPass : Status::kFail;
  r.data = {{"graph", g_affine.name()},
            {"level", m},
            {"word", format_word(w, g_affine)},
            {"s_theta_source", st.source},
            {"minimal_power", minimal},
            {"expected_minimal_power", expected},
            {"power_m_is_identity", power_m},
            {"exception", a1}};
  return r;
}

nlohmann::json A1TildeLevel::to_json() const {
  const CoxeterGraph g = catalog_graph("~A1");
  return {{"level", level}, {"exponent", exponent}, {"word", format_word(word, g)}, {"validated", validated}};
}

A1TildeLevel a1_tilde_level(std::uint64_t m) {
  if (m < 3) {
    throw Error(ErrorCode::kBadLevel,
                "level must be >= 3 (at level 2 every generator is already I mod 2)");
  }
  const CoxeterGraph g = catalog_graph("~A1");
  A1TildeLevel out;
  out.level = m;
  out.exponent = static_cast<unsigned>(m % 2 == 1 ? m : m / 2);
  Word base;
  base.letters = {2, 1};
  out.word = power(base, out.exponent);
  const RepresentationSpec spec = RepresentationSpec::tits(g);
  bool ok = eval_word_mod(spec, out.word, m).is_identity();
  for (unsigned k = 1; k < out.exponent && ok; ++k) {
    if (eval_word_mod(spec, power(base, k), m).is_identity()) ok = false;
  }
  out.validated = ok;
  return out;
}

namespace {

// First columns of the published displays, s0 first.
const std::map<std::string, std::vector<long>> kDisplayColumns = {
    {"~D6", {1, 2, 4, 4, 4, 2, 2}},
    {"~E7", {1, 4, 4, 6, 8, 6, 4, 2}},
    {"~E8", {1, 4, 6, 8, 12, 10, 8, 6, 4}},
};

IntegerMatrix display_from_column(const std::vector<long>& col) {
  const int n = static_cast<int>(col.size());
  IntegerMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, 0) = col[i];
    if (i > 0) m(i, i) = -1;
  }
  return m;
}

}  // namespace

Report central_element_check(const std::string& type) {
  CoxeterGraph g_affine{1};
  try {
    g_affine = catalog_graph(type);
  } catch (const Error&) {
    throw Error(ErrorCode::kUnknownType, "unknown type '" + type + "'");
  }
  const auto& base_name = g_affine.affine_base();
  const bool d_even = base_name && (*base_name)[0] == 'D' &&
                      std::stoi(base_name->substr(1)) % 2 == 0;
  const bool e78 = base_name && (*base_name == "E7" || *base_name == "E8");
  if (!d_even && !e78) {
    throw Error(ErrorCode::kUnknownType, "expected ~D_2n, ~E7 or ~E8, got '" + type + "'");
  }
  const CoxeterGraph base = catalog_graph(*base_name);
  const int n = base.rank();
  Word coxeter;
  for (int i = 1; i <= n; ++i) coxeter.letters.push_back(i);
  Word central;
  std::string source;
  if (*base_name == "E7") {
    central = longest_element(base);
    source = "longest element";
  } else {
    // c^(h/2) for a Coxeter element c
    const unsigned half_h = *base_name == "E8" ? 15 : static_cast<unsigned>(n - 1);
    central = power(coxeter, half_h);
    source = "coxeter element power " + std::to_string(half_h);
  }
  const IntegerMatrix finite = eval_word_exact(RepresentationSpec::tits(base), central);
  const bool finite_minus = finite == -IntegerMatrix::identity(n);

  const IntegerMatrix affine =
      to_display_order(eval_word_exact(RepresentationSpec::tits(g_affine), central), g_affine);
  IntegerMatrix expected;
  std::string expected_source;
  const std::string canonical = g_affine.name();
  if (auto it = kDisplayColumns.find(canonical); it != kDisplayColumns.end()) {
    expected = display_from_column(it->second);
    expected_source = "display";
  } else {
    const RootSystem rs = enumerate_roots(base);
    std::vector<long> col{1};
    for (long c : rs.highest_root) col.push_back(2 * c);
    expected = display_from_column(col);
    expected_source = "highest root";
  }
  const bool match = affine == expected;
  nlohmann::json congruent = nlohmann::json::object();
  bool only_two = true;
  for (std::uint64_t m = 2; m <= 16; ++m) {
    const bool id = reduce_mod(affine, m).is_identity();
    congruent[std::to_string(m)] = id;
    if (id != (m == 2)) only_two = false;
  }
  Report r;
  r.claim = "central element of the finite part: affine image matches the display and is I mod m iff m = 2";
  r.paper_ref = "central elements of affine types ~D_2n, ~E7, ~E8";
  r.status = finite_minus && match && only_two ? Status::kPass : Status::kFail;
  r.data = {{"type", canonical},
            {"word", format_word(central, base)},
            {"word_length", central.length()},
            {"word_source", source},
            {"finite_image_is_minus_identity", finite_minus},
            {"affine_image", artcong::to_json(affine)},
            {"expected", artcong::to_json(expected)},
            {"expected_source", expected_source},
            {"match", match},
            {"identity_mod", congruent}};
  return r;
}

}  // namespace artcong
