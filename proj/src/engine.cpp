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

#include "artcong/engine.hpp"

#include <cmath>

#include "artcong/error.hpp"

namespace artcong {

namespace {

void check_letters(const CoxeterGraph& g, const Word& w, bool inverses_allowed) {
  for (int l : w.letters) {
    const int idx = l < 0 ? -l : l;
    if (idx < 1 || idx > g.rank()) {
      throw Error(ErrorCode::kBadIndex, "letter " + std::to_string(l) + " outside 1.." +
                                            std::to_string(g.rank()));
    }
    if (l < 0 && !inverses_allowed) {
      throw Error(ErrorCode::kInverseInCoxeterMode,
                  "inverse letter " + std::to_string(l) + " under the Tits representation");
    }
  }
}

// M <- M (I + e_row r^T)
void right_apply(IntegerMatrix& m, int row, const std::vector<long>& r) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    const mpz_class x = m(i, row);
    if (x == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (r[j] != 0) m(i, j) += x * r[j];
    }
  }
}

std::vector<long> specialized_row(const CoxeterGraph& g, int vertex, long sv, long tv, bool inverse) {
  const IntegerMatrix gen = burau_generator_specialized(g, vertex, sv, tv, inverse);
  std::vector<long> r(static_cast<std::size_t>(g.rank()));
  for (int k = 0; k < g.rank(); ++k) {
    r[k] = gen(vertex - 1, k).get_si() - (k == vertex - 1 ? 1 : 0);
  }
  return r;
}

// Rows of each generator (and inverse) for an exact spec.
struct ExactRows {
  std::vector<std::vector<long>> forward;
  std::vector<std::vector<long>> backward;
};

ExactRows exact_rows(const RepresentationSpec& spec) {
  const CoxeterGraph& g = spec.graph;
  ExactRows rows;
  for (int v = 1; v <= g.rank(); ++v) {
    if (spec.kind == RepKind::kTits) {
      rows.forward.push_back(tits_row(g, v - 1));
      rows.backward.push_back(rows.forward.back());
    } else {
      const long sv = static_cast<long>(spec.s_val);
      const long tv = static_cast<long>(spec.t_val);
      rows.forward.push_back(specialized_row(g, v, sv, tv, false));
      rows.backward.push_back(specialized_row(g, v, sv, tv, true));
    }
  }
  return rows;
}

}  // namespace

IntegerMatrix eval_word_exact(const RepresentationSpec& spec, const Word& w) {
  validate(spec);
  if (spec.arithmetic != Arithmetic::kExact || spec.kind == RepKind::kBurau) {
    throw Error(ErrorCode::kInvalidArgument, "integer evaluation needs an exact integral kind");
  }
  check_letters(spec.graph, w, spec.kind != RepKind::kTits);
  const ExactRows rows = exact_rows(spec);
  IntegerMatrix m = IntegerMatrix::identity(spec.graph.rank());
  for (int l : w.letters) {
    const int v = (l < 0 ? -l : l) - 1;
    right_apply(m, v, l < 0 ? rows.backward[v] : rows.forward[v]);
  }
  return m;
}

ResidueMatrix eval_word_mod(const RepresentationSpec& spec, const Word& w, std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::kBadModulus, "modulus must be >= 2");
  validate(spec);
  if (spec.arithmetic != Arithmetic::kExact || spec.kind == RepKind::kBurau) {
    throw Error(ErrorCode::kInvalidArgument, "residue evaluation needs an exact integral kind");
  }
  check_letters(spec.graph, w, spec.kind != RepKind::kTits);
  const ExactRows rows = exact_rows(spec);
  const int n = spec.graph.rank();
  const auto mod = static_cast<__int128>(m);
  std::vector<__int128> a(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1;
  for (int l : w.letters) {
    const int v = (l < 0 ? -l : l) - 1;
    const auto& r = l < 0 ? rows.backward[v] : rows.forward[v];
    for (int i = 0; i < n; ++i) {
      const __int128 x = a[static_cast<std::size_t>(i) * n + v];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (r[j] == 0) continue;
        __int128& e = a[static_cast<std::size_t>(i) * n + j];
        e = ((e + x * r[j]) % mod + mod) % mod;
      }
    }
  }
  ResidueMatrix out(m, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.set(i, j, static_cast<std::uint64_t>(a[static_cast<std::size_t>(i) * n + j] % mod));
    }
  }
  return out;
}

Evaluated eval_word(const RepresentationSpec& spec, const Word& w) {
  validate(spec);
  const CoxeterGraph& g = spec.graph;
  const int n = g.rank();
  check_letters(g, w, spec.kind != RepKind::kTits);

  if (spec.arithmetic == Arithmetic::kExact) {
    if (spec.kind != RepKind::kBurau) return eval_word_exact(spec, w);
    std::vector<LaurentMatrix> fwd;
    std::vector<LaurentMatrix> bwd;
    for (int v = 1; v <= n; ++v) {
      fwd.push_back(burau_generator(g, v, false));
      bwd.push_back(burau_generator(g, v, true));
    }
    LaurentMatrix m = LaurentMatrix::identity(n);
    for (int l : w.letters) m = m * (l < 0 ? bwd[-l - 1] : fwd[l - 1]);
    return m;
  }

  const double tol = spec.tolerance;
  std::vector<NumericMatrix> fwd;
  std::vector<NumericMatrix> bwd;
  for (int v = 1; v <= n; ++v) {
    if (spec.kind == RepKind::kTits) {
      fwd.push_back(tits_generator_numeric(g, v, tol));
      bwd.push_back(fwd.back());
    } else {
      fwd.push_back(burau_generator_numeric(g, v, spec.s_val, spec.t_val, false, tol));
      bwd.push_back(burau_generator_numeric(g, v, spec.s_val, spec.t_val, true, tol));
    }
  }
  NumericMatrix m = NumericMatrix::identity(n, tol);
  for (int l : w.letters) m = m * (l < 0 ? bwd[-l - 1] : fwd[l - 1]);
  return m;
}

nlohmann::json evaluated_to_json(const Evaluated& e) {
  return std::visit(
      [](const auto& m) -> nlohmann::json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LaurentMatrix>) {
          nlohmann::json rows = nlohmann::json::array();
          for (int i = 0; i < m.dim(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_json());
            rows.push_back(std::move(row));
          }
          return rows;
        } else {
          return to_json(m);
        }
      },
      e);
}

IntegerMatrix to_display_order(const IntegerMatrix& a, const CoxeterGraph& g) {
  const auto affine = g.affine_vertex();
  if (!affine) return a;
  const int n = a.dim();
  const int z = *affine - 1;
  // display index d -> storage index
  auto storage = [&](int d) { return d == 0 ? z : (d <= z ? d - 1 : d); };
  IntegerMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out(r, c) = a(storage(r), storage(c));
  }
  return out;
}

std::vector<RankOneGenerator> tits_generators(const CoxeterGraph& g) {
  std::vector<RankOneGenerator> gens;
  for (int v = 0; v < g.rank(); ++v) {
    const auto row = tits_row(g, v);
    gens.push_back({v, {row.begin(), row.end()}});
  }
  return gens;
}

std::vector<RankOneGenerator> sigma_tilde_generators(const CoxeterGraph& g, bool with_inverses) {
  std::vector<RankOneGenerator> gens;
  for (int v = 0; v < g.rank(); ++v) {
    const auto row = sigma_tilde_row(g, v, false);
    gens.push_back({v, {row.begin(), row.end()}});
  }
  if (with_inverses) {
    for (int v = 0; v < g.rank(); ++v) {
      const auto row = sigma_tilde_row(g, v, true);
      gens.push_back({v, {row.begin(), row.end()}});
    }
  }
  return gens;
}

Word GroupEnumeration::word(std::uint32_t index) const {
  Word w;
  for (int gen : closure.word(index)) w.letters.push_back(gen + 1);
  return w;
}

nlohmann::json GroupEnumeration::to_json() const {
  nlohmann::json centers = nlohmann::json::array();
  for (const auto& w : center_words) centers.push_back(format_word(w, graph));
  return {{"graph", serialize_graph(graph)},
          {"order", order},
          {"longest_word", format_word(longest_word, graph)},
          {"longest_length", longest_word.length()},
          {"center_order", center_words.size()},
          {"center_words", centers}};
}

namespace {

bool commutes_with(std::span<const std::int64_t> m, int n, const RankOneGenerator& g) {
  const int i = g.row;
  for (int k = 0; k < n; ++k) {
    if (k != i && m[static_cast<std::size_t>(k) * n + i] != 0) return false;
  }
  const std::int64_t mii = m[static_cast<std::size_t>(i) * n + i];
  for (int j = 0; j < n; ++j) {
    std::int64_t rm = 0;
    for (int l = 0; l < n; ++l) rm += g.r[l] * m[static_cast<std::size_t>(l) * n + j];
    if (mii * g.r[j] != rm) return false;
  }
  return true;
}

}  // namespace

GroupEnumeration enumerate_group(const CoxeterGraph& g, std::size_t cap, int threads) {
  const auto gens = tits_generators(g);
  GroupEnumeration e;
  e.graph = g;
  e.closure = close_under(g.rank(), gens, {.modulus = 0, .cap = cap, .threads = threads});
  e.order = e.closure.size();
  e.longest_word = e.word(static_cast<std::uint32_t>(e.order - 1));
  const int n = g.rank();
  for (std::uint32_t idx = 0; idx < e.order; ++idx) {
    const auto m = e.closure.matrix(idx);
    bool central = true;
    for (const auto& gen : gens) {
      if (!commutes_with(m, n, gen)) {
        central = false;
        break;
      }
    }
    if (central) e.center_words.push_back(e.word(idx));
  }
  return e;
}

Word longest_element(const CoxeterGraph& g) {
  if (!classify(g).is_spherical) {
    throw Error(ErrorCode::kNotSpherical, "graph is not spherical");
  }
  const int n = g.rank();
  Word w;
  // Append the least i with w(alpha_i) > 0 until none is left.
  constexpr std::size_t kMaxLength = 1 << 16;
  if (g.is_small()) {
    IntegerMatrix m = IntegerMatrix::identity(n);
    std::vector<std::vector<long>> rows;
    for (int v = 0; v < n; ++v) rows.push_back(tits_row(g, v));
    while (w.length() < kMaxLength) {
      int pick = -1;
      for (int i = 0; i < n && pick < 0; ++i) {
        for (int k = 0; k < n; ++k) {
          if (m(k, i) != 0) {
            if (m(k, i) > 0) pick = i;
            break;
          }
        }
      }
      if (pick < 0) break;
      right_apply(m, pick, rows[pick]);
      w.letters.push_back(pick + 1);
    }
    return w;
  }
  const double tol = 1e-9;
  std::vector<NumericMatrix> gens;
  for (int v = 1; v <= n; ++v) gens.push_back(tits_generator_numeric(g, v, tol));
  NumericMatrix m = NumericMatrix::identity(n, tol);
  while (w.length() < kMaxLength) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      for (int k = 0; k < n; ++k) {
        if (std::fabs(m(k, i)) > 1e-7) {
          if (m(k, i) > 0) pick = i;
          break;
        }
      }
    }
    if (pick < 0) break;
    m = m * gens[pick];
    w.letters.push_back(pick + 1);
  }
  return w;
}

GarsideDelta garside_delta(const CoxeterGraph& g) {
  const ClassificationReport report = classify(g);
  if (report.components.size() != 1) {
    throw Error(ErrorCode::kNotConnected, "garside_delta needs a connected graph");
  }
  if (!report.is_spherical) throw Error(ErrorCode::kNotSpherical, "graph is not spherical");
  const std::string& type = report.components[0].type;
  GarsideDelta d;
  d.delta = as_artin(longest_element(g));
  const char family = type.empty() ? '?' : type[0];
  if (family == 'I') {
    const auto open = type.find('(');
    const int p = std::stoi(type.substr(open + 1));
    d.squared = p % 2 == 1;
  } else {
    const int rank = std::stoi(type.substr(1));
    d.squared = (family == 'A' && rank >= 2) || (family == 'D' && rank % 2 == 1) ||
                (family == 'E' && rank == 6);
  }
  return d;
}

}  // namespace artcong
