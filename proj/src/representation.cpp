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

#include "artcong/representation.hpp"

#include <cmath>
#include <numbers>

#include "artcong/error.hpp"

namespace artcong {

RepresentationSpec RepresentationSpec::tits(const CoxeterGraph& g) {
  RepresentationSpec spec;
  spec.graph = g;
  spec.kind = RepKind::kTits;
  return spec;
}

RepresentationSpec RepresentationSpec::burau(const CoxeterGraph& g) {
  RepresentationSpec spec;
  spec.graph = g;
  spec.kind = RepKind::kBurau;
  return spec;
}

RepresentationSpec RepresentationSpec::sigma_tilde(const CoxeterGraph& g) {
  RepresentationSpec spec;
  spec.graph = g;
  spec.kind = RepKind::kBurauSpecialized;
  spec.s_val = 1.0;
  spec.t_val = -1.0;
  return spec;
}

RepresentationSpec RepresentationSpec::numeric(double tol) const {
  RepresentationSpec spec = *this;
  spec.arithmetic = Arithmetic::kNumeric;
  spec.tolerance = tol;
  return spec;
}

namespace {

void require_small(const CoxeterGraph& g) {
  if (!g.is_small()) {
    throw Error(ErrorCode::kNotSmall,
                "exact arithmetic needs labels in {2, 3, inf}; use numeric mode");
  }
}

bool is_unit(double v) { return v == 1.0 || v == -1.0; }

void require_vertex(const CoxeterGraph& g, int v) {
  if (v < 1 || v > g.rank()) {
    throw Error(ErrorCode::kBadIndex, "generator " + std::to_string(v) + " out of range 1.." +
                                          std::to_string(g.rank()));
  }
}

}  // namespace

void validate(const RepresentationSpec& spec) {
  if (spec.arithmetic == Arithmetic::kNumeric) {
    if (!(spec.tolerance > 0)) {
      throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
    }
    return;
  }
  require_small(spec.graph);
  if (spec.kind == RepKind::kBurauSpecialized && (!is_unit(spec.s_val) || !is_unit(spec.t_val))) {
    throw Error(ErrorCode::kNonUnitValue, "exact specialization needs s, t in {1, -1}");
  }
}

double two_cos(Label m) {
  if (m.is_infinite()) return 2.0;
  switch (m.value()) {
    case 1: return -2.0;
    case 2: return 0.0;
    case 3: return 1.0;
    case 4: return std::numbers::sqrt2;
    case 6: return std::numbers::sqrt3;
    default: return 2.0 * std::cos(std::numbers::pi / static_cast<double>(m.value()));
  }
}

int two_cos_small(Label m) {
  if (m.is_infinite()) return 2;
  if (m.value() == 2) return 0;
  if (m.value() == 3) return 1;
  throw Error(ErrorCode::kNotSmall, "label " + m.to_string() + " has irrational 2cos(pi/m)");
}

IntegerMatrix tits_gram(const CoxeterGraph& g) {
  require_small(g);
  const int n = g.rank();
  IntegerMatrix b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b(i, j) = i == j ? 2 : -two_cos_small(g.label(i + 1, j + 1));
    }
  }
  return b;
}

NumericMatrix tits_gram_numeric(const CoxeterGraph& g, double tolerance) {
  const int n = g.rank();
  NumericMatrix b(n, tolerance);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = i == j ? 2.0 : -two_cos(g.label(i + 1, j + 1));
  }
  return b;
}

GramMatrix build_B(const CoxeterGraph& g) {
  if (g.is_small()) return tits_gram(g);
  return tits_gram_numeric(g);
}

std::vector<long> tits_row(const CoxeterGraph& g, int j) {
  require_small(g);
  std::vector<long> r(static_cast<std::size_t>(g.rank()), 0);
  for (int k = 0; k < g.rank(); ++k) {
    r[k] = k == j ? -2 : two_cos_small(g.label(j + 1, k + 1));
  }
  return r;
}

std::vector<long> sigma_tilde_row(const CoxeterGraph& g, int j, bool inverse) {
  require_small(g);
  std::vector<long> r(static_cast<std::size_t>(g.rank()), 0);
  for (int k = 0; k < g.rank(); ++k) {
    if (k == j) continue;
    const long c = two_cos_small(g.label(j + 1, k + 1));
    const long v = k > j ? c : -c;
    r[k] = inverse ? -v : v;
  }
  return r;
}

IntegerMatrix tits_generator(const CoxeterGraph& g, int j) {
  require_vertex(g, j);
  const auto row = tits_row(g, j - 1);
  IntegerMatrix m = IntegerMatrix::identity(g.rank());
  for (int k = 0; k < g.rank(); ++k) m(j - 1, k) += row[k];
  return m;
}

NumericMatrix tits_generator_numeric(const CoxeterGraph& g, int j, double tolerance) {
  require_vertex(g, j);
  NumericMatrix m = NumericMatrix::identity(g.rank(), tolerance);
  for (int k = 0; k < g.rank(); ++k) {
    m(j - 1, k) = k == j - 1 ? -1.0 : two_cos(g.label(j, k + 1));
  }
  return m;
}

LaurentMatrix build_K(const CoxeterGraph& g) {
  require_small(g);
  const int n = g.rank();
  const auto s = LaurentPolynomial::s();
  const auto t = LaurentPolynomial::t();
  LaurentMatrix k(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        k(i, j) = LaurentPolynomial(1L) + s * t;
      } else {
        const long c = two_cos_small(g.label(i + 1, j + 1));
        if (c != 0) k(i, j) = LaurentPolynomial(-c) * (i < j ? s : t);
      }
    }
  }
  return k;
}

bool check_k_star(const CoxeterGraph& g) {
  const LaurentMatrix k = build_K(g);
  return k.star() == k.scaled(LaurentPolynomial::monomial(1, -1, -1));
}

LaurentMatrix burau_generator(const CoxeterGraph& g, int i, bool inverse) {
  require_small(g);
  require_vertex(g, i);
  const int n = g.rank();
  const int r = i - 1;
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    if (j == r) {
      m(r, j) = inverse ? LaurentPolynomial::monomial(-1, -1, -1)
                        : LaurentPolynomial::monomial(-1, 1, 1);
      continue;
    }
    const long c = two_cos_small(g.label(i, j + 1));
    if (c == 0) continue;
    // forward: s c above the diagonal, t c below; inverse divides by st
    if (j > r) {
      m(r, j) = inverse ? LaurentPolynomial::monomial(c, 0, -1) : LaurentPolynomial::monomial(c, 1, 0);
    } else {
      m(r, j) = inverse ? LaurentPolynomial::monomial(c, -1, 0) : LaurentPolynomial::monomial(c, 0, 1);
    }
  }
  return m;
}

NumericMatrix burau_generator_numeric(const CoxeterGraph& g, int i, double s_val, double t_val,
                                      bool inverse, double tolerance) {
  require_vertex(g, i);
  if (s_val == 0.0 || t_val == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "s and t must be nonzero");
  }
  const int n = g.rank();
  const int r = i - 1;
  const double st = s_val * t_val;
  NumericMatrix m = NumericMatrix::identity(n, tolerance);
  for (int j = 0; j < n; ++j) {
    double v;
    if (j == r) {
      v = -st;
    } else {
      v = two_cos(g.label(i, j + 1)) * (j > r ? s_val : t_val);
    }
    if (inverse) v = j == r ? -1.0 / st : v / st;
    m(r, j) = v;
  }
  return m;
}

IntegerMatrix burau_generator_specialized(const CoxeterGraph& g, int i, long s_val, long t_val,
                                          bool inverse) {
  if ((s_val != 1 && s_val != -1) || (t_val != 1 && t_val != -1)) {
    throw Error(ErrorCode::kNonUnitValue, "exact specialization needs s, t in {1, -1}");
  }
  require_small(g);
  require_vertex(g, i);
  const int n = g.rank();
  const int r = i - 1;
  const long st = s_val * t_val;
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    long v;
    if (j == r) {
      v = -st;
    } else {
      v = two_cos_small(g.label(i, j + 1)) * (j > r ? s_val : t_val);
    }
    if (inverse) v = j == r ? -st : v * st;  // 1/st = st for units
    m(r, j) = v;
  }
  return m;
}

LaurentMatrix braid_Zi(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw Error(ErrorCode::kBadIndex, "braid_Zi needs 2 <= n and 1 <= i <= n-1");
  }
  const int d = n - 1;
  const int r = i - 1;
  LaurentMatrix z = LaurentMatrix::identity(d);
  if (r > 0) z(r, r - 1) = LaurentPolynomial::t();
  z(r, r) = LaurentPolynomial::monomial(-1, 1, 1);
  if (r + 1 < d) z(r, r + 1) = LaurentPolynomial::s();
  return z;
}

nlohmann::json RelationReport::to_json() const {
  return {{"pass", pass}, {"checked", checked}, {"failures", failures}};
}

namespace {

std::string pair_name(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

// Alternating product g_i g_j g_i ... of length m.
template <class M>
M alternating(const M& a, const M& b, unsigned m, const M& id) {
  M out = id;
  for (unsigned k = 0; k < m; ++k) out = out * (k % 2 == 0 ? a : b);
  return out;
}

struct SamplePoint {
  double s;
  double t;
};

constexpr SamplePoint kSamplePoints[] = {{1.0, -1.0}, {1.0, 1.0}, {0.5, 2.0}, {-0.75, 1.25}};

template <class Gen, class Id, class Eq>
void braid_relations(const CoxeterGraph& g, const Gen& gen, const Id& id, const Eq& eq,
                     const std::string& tag, RelationReport& report) {
  const int n = g.rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Label m = g.label(i, j);
      if (m.is_infinite()) continue;
      ++report.checked;
      const auto lhs = alternating(gen(i), gen(j), m.value(), id());
      const auto rhs = alternating(gen(j), gen(i), m.value(), id());
      if (!eq(lhs, rhs)) {
        report.pass = false;
        report.failures.push_back(tag + "braid(" + pair_name(i, j) + ")");
      }
    }
  }
}

template <class Gen, class Id, class IsId>
void coxeter_relations(const CoxeterGraph& g, const Gen& gen, const Id& id, const IsId& is_id,
                       RelationReport& report) {
  const int n = g.rank();
  for (int i = 1; i <= n; ++i) {
    ++report.checked;
    if (!is_id(gen(i) * gen(i))) {
      report.pass = false;
      report.failures.push_back("involution(" + std::to_string(i) + ")");
    }
    for (int j = i + 1; j <= n; ++j) {
      const Label m = g.label(i, j);
      if (m.is_infinite()) continue;
      ++report.checked;
      auto prod = gen(i) * gen(j);
      auto p = id();
      for (unsigned k = 0; k < m.value(); ++k) p = p * prod;
      if (!is_id(p)) {
        report.pass = false;
        report.failures.push_back("order(" + pair_name(i, j) + ")");
      }
    }
  }
}

}  // namespace

RelationReport check_relations(const RepresentationSpec& spec) {
  validate(spec);
  RelationReport report;
  const CoxeterGraph& g = spec.graph;
  const int n = g.rank();
  const double tol = spec.tolerance;
  const bool exact = spec.arithmetic == Arithmetic::kExact;

  if (spec.kind == RepKind::kTits) {
    if (exact) {
      coxeter_relations(
          g, [&](int i) { return tits_generator(g, i); },
          [&] { return IntegerMatrix::identity(n); },
          [](const IntegerMatrix& m) { return m.is_identity(); }, report);
    } else {
      const NumericMatrix id = NumericMatrix::identity(n, tol);
      coxeter_relations(
          g, [&](int i) { return tits_generator_numeric(g, i, tol); }, [&] { return id; },
          [&](const NumericMatrix& m) { return m.approx_equal(id); }, report);
    }
    return report;
  }

  if (exact && spec.kind == RepKind::kBurau) {
    braid_relations(
        g, [&](int i) { return burau_generator(g, i); },
        [&] { return LaurentMatrix::identity(n); },
        [](const LaurentMatrix& a, const LaurentMatrix& b) { return a == b; }, "", report);
    return report;
  }
  if (exact) {
    const long sv = static_cast<long>(spec.s_val);
    const long tv = static_cast<long>(spec.t_val);
    braid_relations(
        g, [&](int i) { return burau_generator_specialized(g, i, sv, tv); },
        [&] { return IntegerMatrix::identity(n); },
        [](const IntegerMatrix& a, const IntegerMatrix& b) { return a == b; }, "", report);
    return report;
  }

  std::vector<SamplePoint> points;
  if (spec.kind == RepKind::kBurauSpecialized) {
    points.push_back({spec.s_val, spec.t_val});
  } else {
    points.assign(std::begin(kSamplePoints), std::end(kSamplePoints));
  }
  for (const auto& p : points) {
    const std::string tag = "(s=" + nlohmann::json(p.s).dump() + ",t=" +
                            nlohmann::json(p.t).dump() + ") ";
    braid_relations(
        g, [&](int i) { return burau_generator_numeric(g, i, p.s, p.t, false, tol); },
        [&] { return NumericMatrix::identity(n, tol); },
        [](const NumericMatrix& a, const NumericMatrix& b) { return a.approx_equal(b); }, tag,
        report);
  }
  return report;
}

RelationReport check_hecke(const RepresentationSpec& spec) {
  if (spec.kind != RepKind::kBurau) {
    throw Error(ErrorCode::kInvalidArgument, "the Hecke check applies to the Burau kind");
  }
  validate(spec);
  RelationReport report;
  const CoxeterGraph& g = spec.graph;
  const int n = g.rank();
  if (spec.arithmetic == Arithmetic::kExact) {
    const LaurentPolynomial st = LaurentPolynomial::monomial(1, 1, 1);
    const LaurentMatrix id = LaurentMatrix::identity(n);
    for (int i = 1; i <= n; ++i) {
      ++report.checked;
      const LaurentMatrix sg = burau_generator(g, i);
      const LaurentMatrix q = sg * sg + sg.scaled(st - 1L) - id.scaled(st);
      const bool inverse_ok = sg * burau_generator(g, i, true) == id;
      if (!q.is_zero() || !inverse_ok) {
        report.pass = false;
        report.failures.push_back("hecke(" + std::to_string(i) + ")");
      }
    }
    return report;
  }
  for (const auto& p : kSamplePoints) {
    const double st = p.s * p.t;
    for (int i = 1; i <= n; ++i) {
      ++report.checked;
      const NumericMatrix sg = burau_generator_numeric(g, i, p.s, p.t, false, spec.tolerance);
      NumericMatrix q = sg * sg;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          q(r, c) += (st - 1.0) * sg(r, c) - (r == c ? st : 0.0);
        }
      }
      if (q.distance(NumericMatrix(n, spec.tolerance)) > spec.tolerance) {
        report.pass = false;
        report.failures.push_back("hecke(" + std::to_string(i) + ") at s=" +
                                  nlohmann::json(p.s).dump() + ",t=" +
                                  nlohmann::json(p.t).dump());
      }
    }
  }
  return report;
}

}  // namespace artcong
