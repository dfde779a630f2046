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

// Tits and generalised Burau representations built from a Coxeter graph.
// Matrices act on column vectors; every generator image differs from the
// identity in a single row.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "artcong/graph.hpp"
#include "artcong/laurent.hpp"
#include "artcong/matrix.hpp"

namespace artcong {

enum class RepKind { kTits, kBurau, kBurauSpecialized };
enum class Arithmetic { kExact, kNumeric };

struct RepresentationSpec {
  CoxeterGraph graph{1};
  RepKind kind = RepKind::kTits;
  Arithmetic arithmetic = Arithmetic::kExact;
  double tolerance = 1e-9;
  /// Evaluation point for kBurauSpecialized. Exact mode needs units.
  double s_val = 1.0;
  double t_val = -1.0;

  static RepresentationSpec tits(const CoxeterGraph& g);
  static RepresentationSpec burau(const CoxeterGraph& g);
  /// sigma-tilde: Burau at s = 1, t = -1.
  static RepresentationSpec sigma_tilde(const CoxeterGraph& g);
  /// Same kind, numeric arithmetic.
  RepresentationSpec numeric(double tol = 1e-9) const;
};

/// Throws NotSmall or NonUnitValue when the spec asks for exact arithmetic it
/// cannot provide.
void validate(const RepresentationSpec& spec);

/// 2 cos(pi / m) with infinity mapped to 2.
double two_cos(Label m);
/// Same, exact for labels 2, 3 and infinity. Throws NotSmall otherwise.
int two_cos_small(Label m);

/// 2B. Exact for small graphs.
IntegerMatrix tits_gram(const CoxeterGraph& g);
NumericMatrix tits_gram_numeric(const CoxeterGraph& g, double tolerance = 1e-9);
using GramMatrix = std::variant<IntegerMatrix, NumericMatrix>;
/// Exact 2B when small, numeric otherwise.
GramMatrix build_B(const CoxeterGraph& g);

/// Row j (0-based) of N for a generator I + e_j r. Entries are exact ints.
std::vector<long> tits_row(const CoxeterGraph& g, int j);
std::vector<long> sigma_tilde_row(const CoxeterGraph& g, int j, bool inverse);

/// Vertices are 1-based.
IntegerMatrix tits_generator(const CoxeterGraph& g, int j);
NumericMatrix tits_generator_numeric(const CoxeterGraph& g, int j, double tolerance = 1e-9);

LaurentMatrix build_K(const CoxeterGraph& g);
/// K*, compared against s^-1 t^-1 K.
bool check_k_star(const CoxeterGraph& g);

LaurentMatrix burau_generator(const CoxeterGraph& g, int i, bool inverse = false);
/// Burau generator evaluated at real s, t (any labels).
NumericMatrix burau_generator_numeric(const CoxeterGraph& g, int i, double s_val, double t_val,
                                      bool inverse, double tolerance = 1e-9);
/// Burau generator at s, t in {1, -1} computed directly.
IntegerMatrix burau_generator_specialized(const CoxeterGraph& g, int i, long s_val, long t_val,
                                          bool inverse = false);

/// The (n-1) x (n-1) braid matrix Z_i on n strands.
LaurentMatrix braid_Zi(int n, int i);

struct RelationReport {
  bool pass = true;
  int checked = 0;
  std::vector<std::string> failures;
  nlohmann::json to_json() const;
};

/// Tits: involutions and (r_i r_j)^m = I. Burau kinds: braid relations.
RelationReport check_relations(const RepresentationSpec& spec);
/// sigma^2 + (st - 1) sigma - st I = 0 for every generator. Needs kind burau.
RelationReport check_hecke(const RepresentationSpec& spec);

}  // namespace artcong
