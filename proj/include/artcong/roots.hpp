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

// ADE root systems, reflections in the highest root, translations of the
// affine Weyl group, and the central-element displays of affine types.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "artcong/graph.hpp"
#include "artcong/matrix.hpp"
#include "artcong/report.hpp"
#include "artcong/word.hpp"

namespace artcong {

using RootVector = std::vector<long>;

struct RootSystem {
  CoxeterGraph graph{1};
  std::string type;
  /// Positive roots by height then coordinates, followed by their negatives.
  std::vector<RootVector> roots;
  RootVector highest_root;
  IntegerMatrix gram;

  std::size_t positive_count() const { return roots.size() / 2; }
  nlohmann::json to_json() const;
};

/// Throws NotADE unless g is a connected A, D or E graph.
RootSystem enumerate_roots(const CoxeterGraph& g);

/// Simple reflection s_i (1-based) in simple-root coordinates.
RootVector reflect(const IntegerMatrix& gram, int i, const RootVector& v);

/// Table word for the reflection in the highest root, unvalidated.
Word table_s_theta_word(const CoxeterGraph& g);
/// True when the Tits image of w is the reflection in the highest root.
bool is_s_theta(const CoxeterGraph& g, const Word& w);
/// Table word after validation. Throws NotADE, TableInconsistent.
Word s_theta_word(const CoxeterGraph& g);
/// w^-1 s_i w for the shortest conjugator w; always valid.
Word derived_s_theta_word(const CoxeterGraph& g);

/// Shortest w with w(theta) = alpha_i, searching the root orbit.
Word find_conjugator(const CoxeterGraph& g, int i);

struct TranslationElement {
  int index = 0;
  Word conjugator;
  Word s_theta;
  std::string s_theta_source;  // "table" or "derived"
  /// conjugator . s0 . s_theta . conjugator^-1, in the affine graph.
  Word full_word;
  IntegerMatrix matrix;
  bool unipotent = false;

  nlohmann::json to_json(const CoxeterGraph& affine) const;
};

/// Throws NotAffineADE unless g is a catalog affine graph of type A, D or E.
TranslationElement translation_word(const CoxeterGraph& g_affine, int i);
/// All translations are unipotent and commute pairwise.
Report translations_commute(const CoxeterGraph& g_affine);

/// rho(s0 s_theta)^m = I mod m with no smaller positive power (for ~A1 the
/// minimal power is m / gcd(m, 2)).
Report translation_order_check(const CoxeterGraph& g_affine, std::uint64_t m);

struct A1TildeLevel {
  std::uint64_t level = 0;
  unsigned exponent = 0;
  Word word;
  bool validated = false;
  nlohmann::json to_json() const;
};

/// Generator (s0 s1)^k of the level-m subgroup of ~A1. Throws BadLevel for m < 3.
A1TildeLevel a1_tilde_level(std::uint64_t m);

/// Names "~D<2n>", "~E7", "~E8". Throws UnknownType.
Report central_element_check(const std::string& type);

}  // namespace artcong
