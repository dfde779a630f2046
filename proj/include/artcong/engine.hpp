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

// Word evaluation, finite Coxeter group enumeration, longest element and the
// Garside element.

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <json.hpp>

#include "artcong/bfs.hpp"
#include "artcong/graph.hpp"
#include "artcong/matrix.hpp"
#include "artcong/representation.hpp"
#include "artcong/word.hpp"

namespace artcong {

inline constexpr std::size_t kDefaultCap = 10'000'000;

using Evaluated = std::variant<IntegerMatrix, LaurentMatrix, NumericMatrix>;

/// Left-to-right product of generator images. Throws BadIndex, and
/// InverseInCoxeterMode for inverse letters under the Tits kind.
Evaluated eval_word(const RepresentationSpec& spec, const Word& w);
nlohmann::json evaluated_to_json(const Evaluated& e);

/// Exact images only (Tits, or Burau specialized at units).
IntegerMatrix eval_word_exact(const RepresentationSpec& spec, const Word& w);
/// Same product computed in Z/m.
ResidueMatrix eval_word_mod(const RepresentationSpec& spec, const Word& w, std::uint64_t m);

/// Moves the affine vertex (stored last) to the front. Identity on graphs
/// without an affine tag.
IntegerMatrix to_display_order(const IntegerMatrix& a, const CoxeterGraph& g);

/// Rank-one generators for the closure engine.
std::vector<RankOneGenerator> tits_generators(const CoxeterGraph& g);
std::vector<RankOneGenerator> sigma_tilde_generators(const CoxeterGraph& g, bool with_inverses);

struct GroupEnumeration {
  CoxeterGraph graph{1};
  std::size_t order = 0;
  Word longest_word;
  std::vector<Word> center_words;
  Closure closure;

  /// Stored shortest word of element `index`.
  Word word(std::uint32_t index) const;
  nlohmann::json to_json() const;
};

/// BFS over exact Tits matrices. Throws NotSmall, CapExceeded.
GroupEnumeration enumerate_group(const CoxeterGraph& g, std::size_t cap = kDefaultCap,
                                 int threads = 1);

/// Lexicographically least reduced word of w0, by greedy descent. Works in
/// numeric arithmetic for non-small graphs. Throws NotSpherical.
Word longest_element(const CoxeterGraph& g);

struct GarsideDelta {
  /// Delta as an artin word.
  Word delta;
  /// True when the center is generated by Delta^2 rather than Delta.
  bool squared = false;
  Word center_generator() const { return squared ? power(delta, 2) : delta; }
};

/// Throws NotSpherical, NotConnected.
GarsideDelta garside_delta(const CoxeterGraph& g);

}  // namespace artcong
