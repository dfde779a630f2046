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

// Principal congruence subgroups of small Artin and Coxeter groups: membership,
// quotient images in GL(n, Z/m), and the verifiers built on them.

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include <json.hpp>

#include "artcong/bfs.hpp"
#include "artcong/engine.hpp"
#include "artcong/graph.hpp"
#include "artcong/report.hpp"
#include "artcong/word.hpp"

namespace artcong {

enum class GroupKind { kArtin, kCoxeter };

struct CongruenceQuery {
  CoxeterGraph graph{1};
  GroupKind kind = GroupKind::kArtin;
  std::uint64_t level = 2;
};

/// True iff the word's image is the identity mod the level. Throws NotSmall,
/// BadIndex, InverseInCoxeterMode, BadModulus.
bool member(const CongruenceQuery& q, const Word& w);

struct SubgroupImage {
  CongruenceQuery query;
  std::size_t order = 0;
  bool abelian = false;
  Closure closure;

  nlohmann::json to_json() const;
};

/// BFS closure of the generator images mod the level. Throws CapExceeded.
SubgroupImage image_order(const CongruenceQuery& q, std::size_t cap = kDefaultCap, int threads = 1);

struct ImageSummary {
  std::size_t order = 0;
  bool abelian = false;
  bool cached = false;
};

/// Persistent store for image orders, consulted before running a closure.
class ImageStore {
 public:
  virtual ~ImageStore() = default;
  virtual std::optional<ImageSummary> get(const CongruenceQuery& q, std::size_t cap) = 0;
  virtual void put(const CongruenceQuery& q, std::size_t cap, const ImageSummary& s) = 0;
};

/// image_order without the closure; hits `store` first when given.
ImageSummary image_summary(const CongruenceQuery& q, std::size_t cap = kDefaultCap, int threads = 1,
                           ImageStore* store = nullptr);

struct SamplingOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0xC0C0;
  std::size_t max_length = 20;
};

/// Uniform random artin word with letters +-1..n (or offset+1..offset+n).
Word random_artin_word(std::mt19937_64& rng, int n, std::size_t max_length, int offset = 0);

/// Conjugates w a_i^m w^-1 lie at level m, and at level 2m when the graph is
/// right-angled.
Report verify_normal_closure(const CoxeterGraph& g, std::uint64_t m, const SamplingOptions& opt = {});

/// |Im sigma_2| = |W| / |Z(W)| and the central elements die mod 2. Throws
/// NotSpherical, and NotSmall for spherical graphs outside A, D, E.
Report verify_level2_spherical(const CoxeterGraph& g, std::size_t cap = kDefaultCap, int threads = 1,
    ImageStore* store = nullptr);

/// |Im sigma_4| = 2^n, abelian, and sigma_4(a_i)^2 = I. Throws
/// HypothesisViolated unless right-angled without isolated vertices.
Report verify_level4_raag(const CoxeterGraph& g, std::size_t cap = kDefaultCap, int threads = 1,
    ImageStore* store = nullptr);

struct CommutatorResult {
  IntegerMatrix direct;
  IntegerMatrix formula;
  bool match = false;
  nlohmann::json to_json() const;
};

/// sigma-tilde of a_k a_l a_k^-1 a_l^-1, directly and from the closed-form
/// entries. Vertices are 1-based. Throws BadIndex.
CommutatorResult commutator_matrix(const CoxeterGraph& g, int k, int l);

/// Membership of w1 w2 in the union matches membership of each block.
Report verify_direct_sum(const CoxeterGraph& g1, const CoxeterGraph& g2, std::uint64_t m,
                         const SamplingOptions& opt = {});

/// If w is at level m it is at every level dividing m.
Report divisor_containment(const CoxeterGraph& g, const Word& w, std::uint64_t m);
/// The same over sampled words, half of them known level-m elements.
Report sample_divisor_containment(const CoxeterGraph& g, std::uint64_t m,
                                  const SamplingOptions& opt = {});

/// |Im sigma_2k| / |Im sigma_k| = |Im sigma_2| for odd k >= 3.
Report oddk_quotient_check(const CoxeterGraph& g, std::uint64_t k, std::size_t cap = kDefaultCap,
                           int threads = 1, ImageStore* store = nullptr);

/// Compares |Im sigma_2| with |Im rho_2|. Always status probe.
Report level2_conjecture_probe(const CoxeterGraph& g, std::size_t cap = kDefaultCap, int threads = 1,
    ImageStore* store = nullptr);

/// sigma-tilde of the center generator is +-I, and I for odd rank. Non-small
/// graphs are evaluated numerically. Throws NotSpherical, NotConnected.
Report center_image_check(const CoxeterGraph& g);

}  // namespace artcong
