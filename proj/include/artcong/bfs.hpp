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

// Breadth-first closure of a matrix monoid generated by rank-one updates of
// the identity, over Z or Z/m, with a compact byte-keyed visited set.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace artcong {

/// Insert-only set of byte strings. Each key gets a dense index in insertion
/// order.
class KeySet {
 public:
  KeySet();

  /// Returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(std::span<const std::uint8_t> key);
  std::optional<std::uint32_t> find(std::span<const std::uint8_t> key) const;

  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const std::uint8_t> key(std::uint32_t index) const {
    return {arena_.data() + offsets_[index], arena_.data() + offsets_[index + 1]};
  }
  /// Bytes held by the arena, offsets and table.
  std::size_t memory_bytes() const;

  static std::uint64_t hash(std::span<const std::uint8_t> key);

 private:
  void grow();
  std::size_t probe(std::span<const std::uint8_t> key, std::uint64_t h) const;

  std::vector<std::uint8_t> arena_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> hashes_;
  std::vector<std::uint32_t> table_;
};

/// Generator I + e_row * r^T.
struct RankOneGenerator {
  int row = 0;
  std::vector<std::int64_t> r;
};

struct ClosureOptions {
  /// 0 means exact integers.
  std::uint64_t modulus = 0;
  std::size_t cap = 10'000'000;
  int threads = 1;
};

class Closure {
 public:
  int dim() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  std::size_t size() const { return keys_.size(); }
  const KeySet& keys() const { return keys_; }
  /// Start index of each BFS layer, plus size() at the end.
  const std::vector<std::uint32_t>& layers() const { return layers_; }

  /// Generator indices of the stored shortest word, left to right.
  std::vector<int> word(std::uint32_t index) const;
  /// Row-major entries (residues, or integers).
  std::vector<std::int64_t> matrix(std::uint32_t index) const;
  std::optional<std::uint32_t> find(std::span<const std::int64_t> entries) const;

 private:
  friend Closure close_under(int n, const std::vector<RankOneGenerator>& gens,
                             const ClosureOptions& options);
  int n_ = 0;
  std::uint64_t modulus_ = 0;
  KeySet keys_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> via_;
  std::vector<std::uint32_t> layers_;
};

/// Closure of {I} under right multiplication by the generators. The stored
/// word of each element is the lexicographically least among its shortest
/// words. Throws CapExceeded when more than cap elements appear, Overflow if
/// an integer entry leaves int64.
Closure close_under(int n, const std::vector<RankOneGenerator>& gens,
                    const ClosureOptions& options);

/// Canonical key of a row-major matrix as used by close_under.
std::vector<std::uint8_t> closure_key(std::span<const std::int64_t> entries, std::uint64_t modulus);

}  // namespace artcong
