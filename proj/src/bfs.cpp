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

#include "artcong/bfs.hpp"

#include <cstring>
#include <limits>
#include <thread>

#include "artcong/error.hpp"
#include "artcong/matrix.hpp"

namespace artcong {

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kBlock = 1 << 14;

std::uint32_t fold(std::uint64_t h) { return static_cast<std::uint32_t>(h ^ (h >> 32)); }

}  // namespace

// KeySet -------------------------------------------------------------------

KeySet::KeySet() : offsets_{0}, table_(1024, kEmpty) {}

std::uint64_t KeySet::hash(std::span<const std::uint8_t> key) {
  std::uint64_t h = 0x243F6A8885A308D3ULL ^ (key.size() * 0x9E3779B97F4A7C15ULL);
  std::size_t i = 0;
  for (; i + 8 <= key.size(); i += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, key.data() + i, 8);
    h = (h ^ chunk) * 0x9E3779B97F4A7C15ULL;
    h ^= h >> 29;
  }
  std::uint64_t tail = 0;
  for (std::size_t b = 0; i < key.size(); ++i, ++b) tail |= static_cast<std::uint64_t>(key[i]) << (8 * b);
  h = (h ^ tail) * 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 31;
  h *= 0x94D049BB133111EBULL;
  h ^= h >> 29;
  return h;
}

std::size_t KeySet::probe(std::span<const std::uint8_t> key, std::uint64_t h) const {
  const std::uint32_t h32 = fold(h);
  const std::size_t mask = table_.size() - 1;
  std::size_t pos = h32 & mask;
  while (true) {
    const std::uint32_t slot = table_[pos];
    if (slot == kEmpty) return pos;
    if (hashes_[slot] == h32) {
      const auto other = this->key(slot);
      if (other.size() == key.size() &&
          (key.empty() || std::memcmp(other.data(), key.data(), key.size()) == 0)) {
        return pos;
      }
    }
    pos = (pos + 1) & mask;
  }
}

void KeySet::grow() {
  std::vector<std::uint32_t> next(table_.size() * 2, kEmpty);
  const std::size_t mask = next.size() - 1;
  for (std::uint32_t idx = 0; idx < hashes_.size(); ++idx) {
    std::size_t pos = hashes_[idx] & mask;
    while (next[pos] != kEmpty) pos = (pos + 1) & mask;
    next[pos] = idx;
  }
  table_ = std::move(next);
}

std::pair<std::uint32_t, bool> KeySet::insert(std::span<const std::uint8_t> key) {
  const std::uint64_t h = hash(key);
  std::size_t pos = probe(key, h);
  if (table_[pos] != kEmpty) return {table_[pos], false};
  if (size() >= kEmpty - 1) throw Error(ErrorCode::kCapExceeded, "key set is full");
  const auto idx = static_cast<std::uint32_t>(size());
  arena_.insert(arena_.end(), key.begin(), key.end());
  offsets_.push_back(arena_.size());
  hashes_.push_back(fold(h));
  table_[pos] = idx;
  if (2 * size() > table_.size()) grow();
  return {idx, true};
}

std::optional<std::uint32_t> KeySet::find(std::span<const std::uint8_t> key) const {
  const std::size_t pos = probe(key, hash(key));
  if (table_[pos] == kEmpty) return std::nullopt;
  return table_[pos];
}

std::size_t KeySet::memory_bytes() const {
  return arena_.capacity() + offsets_.capacity() * sizeof(std::uint64_t) +
         hashes_.capacity() * sizeof(std::uint32_t) + table_.capacity() * sizeof(std::uint32_t);
}

// Keys ---------------------------------------------------------------------

std::vector<std::uint8_t> closure_key(std::span<const std::int64_t> entries, std::uint64_t modulus) {
  std::vector<std::uint8_t> out;
  if (modulus == 0) {
    pack_integers(entries, out);
    return out;
  }
  std::vector<std::uint64_t> residues(entries.begin(), entries.end());
  pack_residues(residues, modulus, out);
  return out;
}

namespace {

void decode(std::span<const std::uint8_t> key, std::uint64_t modulus, std::span<std::int64_t> out,
            std::vector<std::uint64_t>& scratch) {
  if (modulus == 0) {
    if (!unpack_integers(key, out)) throw Error(ErrorCode::kOverflow, "entry exceeds int64");
    return;
  }
  scratch.resize(out.size());
  unpack_residues(key, modulus, scratch);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::int64_t>(scratch[i]);
}

// M <- M (I + e_row r^T): column `row` of M times r added to every row.
void apply(std::span<std::int64_t> m, int n, const RankOneGenerator& g, std::uint64_t modulus) {
  for (int i = 0; i < n; ++i) {
    const std::int64_t x = m[static_cast<std::size_t>(i) * n + g.row];
    if (x == 0) continue;
    std::int64_t* row = m.data() + static_cast<std::size_t>(i) * n;
    if (modulus != 0) {
      const auto mod = static_cast<__int128>(modulus);
      for (int j = 0; j < n; ++j) {
        if (g.r[j] == 0) continue;
        __int128 v = row[j] + static_cast<__int128>(x) * g.r[j];
        v %= mod;
        if (v < 0) v += mod;
        row[j] = static_cast<std::int64_t>(v);
      }
    } else {
      for (int j = 0; j < n; ++j) {
        if (g.r[j] == 0) continue;
        std::int64_t prod;
        if (__builtin_mul_overflow(x, g.r[j], &prod) || __builtin_add_overflow(row[j], prod, &row[j])) {
          throw Error(ErrorCode::kOverflow, "integer entry exceeds int64 during closure");
        }
      }
    }
  }
}

struct Candidates {
  std::vector<std::uint8_t> bytes;
  std::vector<std::size_t> ends;
};

void expand_range(const Closure& c, const KeySet& keys, std::uint32_t begin, std::uint32_t end,
                  const std::vector<RankOneGenerator>& gens, Candidates& out) {
  const int n = c.dim();
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::int64_t> base(cells);
  std::vector<std::int64_t> work(cells);
  std::vector<std::uint64_t> scratch;
  std::vector<std::uint64_t> residues(cells);
  for (std::uint32_t idx = begin; idx < end; ++idx) {
    decode(keys.key(idx), c.modulus(), base, scratch);
    for (const auto& g : gens) {
      work = base;
      apply(work, n, g, c.modulus());
      if (c.modulus() == 0) {
        pack_integers(work, out.bytes);
      } else {
        for (std::size_t i = 0; i < cells; ++i) residues[i] = static_cast<std::uint64_t>(work[i]);
        pack_residues(residues, c.modulus(), out.bytes);
      }
      out.ends.push_back(out.bytes.size());
    }
  }
}

}  // namespace

std::vector<int> Closure::word(std::uint32_t index) const {
  std::vector<int> out;
  while (parent_[index] != kNoParent) {
    out.push_back(via_[index]);
    index = parent_[index];
  }
  return {out.rbegin(), out.rend()};
}

std::vector<std::int64_t> Closure::matrix(std::uint32_t index) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_) * n_);
  std::vector<std::uint64_t> scratch;
  decode(keys_.key(index), modulus_, out, scratch);
  return out;
}

std::optional<std::uint32_t> Closure::find(std::span<const std::int64_t> entries) const {
  return keys_.find(closure_key(entries, modulus_));
}

Closure close_under(int n, const std::vector<RankOneGenerator>& gens,
                    const ClosureOptions& options) {
  if (gens.size() > 255) throw Error(ErrorCode::kInvalidArgument, "too many generators");
  if (options.modulus == 1) throw Error(ErrorCode::kBadModulus, "modulus must be >= 2");
  if (options.cap == 0) throw Error(ErrorCode::kInvalidArgument, "cap must be >= 1");
  for (const auto& g : gens) {
    if (g.row < 0 || g.row >= n || static_cast<int>(g.r.size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "generator does not match dimension");
    }
  }
  Closure c;
  c.n_ = n;
  c.modulus_ = options.modulus;
  std::vector<std::int64_t> id(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = 1;
  c.keys_.insert(closure_key(id, options.modulus));
  c.parent_.push_back(kNoParent);
  c.via_.push_back(0);
  c.layers_.push_back(0);

  const int threads = std::max(1, options.threads);
  std::uint32_t layer_begin = 0;
  while (true) {
    const auto layer_end = static_cast<std::uint32_t>(c.size());
    for (std::uint32_t block = layer_begin; block < layer_end;) {
      const std::uint32_t block_end =
          static_cast<std::uint32_t>(std::min<std::size_t>(layer_end, block + kBlock));
      const std::uint32_t span = block_end - block;
      const int workers = std::min<int>(threads, static_cast<int>((span + 255) / 256));
      std::vector<Candidates> parts(static_cast<std::size_t>(std::max(1, workers)));
      std::vector<std::uint32_t> bounds;
      for (int w = 0; w <= std::max(1, workers); ++w) {
        bounds.push_back(block + static_cast<std::uint32_t>(
                                     static_cast<std::uint64_t>(span) * w / std::max(1, workers)));
      }
      if (workers <= 1) {
        expand_range(c, c.keys_, block, block_end, gens, parts[0]);
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            expand_range(c, c.keys_, bounds[w], bounds[w + 1], gens, parts[w]);
          });
        }
        for (auto& t : pool) t.join();
      }
      // Merge in (parent, generator) order so the result is independent of
      // the worker count.
      std::uint32_t parent = block;
      for (std::size_t w = 0; w < parts.size(); ++w) {
        const auto& part = parts[w];
        std::size_t start = 0;
        for (std::size_t k = 0; k < part.ends.size(); ++k) {
          const std::size_t end = part.ends[k];
          const std::span<const std::uint8_t> key(part.bytes.data() + start, end - start);
          start = end;
          const std::uint32_t p = parent + static_cast<std::uint32_t>(k / gens.size());
          auto [idx, inserted] = c.keys_.insert(key);
          if (inserted) {
            c.parent_.push_back(p);
            c.via_.push_back(static_cast<std::uint8_t>(k % gens.size()));
            if (c.size() > options.cap) {
              throw Error(ErrorCode::kCapExceeded,
                          "closure exceeded cap of " + std::to_string(options.cap) + " elements");
            }
          }
        }
        parent += static_cast<std::uint32_t>(part.ends.size() / std::max<std::size_t>(1, gens.size()));
      }
      block = block_end;
    }
    if (c.size() == layer_end) break;
    c.layers_.push_back(layer_end);
    layer_begin = layer_end;
  }
  c.layers_.push_back(static_cast<std::uint32_t>(c.size()));
  return c;
}

}  // namespace artcong
