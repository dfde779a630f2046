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

#include "artcong/matrix.hpp"

#include <cmath>
#include <limits>

#include "artcong/error.hpp"

namespace artcong {

namespace {

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

// IntegerMatrix ------------------------------------------------------------

IntegerMatrix::IntegerMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(static_cast<int>(rows.size())) {
  a_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : rows) {
    require_same_dim(static_cast<int>(row.size()), n_);
    for (long v : row) a_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  require_same_dim(n_, rhs.n_);
  IntegerMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const mpz_class& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += x * rhs(k, j);
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
  require_same_dim(n_, rhs.n_);
  IntegerMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
  require_same_dim(n_, rhs.n_);
  IntegerMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

IntegerMatrix IntegerMatrix::operator-() const {
  IntegerMatrix out(*this);
  for (auto& v : out.a_) v = -v;
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

IntegerMatrix IntegerMatrix::pow(unsigned long k) const {
  IntegerMatrix result = identity(n_);
  IntegerMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool IntegerMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

mpz_class IntegerMatrix::det() const {
  // Bareiss fraction-free elimination.
  if (n_ == 0) return 1;
  std::vector<mpz_class> m = a_;
  auto at = [&](int r, int c) -> mpz_class& { return m[static_cast<std::size_t>(r) * n_ + c]; };
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j));
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

namespace {

// Row index r when a = I + N with N supported on row r and N^2 = 0.
int single_row_unipotent(const IntegerMatrix& a) {
  const int n = a.dim();
  int row = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool off = a(i, j) != (i == j ? 1 : 0);
      if (!off) continue;
      if (row >= 0 && row != i) return -1;
      row = i;
    }
  }
  if (row < 0) return -2;  // identity
  if (a(row, row) != 1) return -1;  // N(r,r) != 0 breaks N^2 = 0
  return row;
}

}  // namespace

IntegerMatrix inverse(const IntegerMatrix& a) {
  const int n = a.dim();
  const int row = single_row_unipotent(a);
  if (row == -2) return a;
  if (row >= 0) {
    IntegerMatrix out = a;
    for (int j = 0; j < n; ++j) {
      if (j != row) out(row, j) = -a(row, j);
    }
    return out;
  }
  const mpz_class d = a.det();
  if (d != 1 && d != -1) {
    throw Error(ErrorCode::kNotUnimodular, "matrix has determinant " + d.get_str());
  }
  // inverse = adj(a) / det; adj(a)(j, i) = (-1)^(i+j) minor(i, j)
  IntegerMatrix out(n);
  if (n == 1) {
    out(0, 0) = d;
    return out;
  }
  IntegerMatrix minor(n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      mpz_class cof = minor.det();
      if ((i + j) % 2 != 0) cof = -cof;
      out(j, i) = cof * d;  // dividing by +-1 is multiplying by it
    }
  }
  return out;
}

// ResidueMatrix ------------------------------------------------------------

ResidueMatrix::ResidueMatrix(std::uint64_t modulus, int n)
    : m_(modulus), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  if (modulus < 2) throw Error(ErrorCode::kBadModulus, "modulus must be >= 2");
}

ResidueMatrix ResidueMatrix::identity(std::uint64_t modulus, int n) {
  ResidueMatrix m(modulus, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ResidueMatrix ResidueMatrix::operator*(const ResidueMatrix& rhs) const {
  if (m_ != rhs.m_) {
    throw Error(ErrorCode::kModulusMismatch, "cannot multiply matrices mod " +
                                                 std::to_string(m_) + " and mod " +
                                                 std::to_string(rhs.m_));
  }
  require_same_dim(n_, rhs.n_);
  ResidueMatrix out(m_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      unsigned __int128 acc = 0;
      for (int k = 0; k < n_; ++k) {
        acc += static_cast<unsigned __int128>((*this)(i, k)) * rhs(k, j) % m_;
      }
      out.a_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint64_t>(acc % m_);
    }
  }
  return out;
}

ResidueMatrix ResidueMatrix::pow(unsigned long k) const {
  ResidueMatrix result = identity(m_, n_);
  ResidueMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool ResidueMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> ResidueMatrix::key() const {
  std::vector<std::uint8_t> out;
  pack_residues(a_, m_, out);
  return out;
}

ResidueMatrix reduce_mod(const IntegerMatrix& a, std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::kBadModulus, "modulus must be >= 2");
  ResidueMatrix out(m, a.dim());
  const mpz_class mod(std::to_string(m));
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), mod.get_mpz_t());
      out.set(i, j, std::stoull(r.get_str()));
    }
  }
  return out;
}

// NumericMatrix ------------------------------------------------------------

NumericMatrix::NumericMatrix(int n, double tolerance)
    : n_(n), tol_(tolerance), a_(static_cast<std::size_t>(n) * n, 0.0) {
  if (!(tolerance > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
}

NumericMatrix NumericMatrix::identity(int n, double tolerance) {
  NumericMatrix m(n, tolerance);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

NumericMatrix NumericMatrix::operator*(const NumericMatrix& rhs) const {
  require_same_dim(n_, rhs.n_);
  NumericMatrix out(n_, tol_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const double x = (*this)(i, k);
      if (x == 0.0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += x * rhs(k, j);
    }
  }
  return out;
}

NumericMatrix NumericMatrix::operator-() const {
  NumericMatrix out(*this);
  for (auto& v : out.a_) v = -v;
  return out;
}

NumericMatrix NumericMatrix::pow(unsigned long k) const {
  NumericMatrix result = identity(n_, tol_);
  NumericMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

double NumericMatrix::distance(const NumericMatrix& other) const {
  require_same_dim(n_, other.n_);
  double d = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) d = std::max(d, std::fabs(a_[i] - other.a_[i]));
  return d;
}

// Keys ---------------------------------------------------------------------

int residue_entry_width(std::uint64_t m) {
  if (m == 2) return 0;
  int w = 1;
  std::uint64_t top = m - 1;
  while (w < 8 && (top >> (8 * w)) != 0) ++w;
  return w;
}

std::size_t residue_key_size(std::uint64_t m, int n) {
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  const int w = residue_entry_width(m);
  return w == 0 ? (cells + 7) / 8 : cells * static_cast<std::size_t>(w);
}

void pack_residues(std::span<const std::uint64_t> entries, std::uint64_t m,
                   std::vector<std::uint8_t>& out) {
  const int w = residue_entry_width(m);
  if (w == 0) {
    const std::size_t base = out.size();
    out.resize(base + (entries.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] & 1U) out[base + i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
    }
    return;
  }
  for (std::uint64_t v : entries) {
    for (int b = 0; b < w; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  }
}

void unpack_residues(std::span<const std::uint8_t> key, std::uint64_t m,
                     std::span<std::uint64_t> entries) {
  const int w = residue_entry_width(m);
  if (w == 0) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = (key[i / 8] >> (i % 8)) & 1U;
    return;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::uint64_t v = 0;
    for (int b = 0; b < w; ++b) v |= static_cast<std::uint64_t>(key[i * w + b]) << (8 * b);
    entries[i] = v;
  }
}

namespace {

constexpr std::uint8_t kBigWidth = 0xFF;

std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t u) {
  return static_cast<std::int64_t>(u >> 1) ^ -static_cast<std::int64_t>(u & 1U);
}

}  // namespace

void pack_integers(std::span<const std::int64_t> entries, std::vector<std::uint8_t>& out) {
  std::uint64_t top = 0;
  for (std::int64_t v : entries) top |= zigzag(v);
  int w = 1;
  while (w < 8 && (top >> (8 * w)) != 0) ++w;
  out.push_back(static_cast<std::uint8_t>(w));
  for (std::int64_t v : entries) {
    const std::uint64_t z = zigzag(v);
    for (int b = 0; b < w; ++b) out.push_back(static_cast<std::uint8_t>(z >> (8 * b)));
  }
}

bool unpack_integers(std::span<const std::uint8_t> key, std::span<std::int64_t> entries) {
  if (key.empty() || key[0] == kBigWidth) return false;
  const int w = key[0];
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::uint64_t z = 0;
    for (int b = 0; b < w; ++b) z |= static_cast<std::uint64_t>(key[1 + i * w + b]) << (8 * b);
    entries[i] = unzigzag(z);
  }
  return true;
}

std::vector<std::uint8_t> integer_key(const IntegerMatrix& a) {
  std::vector<std::uint8_t> out;
  std::vector<std::int64_t> small;
  small.reserve(a.entries().size());
  bool fits = true;
  for (const mpz_class& v : a.entries()) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) {
      fits = false;
      break;
    }
    small.push_back(v.get_si());
  }
  if (fits) {
    pack_integers(small, out);
    return out;
  }
  out.push_back(kBigWidth);
  for (const mpz_class& v : a.entries()) {
    const std::size_t count = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    std::vector<std::uint8_t> mag(count == 0 ? 1 : count, 0);
    std::size_t written = 0;
    mpz_export(mag.data(), &written, -1, 1, 0, 0, v.get_mpz_t());
    mag.resize(written);
    out.push_back(v < 0 ? 1 : 0);
    const auto len = static_cast<std::uint32_t>(mag.size());
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(len >> (8 * b)));
    out.insert(out.end(), mag.begin(), mag.end());
  }
  return out;
}

// JSON ---------------------------------------------------------------------

nlohmann::json to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
  return v.get_str();
}

nlohmann::json to_json(const IntegerMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const ResidueMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const NumericMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace artcong
