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

// Exact integer, modular and floating matrices, plus the packed byte keys
// used by breadth-first enumeration.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace artcong {

class ResidueMatrix;

/// Square matrix over Z with arbitrary-precision entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(int n);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(int n);

  int dim() const { return n_; }
  mpz_class& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const mpz_class& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }
  std::span<const mpz_class> entries() const { return a_; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-() const;
  IntegerMatrix transpose() const;
  IntegerMatrix pow(unsigned long k) const;

  bool is_identity() const;
  mpz_class det() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<mpz_class> a_;
};

/// Exact inverse of a unimodular matrix. Matrices of the form I + N with N
/// supported on one row and N^2 = 0 are inverted as I - N; everything else
/// goes through the adjugate. Throws NotUnimodular unless det = +-1.
IntegerMatrix inverse(const IntegerMatrix& a);

/// Square matrix over Z/m. Entries are always reduced into [0, m).
class ResidueMatrix {
 public:
  ResidueMatrix(std::uint64_t modulus, int n);

  static ResidueMatrix identity(std::uint64_t modulus, int n);

  std::uint64_t modulus() const { return m_; }
  int dim() const { return n_; }
  std::uint64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  void set(int r, int c, std::uint64_t v) { a_[static_cast<std::size_t>(r) * n_ + c] = v % m_; }
  std::span<const std::uint64_t> entries() const { return a_; }

  /// Throws ModulusMismatch when the moduli differ.
  ResidueMatrix operator*(const ResidueMatrix& rhs) const;
  ResidueMatrix pow(unsigned long k) const;
  bool is_identity() const;

  /// Packed canonical key (see pack_residues).
  std::vector<std::uint8_t> key() const;

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

 private:
  std::uint64_t m_;
  int n_;
  std::vector<std::uint64_t> a_;
};

/// Entrywise reduction into [0, m). Throws BadModulus for m < 2.
ResidueMatrix reduce_mod(const IntegerMatrix& a, std::uint64_t m);

/// Real matrix compared entrywise up to a tolerance. Only used for graphs
/// whose labels make the Tits form irrational.
class NumericMatrix {
 public:
  NumericMatrix() = default;
  NumericMatrix(int n, double tolerance);
  static NumericMatrix identity(int n, double tolerance);

  int dim() const { return n_; }
  double tolerance() const { return tol_; }
  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  NumericMatrix operator*(const NumericMatrix& rhs) const;
  NumericMatrix operator-() const;
  NumericMatrix pow(unsigned long k) const;
  /// Largest entrywise absolute difference.
  double distance(const NumericMatrix& other) const;
  bool approx_equal(const NumericMatrix& other) const { return distance(other) <= tol_; }

 private:
  int n_ = 0;
  double tol_ = 1e-9;
  std::vector<double> a_;
};

// Packed keys -------------------------------------------------------------

/// Bytes per entry for residues mod m; 0 means one bit per entry (m = 2).
int residue_entry_width(std::uint64_t m);
/// Size in bytes of the packed key of an n x n matrix mod m.
std::size_t residue_key_size(std::uint64_t m, int n);
/// Row-major; m = 2 packs one bit per entry, otherwise the minimal number of
/// little-endian bytes that holds m - 1.
void pack_residues(std::span<const std::uint64_t> entries, std::uint64_t m,
                   std::vector<std::uint8_t>& out);
void unpack_residues(std::span<const std::uint8_t> key, std::uint64_t m,
                     std::span<std::uint64_t> entries);

/// Integer key: one width byte w followed by each entry zigzag-encoded in w
/// little-endian bytes. The width is the minimum that fits every entry, so
/// the key is canonical. Entries beyond 64 bits use width 0xFF followed by
/// length-prefixed magnitudes.
void pack_integers(std::span<const std::int64_t> entries, std::vector<std::uint8_t>& out);
/// Returns false when the key does not decode to int64 entries.
bool unpack_integers(std::span<const std::uint8_t> key, std::span<std::int64_t> entries);
std::vector<std::uint8_t> integer_key(const IntegerMatrix& a);

// JSON ---------------------------------------------------------------------

nlohmann::json to_json(const mpz_class& v);
nlohmann::json to_json(const IntegerMatrix& a);
nlohmann::json to_json(const ResidueMatrix& a);
nlohmann::json to_json(const NumericMatrix& a);

}  // namespace artcong
