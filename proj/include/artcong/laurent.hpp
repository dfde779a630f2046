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

// Laurent polynomials in s, t over Z with the bar involution s -> 1/s,
// t -> 1/t, and square matrices over that ring.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "artcong/matrix.hpp"

namespace artcong {

class LaurentPolynomial {
 public:
  /// (s-exponent, t-exponent)
  using Exponent = std::pair<int, int>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c);  // NOLINT(google-explicit-constructor): integer constants
  LaurentPolynomial(const mpz_class& c);  // NOLINT

  static LaurentPolynomial monomial(const mpz_class& c, int s_exp, int t_exp);
  static LaurentPolynomial s() { return monomial(1, 1, 0); }
  static LaurentPolynomial t() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  /// Coefficient of s^a t^b.
  mpz_class coeff(int a, int b) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  LaurentPolynomial bar() const;

  /// Exact value at s, t in {1, -1}. Throws NonUnitValue otherwise.
  mpz_class evaluate(long s_val, long t_val) const;
  double evaluate(double s_val, double t_val) const;

  std::string to_string() const;
  /// Sorted term list [[a, b, c], ...] meaning c s^a t^b.
  nlohmann::json to_json() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(const Exponent& e, const mpz_class& c);
  std::map<Exponent, mpz_class> terms_;
};

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(int n);
  static LaurentMatrix identity(int n);

  int dim() const { return n_; }
  LaurentPolynomial& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const LaurentPolynomial& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }

  /// Throws DimensionMismatch.
  LaurentMatrix operator*(const LaurentMatrix& rhs) const;
  LaurentMatrix operator+(const LaurentMatrix& rhs) const;
  LaurentMatrix operator-(const LaurentMatrix& rhs) const;
  LaurentMatrix scaled(const LaurentPolynomial& c) const;
  LaurentMatrix pow(unsigned long k) const;

  /// Conjugate transpose: entrywise bar, then transpose.
  LaurentMatrix star() const;
  bool is_zero() const;

  nlohmann::json to_json() const;

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<LaurentPolynomial> a_;
};

/// Entrywise evaluation at s, t in {1, -1}.
IntegerMatrix specialize(const LaurentMatrix& a, long s_val, long t_val);
NumericMatrix specialize_numeric(const LaurentMatrix& a, double s_val, double t_val,
                                 double tolerance);

}  // namespace artcong
