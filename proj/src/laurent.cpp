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

#include "artcong/laurent.hpp"

#include <cmath>
#include <sstream>

#include "artcong/error.hpp"

namespace artcong {

// LaurentPolynomial ---------------------------------------------------------

LaurentPolynomial::LaurentPolynomial(long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, mpz_class(c));
}

LaurentPolynomial::LaurentPolynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& c, int s_exp, int t_exp) {
  LaurentPolynomial p;
  p.add_term({s_exp, t_exp}, c);
  return p;
}

void LaurentPolynomial::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

mpz_class LaurentPolynomial::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{-e.first, -e.second}, c);
  return out;
}

mpz_class LaurentPolynomial::evaluate(long s_val, long t_val) const {
  if ((s_val != 1 && s_val != -1) || (t_val != 1 && t_val != -1)) {
    throw Error(ErrorCode::kNonUnitValue, "exact evaluation needs s, t in {1, -1}");
  }
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) {
    const bool neg = (s_val == -1 && (e.first & 1)) != (t_val == -1 && (e.second & 1));
    if (neg) {
      sum -= c;
    } else {
      sum += c;
    }
  }
  return sum;
}

double LaurentPolynomial::evaluate(double s_val, double t_val) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += c.get_d() * std::pow(s_val, e.first) * std::pow(t_val, e.second);
  }
  return sum;
}

namespace {

std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (e.first != 0) mono += power("s", e.first);
    if (e.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += power("t", e.second);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << "*" << mono;
    }
  }
  return os.str();
}

nlohmann::json LaurentPolynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) out.push_back({e.first, e.second, artcong::to_json(c)});
  return out;
}

// LaurentMatrix -------------------------------------------------------------

LaurentMatrix::LaurentMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1L;
  return m;
}

namespace {

void require_same(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
  require_same(n_, rhs.n_);
  LaurentMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const LaurentPolynomial& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += x * rhs(k, j);
      }
    }
  }
  return out;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& rhs) const {
  require_same(n_, rhs.n_);
  LaurentMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& rhs) const {
  require_same(n_, rhs.n_);
  LaurentMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPolynomial& c) const {
  LaurentMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = c * a_[i];
  return out;
}

LaurentMatrix LaurentMatrix::pow(unsigned long k) const {
  LaurentMatrix result = identity(n_);
  LaurentMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentMatrix LaurentMatrix::star() const {
  LaurentMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j).bar();
  }
  return out;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& p : a_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

nlohmann::json LaurentMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n_; ++j) row.push_back((*this)(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix specialize(const LaurentMatrix& a, long s_val, long t_val) {
  IntegerMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j).evaluate(s_val, t_val);
  }
  return out;
}

NumericMatrix specialize_numeric(const LaurentMatrix& a, double s_val, double t_val,
                                 double tolerance) {
  NumericMatrix out(a.dim(), tolerance);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j).evaluate(s_val, t_val);
  }
  return out;
}

}  // namespace artcong
