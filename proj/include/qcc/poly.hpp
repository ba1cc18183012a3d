// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCC_POLY_HPP
#define QCC_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qcc/field.hpp"

namespace qcc {

/// Dense univariate polynomial over GF(p), ascending coefficients.
/// The zero polynomial has no coefficients; otherwise the leading one is
/// nonzero.
class Poly {
 public:
  explicit Poly(std::uint32_t p = 2) : p_(p) {}
  Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  Poly(std::uint32_t p, std::initializer_list<std::uint32_t> coeffs)
      : Poly(p, std::vector<std::uint32_t>(coeffs)) {}

  static Poly monomial(std::uint32_t p, int degree, std::uint32_t coeff = 1);
  /// X^m - 1.
  static Poly x_pow_minus_one(std::uint32_t p, int m);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint32_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(std::uint32_t s) const;

  /// Quotient and remainder; throws DomainError for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }

  Poly monic() const;
  /// Residue modulo X^m - 1 by folding exponents.
  Poly mod_xm1(int m) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(f, 0) = monic(f) and gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// a * b reduced modulo X^m - 1.
Poly mul_mod_xm1(const Poly& a, const Poly& b, int m);

/// Horner evaluation with base coefficients lifted into x's field.
FieldElement eval(const Poly& f, const FieldElement& x);

/// Polynomial over an extension field.
class ExtPoly {
 public:
  explicit ExtPoly(const Field& field) : field_(&field) {}
  ExtPoly(const Field& field, Vector coeffs);

  static ExtPoly lift(const Field& field, const Poly& f);

  const Field& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : field_->zero();
  }
  const Vector& coeffs() const { return c_; }

  FieldElement eval(const FieldElement& x) const;

  friend ExtPoly operator+(const ExtPoly& a, const ExtPoly& b);
  friend ExtPoly operator-(const ExtPoly& a, const ExtPoly& b);
  friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b);

  /// Divides by (X - root) when root is a zero; returns false and leaves the
  /// polynomial alone otherwise.
  bool divide_linear(const FieldElement& root);

  /// Coefficients all in GF(p): the corresponding base polynomial.
  /// Throws DomainError otherwise.
  Poly descend() const;

  friend bool operator==(const ExtPoly& a, const ExtPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  const Field* field_;
  Vector c_;
};

/// q-cyclotomic coset of i modulo m.
struct CyclotomicCoset {
  int representative = 0;
  std::vector<int> members;  // sorted
};

/// Orbit {i q^j mod m}; requires gcd(q, m) = 1.
CyclotomicCoset cyclotomic_coset(int i, int m, std::uint32_t q);

/// All cosets of [0, m), each represented by its smallest member.
std::vector<CyclotomicCoset> cyclotomic_cosets(int m, std::uint32_t q);

/// m_i(X) = prod_{j in M_i} (X - alpha^j), returned as a polynomial over GF(p).
Poly minimal_polynomial(int i, const Field& field);

}  // namespace qcc

#endif  // QCC_POLY_HPP
