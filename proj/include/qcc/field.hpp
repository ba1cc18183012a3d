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

#ifndef QCC_FIELD_HPP
#define QCC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcc/errors.hpp"

namespace qcc {

class Field;

/// Description of GF(p^r) = GF(p)[X]/(modulus) together with the order m of
/// the designated root of unity alpha. Coefficient lists are ascending.
struct FieldSpec {
  std::uint32_t p = 2;
  int r = 1;
  std::vector<std::uint32_t> modulus;  // monic, degree r
  int m = 1;
  std::optional<std::vector<std::uint32_t>> alpha;  // length r; derived when absent

  bool operator==(const FieldSpec&) const = default;
};

/// Element of a Field. Holds a non-owning pointer to its field; the field must
/// outlive every element created from it.
///
/// The value is the power-basis coordinate vector packed as a base-p integer
/// (coordinate i is digit i), so equality of packed values is equality of
/// elements.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const;
  const Field* field_ptr() const { return field_; }
  std::uint32_t packed() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_;
  }

 private:
  friend class Field;
  FieldElement(const Field* field, std::uint32_t value) : field_(field), value_(value) {}

  const Field* field_ = nullptr;
  std::uint32_t value_ = 0;
};

using Vector = std::vector<FieldElement>;

/// Immutable finite field GF(p^r) with a distinguished element alpha of
/// multiplicative order m.
///
/// Construction checks that p is prime, that the modulus is monic and
/// irreducible of degree r, that gcd(m, p) = 1, that m | p^r - 1 and that alpha
/// has order exactly m. Any failure throws FieldConfigError.
///
/// When alpha is not given it is taken as g^((p^r-1)/m) for the first
/// primitive element g found, trying the class of X first. Fields with
/// p^r <= 2^16 get log/antilog tables; larger ones (up to 2^24 elements)
/// multiply by reducing polynomial products.
class Field {
 public:
  static std::shared_ptr<const Field> create(const FieldSpec& spec);

  /// Extension of GF(p) holding an element of order m, built on the first
  /// primitive modulus in ascending coefficient order. r = 0 selects the
  /// smallest such field, r = ord_m(p).
  static std::shared_ptr<const Field> for_root_order(std::uint32_t p, int m, int r = 0);

  /// GF(p) itself, with alpha = 1 and m = 1. Shared per p.
  static std::shared_ptr<const Field> prime_field(std::uint32_t p);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  int degree() const { return spec_.r; }
  std::uint32_t order() const { return size_; }
  int root_order() const { return spec_.m; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement alpha() const { return {this, alpha_powers_[spec_.m > 1 ? 1 : 0]}; }
  FieldElement primitive_element() const { return {this, primitive_}; }

  /// alpha^(e mod m); e may be negative.
  FieldElement alpha_pow(long long e) const;

  /// Embedding of c mod p into the prime subfield.
  FieldElement from_int(long long c) const;
  FieldElement from_coordinates(std::span<const std::uint32_t> coords) const;
  FieldElement from_packed(std::uint32_t packed) const;

  /// Power-basis coordinates (length r); GF(p)-linear and injective.
  std::vector<std::uint32_t> coordinates(const FieldElement& a) const;

  /// True when all coordinates beyond the constant one vanish.
  bool in_prime_field(const FieldElement& a) const;

  /// e in [0, m) with a = alpha^e, if a lies in the group generated by alpha.
  std::optional<int> log_alpha(const FieldElement& a) const;

  /// "0", "a^e" for powers of alpha, otherwise the coefficient list.
  std::string format(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, long long e) const;

  bool same_as(const Field& other) const;

 private:
  explicit Field(FieldSpec spec);

  void check_member(const FieldElement& a) const;
  std::uint32_t add_packed(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_packed(std::uint32_t a) const;
  std::uint32_t mul_packed(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_dense(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_packed(std::uint32_t a, std::uint64_t e) const;

  FieldSpec spec_;
  std::uint32_t size_ = 0;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, size-1)
  std::vector<std::int32_t> log_;   // log_[a] for a != 0
  std::vector<std::uint32_t> alpha_powers_;
  std::unordered_map<std::uint32_t, int> alpha_log_;
};

}  // namespace qcc

#endif  // QCC_FIELD_HPP
