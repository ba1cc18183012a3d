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

#ifndef QCC_CODE_HPP
#define QCC_CODE_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcc/field.hpp"
#include "qcc/poly.hpp"

namespace qcc {

/// Components c_0(X), ..., c_{l-1}(X) of a word, each of degree < m.
using PolyVec = std::vector<Poly>;

/// Upper-triangular l x l polynomial generator matrix (row-major).
struct GroebnerMatrix {
  int ell = 0;
  int m = 0;
  std::vector<Poly> entries;

  GroebnerMatrix() = default;
  GroebnerMatrix(int ell, int m, std::uint32_t p)
      : ell(ell), m(m), entries(static_cast<std::size_t>(ell) * ell, Poly(p)) {}

  Poly& at(int i, int j) { return entries[static_cast<std::size_t>(i) * ell + j]; }
  const Poly& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * ell + j]; }
  PolyVec row(int i) const;
};

/// Which structural condition a generator matrix breaks.
///   1: nonzero entry below the diagonal
///   2: deg g_{j,i} >= deg g_{i,i} above the diagonal
///   3: g_{i,i} does not divide X^m - 1
///   4: g_{i,i} = X^m - 1 with a nonzero entry to its right
///   5: ((X^m - 1)/g_{i,i}) * row i does not reduce to zero by the rows below
///      it, so the rows are not a Groebner basis of the module they generate
///   0: shape or field mismatch
struct ConditionViolation {
  int condition = 0;
  int row = -1;
  int col = -1;
  std::string message;
};

class InvalidCode : public std::runtime_error {
 public:
  explicit InvalidCode(std::vector<ConditionViolation> violations);
  const std::vector<ConditionViolation>& violations() const { return violations_; }

 private:
  std::vector<ConditionViolation> violations_;
};

/// l-quasi-cyclic code of length m*l given by a validated reduced Groebner
/// basis. Immutable; copies share the field.
class QcCode {
 public:
  /// Checks every condition and reports all violations at once.
  static QcCode validate(GroebnerMatrix basis, std::shared_ptr<const Field> field);

  /// Violations without throwing (empty for a valid basis).
  static std::vector<ConditionViolation> check(const GroebnerMatrix& basis, const Field& field);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  const GroebnerMatrix& basis() const { return basis_; }
  const Poly& generator(int i, int j) const { return basis_.at(i, j); }
  std::uint32_t p() const { return field_->characteristic(); }
  int m() const { return basis_.m; }
  int ell() const { return basis_.ell; }
  int length() const { return basis_.m * basis_.ell; }
  int dimension() const { return k_; }

  /// a(X) G(X) over GF(p)[X]/(X^m - 1); message components are reduced first.
  PolyVec encode(const PolyVec& message) const;

  /// Canonical message a with encode(a) = c (deg a_i < m - deg g_{i,i}), or
  /// nullopt when c is not a codeword.
  std::optional<PolyVec> message_of(const PolyVec& word) const;
  bool is_codeword(const PolyVec& word) const { return message_of(word).has_value(); }

  PolyVec zero_word() const;

 private:
  QcCode(std::shared_ptr<const Field> field, GroebnerMatrix basis);

  std::shared_ptr<const Field> field_;
  GroebnerMatrix basis_;
  int k_ = 0;
};

/// Multiplies every component by X modulo X^m - 1.
PolyVec shift(const PolyVec& word, int m);

/// Interleaved flat layout (c_{0,0} ... c_{l-1,0} c_{0,1} ...).
std::vector<std::uint32_t> to_flat(const PolyVec& word, int m);
PolyVec from_flat(const std::vector<std::uint32_t>& flat, int ell, std::uint32_t p);

/// Number of nonzero symbols in the flat layout.
int hamming_weight(const PolyVec& word);

/// Componentwise sum/difference.
PolyVec add(const PolyVec& a, const PolyVec& b);
PolyVec sub(const PolyVec& a, const PolyVec& b);

}  // namespace qcc

#endif  // QCC_CODE_HPP
