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

#ifndef QCC_SPECTRAL_HPP
#define QCC_SPECTRAL_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "qcc/code.hpp"
#include "qcc/linalg.hpp"

namespace qcc {

/// lambda = alpha^exponent, a root of det G(X) = prod g_{i,i}(X).
struct Eigenvalue {
  int exponent = 0;
  int algebraic_mult = 0;  // order of lambda as a root of det G(X)
  int geometric_mult = 0;  // l - rank G(lambda)
};

/// Sorted by exponent. Only exponents with algebraic multiplicity > 0.
std::vector<Eigenvalue> eigenvalues(const QcCode& code);

/// G(x) as an l x l matrix over the extension field.
Matrix evaluate_generator(const QcCode& code, const FieldElement& x);

bool is_eigenvalue_exponent(const QcCode& code, int e);

/// Subspace of GF(p^r)^l. `exponents` lists the eigenvalue exponents whose
/// eigenspaces it is (the intersection of).
struct Eigenspace {
  int ell = 0;
  std::vector<int> exponents;
  std::vector<Vector> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Right kernel of G(alpha^e). Zero-dimensional when alpha^e is not an
/// eigenvalue.
Eigenspace eigenspace(const QcCode& code, int e);

/// Intersection of the spans; stops early once it becomes zero.
Eigenspace intersect(std::span<const Eigenspace> spaces);

/// The GF(p) code orthogonal to every vector of a space.
struct EigencodeInfo {
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  /// Enumeration limit on p^k.
  static constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 20;

  std::vector<std::vector<std::uint32_t>> generators;  // GF(p) basis, length l each
  int distance = kInfinite;
  /// False when p^k exceeded kMaxEnumeration; distance is then the
  /// conservative lower bound 1.
  bool distance_exact = true;

  int dimension() const { return static_cast<int>(generators.size()); }
  bool infinite() const { return distance == kInfinite; }
};

EigencodeInfo eigencode(const Eigenspace& space, const Field& field);

/// True when the l coordinates of v are linearly independent over GF(p).
bool has_independent_coordinates(const Vector& v, const Field& field);

inline constexpr std::uint64_t kWitnessSeed = 0x5eed'0f'717e55ULL;

/// Vector of the span with GF(p)-independent coordinates. Tries the basis
/// vectors, then GF(p)-combinations of up to three basis vectors, then 1000
/// random span elements drawn from a generator seeded with `seed`.
std::optional<Vector> independent_witness(const Eigenspace& space, const Field& field,
                                          std::uint64_t seed = kWitnessSeed);

}  // namespace qcc

#endif  // QCC_SPECTRAL_HPP
