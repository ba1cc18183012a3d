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

#ifndef QCC_ORACLE_HPP
#define QCC_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qcc/bound.hpp"
#include "qcc/code.hpp"

namespace qcc {

/// Refusal to enumerate a code that is too large or has no nonzero words.
class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// k x (m l) GF(p) generator matrix in the interleaved flat layout: rows
/// X^s * (row i of G) for s in [m - deg g_{i,i}).
std::vector<std::vector<std::uint32_t>> flat_generator_matrix(const QcCode& code);

enum class Traversal {
  kGray,      // one row update per step
  kCounting,  // every codeword rebuilt from its message
};

inline constexpr std::uint64_t kMaxDistanceEnumeration = std::uint64_t{1} << 18;
inline constexpr std::uint64_t kMaxNearestEnumeration = std::uint64_t{1} << 16;

/// Minimum weight over all p^k - 1 nonzero codewords. Requires
/// p^k <= 2^18 and k > 0; throws EnumerationError otherwise.
int min_distance_exhaustive(const QcCode& code, Traversal order = Traversal::kGray);

struct NearestResult {
  PolyVec codeword;
  int distance = 0;
  std::uint64_t ties = 0;  // minimizers found, including the returned one
};

/// Closest codeword by full enumeration; requires p^k <= 2^16.
NearestResult nearest_codeword(const QcCode& code, const PolyVec& rx);

/// Smallest nonzero weight among `samples` random codewords. Only an upper
/// bound on the distance.
int sampled_weight_upper_bound(const QcCode& code, std::uint64_t samples, std::uint64_t seed);

/// Rebuilds the stacked syndrome matrix of the key equations for a planted
/// error as X * Y * Xbar (X^<t> = (alpha^((f + t + z i) j)), Y = diag(E_j),
/// Xbar = (alpha^(i z j))) and checks it against the decoder's matrix entry by
/// entry, together with rank = number of burst positions.
bool verify_rank_decomposition(const QcCode& code, const BoundCertificate& cert, const PolyVec& error);

}  // namespace qcc

#endif  // QCC_ORACLE_HPP
