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

#ifndef QCC_BOUND_HPP
#define QCC_BOUND_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcc/spectral.hpp"

namespace qcc {

/// Exponent set D = {f + j + i*z mod m : i in [delta-1), j in [nu+1)}.
struct CertificateParams {
  int f = 0;
  int z = 1;
  int delta = 3;
  int nu = 0;

  bool operator==(const CertificateParams&) const = default;
};

/// Proof that d >= dstar = min(delta + nu, eigencode distance).
struct BoundCertificate {
  CertificateParams params;
  std::vector<int> exponents;  // D, sorted
  Eigenspace intersection;
  EigencodeInfo eigencode;
  std::optional<Vector> witness;
  int dstar = 0;
};

/// Thrown when (f, z, delta, nu) does not define a certificate for a code.
class NotACertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No certificate with delta > 2 exists within the search range.
class NoBoundFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> exponent_set(const CertificateParams& params, int m);

struct VerifyOptions {
  int spot_check_words = 100;
  std::uint64_t seed = 0x5107c4ec;
};

/// Builds D, checks every exponent is an eigenvalue and the intersection of
/// eigenspaces is nonzero, then computes the eigencode distance and dstar and
/// attaches a witness when one is found. Every accepted certificate is
/// spot-checked: for random codewords c and every intersection basis vector v,
/// sum_t c_t(alpha^e) v_t = 0 for all e in D.
///
/// Throws UsageError for delta <= 2, nu < 0, z outside [1, m) or
/// gcd(m, z) != 1, and NotACertificate when D holds a non-eigenvalue or the
/// intersection is zero.
BoundCertificate verify_certificate(const QcCode& code, const CertificateParams& params,
                                    const VerifyOptions& options = {});

/// Replaces the certificate's witness after checking that v lies in the
/// intersection and has GF(p)-independent coordinates. Throws
/// NotACertificate otherwise.
void attach_witness(BoundCertificate& cert, const QcCode& code, const Vector& v);

/// Best certificate with exactly this nu, or nullopt when none has delta > 2.
std::optional<BoundCertificate> best_bound_for_nu(const QcCode& code, int nu);

/// Exhaustive search over f, units z, nu in [0, max_nu] and every admissible
/// delta. Maximizes dstar; ties go to smaller nu, then z, then f, then delta.
/// Throws NoBoundFound when nothing beats the trivial bound.
BoundCertificate best_bound(const QcCode& code, int max_nu);

}  // namespace qcc

#endif  // QCC_BOUND_HPP
