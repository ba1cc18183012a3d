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

#ifndef QCC_DECODER_HPP
#define QCC_DECODER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcc/bound.hpp"
#include "qcc/linalg.hpp"

namespace qcc {

enum class FailureReason {
  kLocatorNotFound,
  kRootDeficit,
  kValuesInconsistent,
  kValueNotRepresentable,
  kNotACodeword,
};

const char* to_string(FailureReason reason);

class DecodingFailure : public std::runtime_error {
 public:
  DecodingFailure(FailureReason reason, const std::string& detail)
      : std::runtime_error(detail), reason_(reason) {}
  FailureReason reason() const { return reason_; }

 private:
  FailureReason reason_;
};

/// Evaluation grid of the syndromes: S^t_i uses the point
/// alpha^(first + i*locator_step + t*sequence_step) for i in [length),
/// t in [count).
///
/// A certificate (f, z, delta, nu) normally gives locator_step = z,
/// sequence_step = 1, length = delta - 1 and count = nu + 1. When
/// delta - 1 <= nu the two axes of D are exchanged (locator_step = 1,
/// sequence_step = z) so that length >= count, which the rank argument behind
/// the key equations needs.
struct DecodingFrame {
  int first = 0;
  int locator_step = 1;
  int sequence_step = 1;
  int length = 0;
  int count = 0;
  bool swapped = false;

  /// floor((delta + nu - 1) / 2).
  int radius() const { return (length + count - 1) / 2; }
};

DecodingFrame make_frame(const CertificateParams& params);

struct SyndromeSet {
  DecodingFrame frame;
  CertificateParams params;
  Vector witness;
  std::vector<Vector> sequences;  // [count][length]

  bool all_zero() const;
  ExtPoly polynomial(int t) const;
};

/// Syndromes of rx under cert. Throws UsageError when the certificate has no
/// witness or its eigencode distance does not exceed delta + nu.
SyndromeSet syndromes(const QcCode& code, const BoundCertificate& cert, const PolyVec& rx);

/// Stacked Hankel system for trial degree eps: rows
/// (S^t_{i}, ..., S^t_{i+eps-1}) . (L_eps, ..., L_1) = -S^t_{i+eps}.
std::pair<Matrix, Vector> key_equation_system(const SyndromeSet& synd, int eps);

/// Lowest-degree locator with constant term 1 consistent with every
/// sequence, trying eps = 0, 1, ..., radius. Throws
/// DecodingFailure(kLocatorNotFound).
ExtPoly solve_key_equations(const SyndromeSet& synd);

/// {i in [0, m) : locator(alpha^(-i*locator_step)) = 0}. Throws
/// DecodingFailure(kRootDeficit) when fewer roots than deg locator are found.
std::vector<int> find_positions(const Field& field, const DecodingFrame& frame, const ExtPoly& locator);

/// Solves the Vandermonde system on the first sequence and checks the result
/// against every syndrome. Throws DecodingFailure(kValuesInconsistent).
Vector error_values(const SyndromeSet& synd, const std::vector<int>& positions);

/// GF(p) symbols e_t with sum_t e_t v_t = value, per value. Throws
/// DecodingFailure(kValueNotRepresentable).
std::vector<std::vector<std::uint32_t>> recover_symbols(const Field& field, const Vector& witness,
                                                        const Vector& values);

struct ErrorDescription {
  std::vector<int> positions;                      // burst positions E
  Vector values;                                   // E_j in GF(p^r)
  std::vector<std::vector<std::uint32_t>> symbols;  // e_{j,t}, per position
  PolyVec error_word;
  int symbol_errors = 0;  // nonzero symbols in error_word
};

struct DecodeOutcome {
  bool success = false;
  FailureReason reason = FailureReason::kLocatorNotFound;
  std::string detail;
  PolyVec codeword;
  ErrorDescription error;
  std::optional<SyndromeSet> syndromes;
  std::optional<ExtPoly> locator;
};

/// Full decoding pipeline. The estimate is only returned when it passes the
/// code's membership test.
DecodeOutcome decode(const QcCode& code, const BoundCertificate& cert, const PolyVec& rx);

}  // namespace qcc

#endif  // QCC_DECODER_HPP
