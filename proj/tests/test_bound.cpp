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

#include <doctest.h>

#include "qcc/bound.hpp"
#include "qcc/spectral.hpp"
#include "support.hpp"

using namespace qcc;

TEST_CASE("certificate (0, 4, 4, 1) on the example code") {
  const QcCode code = test::qc126_code();
  const BoundCertificate cert = verify_certificate(code, {0, 4, 4, 1});
  CHECK(cert.exponents == std::vector<int>{0, 1, 4, 5, 8, 9});
  CHECK(cert.eigencode.infinite());
  CHECK(cert.dstar == 5);
  CHECK(cert.intersection.dimension() == 1);
  REQUIRE(cert.witness.has_value());
  CHECK(has_independent_coordinates(*cert.witness, code.field()));
}

TEST_CASE("nu = 0 gives the consecutive-run bound 4") {
  const QcCode code = test::qc126_code();
  CHECK(verify_certificate(code, {0, 4, 4, 0}).dstar == 4);
  const auto best0 = best_bound_for_nu(code, 0);
  REQUIRE(best0.has_value());
  CHECK(best0->dstar == 4);
}

TEST_CASE("rejected parameters") {
  const QcCode code = test::qc126_code();
  CHECK_THROWS_AS(verify_certificate(code, {3, 1, 3, 0}), NotACertificate);  // exponent 3
  CHECK_THROWS_AS(verify_certificate(code, {5, 5, 3, 0}), NotACertificate);  // V_5 and V_10 meet in 0
  CHECK_THROWS_AS(verify_certificate(code, {0, 4, 2, 1}), UsageError);
  CHECK_THROWS_AS(verify_certificate(code, {0, 4, 4, -1}), UsageError);
  CHECK_THROWS_AS(verify_certificate(code, {0, 3, 4, 1}), UsageError);
  CHECK_THROWS_AS(verify_certificate(code, {0, 63, 4, 1}), UsageError);
  CHECK_THROWS_AS(verify_certificate(code, {63, 4, 4, 1}), UsageError);
  CHECK_THROWS_AS(best_bound(code, -1), UsageError);
}

TEST_CASE("witness attachment") {
  const QcCode code = test::qc126_code();
  const Field& f = code.field();
  BoundCertificate cert = verify_certificate(code, {0, 4, 4, 1});
  attach_witness(cert, code, {f.alpha_pow(7), f.alpha_pow(42)});  // alpha^7 (1, alpha^35)
  CHECK(cert.witness->at(0) == f.alpha_pow(7));
  CHECK_THROWS_AS(attach_witness(cert, code, {f.one(), f.one()}), NotACertificate);
  CHECK_THROWS_AS(attach_witness(cert, code, {f.one()}), NotACertificate);
}

TEST_CASE("best bound on the example code") {
  const QcCode code = test::qc126_code();
  const BoundCertificate b1 = best_bound(code, 1);
  CHECK(b1.dstar == 5);
  CHECK(b1.params == CertificateParams{0, 4, 4, 1});
  CHECK(best_bound(code, 0).dstar == 4);
  int previous = 0;
  for (int nu = 0; nu <= 3; ++nu) {
    const int d = best_bound(code, nu).dstar;
    CHECK(d >= previous);
    previous = d;
  }
}

TEST_CASE("search agrees with the reference search") {
  const QcCode code = test::qc126_code();
  for (int nu = 0; nu <= 2; ++nu) CHECK(best_bound_for_nu(code, nu)->dstar == test::reference_best_dstar(code, nu));
  test::Rng rng(77);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{2, 7}, {2, 15}, {2, 21}, {3, 13}, {3, 8}}) {
    const auto f = Field::for_root_order(p, m);
    for (int ell = 1; ell <= 3; ++ell) {
      for (int it = 0; it < 3; ++it) {
        const QcCode code = test::random_valid_code(rng, f, ell, ell * m - 1);
        for (int nu = 0; nu <= 1; ++nu) {
          const auto got = best_bound_for_nu(code, nu);
          CHECK((got ? got->dstar : -1) == test::reference_best_dstar(code, nu));
        }
      }
    }
  }
}

TEST_CASE("bounds never exceed the true distance") {
  test::Rng rng(4242);
  int checked = 0;
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{2, 7}, {2, 9}, {2, 15}, {3, 8}, {3, 13}}) {
    const auto f = Field::for_root_order(p, m);
    for (int ell = 1; ell <= 2; ++ell) {
      for (int it = 0; it < 4; ++it) {
        const QcCode code = test::random_valid_code(rng, f, ell, p == 2 ? 12 : 7);
        const int d = test::reference_min_distance(code);
        for (int nu = 0; nu <= 2; ++nu) {
          if (auto cert = best_bound_for_nu(code, nu)) {
            CHECK(cert->dstar <= d);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("certificate exponents annihilate codewords") {
  const QcCode code = test::qc126_code();
  const Field& f = code.field();
  test::Rng rng(8);
  for (const CertificateParams params : {CertificateParams{0, 4, 4, 1}, CertificateParams{0, 8, 3, 2}}) {
    const BoundCertificate cert = verify_certificate(code, params);
    REQUIRE(cert.witness.has_value());
    for (int it = 0; it < 100; ++it) {
      const PolyVec c = test::random_codeword(rng, code);
      for (int e : cert.exponents) {
        FieldElement s = f.zero();
        for (int t = 0; t < code.ell(); ++t) s += eval(c[t], f.alpha_pow(e)) * (*cert.witness)[t];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("exponent set") {
  CHECK(exponent_set({0, 4, 4, 1}, 63) == std::vector<int>{0, 1, 4, 5, 8, 9});
  CHECK(exponent_set({60, 4, 3, 0}, 63) == std::vector<int>{1, 60});
}
