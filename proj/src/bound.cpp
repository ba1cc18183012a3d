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

#include "qcc/bound.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace qcc {
namespace {

void check_params(const CertificateParams& c, int m) {
  if (c.delta <= 2) throw UsageError("delta must exceed 2");
  if (c.nu < 0) throw UsageError("nu must be non-negative");
  if (c.z < 1 || c.z >= std::max(m, 2)) throw UsageError("z must lie in [1, m)");
  if (std::gcd(c.z, m) != 1) throw UsageError("gcd(m, z) must be 1");
  if (c.f < 0 || c.f >= m) throw UsageError("f must lie in [0, m)");
}

PolyVec random_codeword(const QcCode& code, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> sym(0, code.p() - 1);
  PolyVec msg;
  for (int i = 0; i < code.ell(); ++i) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(code.m()));
    for (auto& x : c) x = sym(rng);
    msg.emplace_back(code.p(), std::move(c));
  }
  return code.encode(msg);
}

void spot_check(const QcCode& code, const BoundCertificate& cert, const VerifyOptions& options) {
  const Field& field = code.field();
  std::mt19937_64 rng(options.seed);
  for (int n = 0; n < options.spot_check_words; ++n) {
    const PolyVec c = random_codeword(code, rng);
    for (int e : cert.exponents) {
      const FieldElement x = field.alpha_pow(e);
      Vector values;
      for (const auto& comp : c) values.push_back(eval(comp, x));
      for (const auto& v : cert.intersection.basis) {
        FieldElement s = field.zero();
        for (int t = 0; t < code.ell(); ++t) s += values[t] * v[t];
        if (!s.is_zero()) {
          throw std::logic_error("codeword is not annihilated by an eigenvector at exponent " +
                                 std::to_string(e));
        }
      }
    }
  }
}

int combine_distance(const CertificateParams& c, const EigencodeInfo& ec) {
  return std::min(c.delta + c.nu, ec.distance);
}

// Eigenspace data per exponent, shared across the search grid.
class SearchContext {
 public:
  explicit SearchContext(const QcCode& code) : code_(code), field_(code.field()) {
    const int m = code.m();
    eigen_.assign(static_cast<std::size_t>(m), false);
    annihilators_.resize(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
      if (!is_eigenvalue_exponent(code, e)) continue;
      eigen_[e] = true;
      const Eigenspace s = eigenspace(code, e);
      if (s.dimension() < code.ell()) annihilators_[e] = kernel(Matrix::from_rows(field_, s.basis, code.ell()));
    }
  }

  bool eigen(int e) const { return eigen_[e]; }
  const std::vector<Vector>& annihilator(int e) const { return annihilators_[e]; }

  int eigencode_distance(const std::vector<Vector>& basis) {
    std::vector<std::uint32_t> key;
    for (const auto& v : basis) {
      for (const auto& x : v) key.push_back(x.packed());
    }
    auto it = distances_.find(key);
    if (it != distances_.end()) return it->second;
    const int d = eigencode(Eigenspace{code_.ell(), {}, basis}, field_).distance;
    distances_.emplace(std::move(key), d);
    return d;
  }

 private:
  const QcCode& code_;
  const Field& field_;
  std::vector<bool> eigen_;
  std::vector<std::vector<Vector>> annihilators_;
  std::map<std::vector<std::uint32_t>, int> distances_;
};

struct Candidate {
  CertificateParams params;
  int dstar = 0;
};

// Grows delta for fixed (f, z, nu) and keeps the best dstar seen. Returns
// true when `best` was improved.
bool scan_deltas(SearchContext& ctx, const QcCode& code, int f, int z, int nu,
                 std::optional<Candidate>& best) {
  const int m = code.m();
  const int ell = code.ell();
  const Field& field = code.field();
  Matrix constraints(field, 0, ell);
  bool improved = false;
  // Row i of D is {f + i z + j : j in [nu+1)}; delta = rows + 1.
  for (int rows = 1; rows <= m; ++rows) {
    const int i = rows - 1;
    for (int j = 0; j <= nu; ++j) {
      const int e = static_cast<int>((f + static_cast<long long>(i) * z + j) % m);
      if (!ctx.eigen(e)) return improved;
      for (const auto& a : ctx.annihilator(e)) constraints.append_row(a);
    }
    // Keep the constraint system small.
    Matrix reduced = constraints;
    const auto pivots = row_reduce(reduced);
    Matrix compact(field, 0, ell);
    for (std::size_t k = 0; k < pivots.size(); ++k) compact.append_row(reduced.row(static_cast<int>(k)));
    constraints = compact;
    if (static_cast<int>(pivots.size()) == ell) return improved;  // intersection is zero
    const int delta = rows + 1;
    if (delta <= 2) continue;
    const CertificateParams params{f, z, delta, nu};
    const int dstar = std::min(delta + nu, ctx.eigencode_distance(kernel(constraints)));
    if (!best || dstar > best->dstar) {
      best = Candidate{params, dstar};
      improved = true;
    }
  }
  return improved;
}

}  // namespace

std::vector<int> exponent_set(const CertificateParams& c, int m) {
  std::vector<int> d;
  for (int j = 0; j <= c.nu; ++j) {
    for (int i = 0; i + 1 < c.delta; ++i) {
      d.push_back(static_cast<int>((c.f + j + static_cast<long long>(i) * c.z) % m));
    }
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

BoundCertificate verify_certificate(const QcCode& code, const CertificateParams& params,
                                    const VerifyOptions& options) {
  check_params(params, code.m());
  BoundCertificate cert;
  cert.params = params;
  cert.exponents = exponent_set(params, code.m());
  std::vector<Eigenspace> spaces;
  for (int e : cert.exponents) {
    if (!is_eigenvalue_exponent(code, e)) {
      throw NotACertificate("not a certificate: alpha^" + std::to_string(e) + " is not an eigenvalue");
    }
    spaces.push_back(eigenspace(code, e));
  }
  cert.intersection = intersect(spaces);
  if (cert.intersection.dimension() == 0) {
    throw NotACertificate("not a certificate: the eigenspaces over D intersect in zero");
  }
  cert.eigencode = eigencode(cert.intersection, code.field());
  cert.dstar = combine_distance(params, cert.eigencode);
  cert.witness = independent_witness(cert.intersection, code.field());
  spot_check(code, cert, options);
  return cert;
}

void attach_witness(BoundCertificate& cert, const QcCode& code, const Vector& v) {
  const Field& field = code.field();
  if (static_cast<int>(v.size()) != code.ell()) throw NotACertificate("witness must have l coordinates");
  for (int e : cert.exponents) {
    const Vector gv = multiply(evaluate_generator(code, field.alpha_pow(e)), v);
    for (const auto& x : gv) {
      if (!x.is_zero()) {
        throw NotACertificate("witness is not an eigenvector for alpha^" + std::to_string(e));
      }
    }
  }
  if (!has_independent_coordinates(v, field)) {
    throw NotACertificate("witness coordinates are not linearly independent over GF(p)");
  }
  cert.witness.emplace(v);
}

std::optional<BoundCertificate> best_bound_for_nu(const QcCode& code, int nu) {
  if (nu < 0) throw UsageError("nu must be non-negative");
  const int m = code.m();
  SearchContext ctx(code);
  std::optional<Candidate> best;
  for (int z = 1; z < std::max(m, 2); ++z) {
    if (std::gcd(z, m) != 1) continue;
    for (int f = 0; f < m; ++f) scan_deltas(ctx, code, f, z, nu, best);
  }
  if (!best) return std::nullopt;
  return verify_certificate(code, best->params);
}

BoundCertificate best_bound(const QcCode& code, int max_nu) {
  if (max_nu < 0) throw UsageError("max_nu must be non-negative");
  std::optional<BoundCertificate> best;
  for (int nu = 0; nu <= max_nu; ++nu) {
    auto cert = best_bound_for_nu(code, nu);
    if (cert && (!best || cert->dstar > best->dstar)) best = std::move(cert);
  }
  if (!best) throw NoBoundFound("no bound above trivial: no certificate with delta > 2");
  return *best;
}

}  // namespace qcc
