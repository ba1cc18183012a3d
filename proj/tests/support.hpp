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

// Shared fixtures and independent reference computations for the tests.
// The references work on plain integer vectors where they can and never call
// the library's enumeration, bound search or decoder.

#ifndef QCC_TESTS_SUPPORT_HPP
#define QCC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <limits>
#include <vector>

#include "qcc/bound.hpp"
#include "qcc/linalg.hpp"
#include "qcc/code.hpp"
#include "qcc/field.hpp"
#include "qcc/poly.hpp"

namespace qcc::test {

using Row = std::vector<std::uint32_t>;
using Rng = std::mt19937_64;

inline Poly poly_from_exponents(std::uint32_t p, std::initializer_list<int> exps) {
  const int deg = *std::max_element(exps.begin(), exps.end());
  std::vector<std::uint32_t> c(deg + 1, 0);
  for (int e : exps) c[e] = 1;
  return Poly(p, c);
}

/// GF(2^6) = GF(2)[X]/(X^6+X^4+X^3+X+1), alpha = X, m = 63.
inline std::shared_ptr<const Field> qc126_field() {
  FieldSpec spec;
  spec.p = 2;
  spec.r = 6;
  spec.modulus = {1, 1, 0, 1, 1, 0, 1};
  spec.m = 63;
  spec.alpha = std::vector<std::uint32_t>{0, 1, 0, 0, 0, 0};
  return Field::create(spec);
}

inline GroebnerMatrix qc126_basis() {
  GroebnerMatrix g(2, 63, 2);
  g.at(0, 0) = poly_from_exponents(2, {0, 1, 2, 3, 4, 6, 9, 10});
  g.at(0, 1) = poly_from_exponents(2, {0, 2, 4, 7, 10, 14});
  g.at(1, 1) = poly_from_exponents(2, {0, 5, 8, 10, 11, 12, 15, 16});
  return g;
}

inline QcCode qc126_code() { return QcCode::validate(qc126_basis(), qc126_field()); }

/// Received word of the decoding example: r_0 = 1 + X^32, r_1 = X^32.
inline PolyVec qc126_rx() {
  return {poly_from_exponents(2, {0, 32}), poly_from_exponents(2, {32})};
}

/// (1, alpha^4 + 1).
inline Vector qc126_witness(const Field& f) {
  return {f.one(), f.from_coordinates(std::vector<std::uint32_t>{1, 0, 0, 0, 1, 0})};
}

inline BoundCertificate qc126_certificate(const QcCode& code) {
  BoundCertificate cert = verify_certificate(code, {0, 4, 4, 1});
  attach_witness(cert, code, qc126_witness(code.field()));
  return cert;
}

inline int positive_mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

// ---- GF(p) reference linear algebra -------------------------------------

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Rank of a GF(p) matrix by plain Gaussian elimination.
inline int gf_rank(std::vector<Row> rows, std::uint32_t p) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] % p) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint32_t inv = inv_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + (p - f) * rows[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

/// Interleaved flat vector of X^s * (a_0, ..., a_{l-1}) mod X^m - 1.
inline Row shifted_flat(const std::vector<Poly>& comps, int s, int m) {
  const int ell = static_cast<int>(comps.size());
  Row out(static_cast<std::size_t>(m) * ell, 0);
  for (int t = 0; t < ell; ++t) {
    const auto& c = comps[t].coeffs();
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      auto& slot = out[static_cast<std::size_t>(positive_mod(i + s, m)) * ell + t];
      slot = (slot + c[i]) % comps[t].modulus();
    }
  }
  return out;
}

/// All m shifts of every basis row: spans the code over GF(p).
inline std::vector<Row> all_shift_rows(const QcCode& code) {
  std::vector<Row> rows;
  for (int i = 0; i < code.ell(); ++i) {
    std::vector<Poly> comps;
    for (int j = 0; j < code.ell(); ++j) comps.push_back(code.generator(i, j));
    for (int s = 0; s < code.m(); ++s) rows.push_back(shifted_flat(comps, s, code.m()));
  }
  return rows;
}

/// Membership by rank: word lies in the GF(p) span of all shifted rows.
inline bool reference_is_member(const QcCode& code, const PolyVec& word) {
  auto rows = all_shift_rows(code);
  const int r0 = gf_rank(rows, code.p());
  rows.push_back(to_flat(word, code.m()));
  return gf_rank(rows, code.p()) == r0;
}

/// GF(p) basis of the code: a row-reduced maximal independent subset of the
/// shifted rows.
inline std::vector<Row> reference_basis(const QcCode& code) {
  std::vector<Row> basis;
  int rank = 0;
  for (auto& r : all_shift_rows(code)) {
    basis.push_back(r);
    const int nr = gf_rank(basis, code.p());
    if (nr == rank) {
      basis.pop_back();
    } else {
      rank = nr;
    }
  }
  return basis;
}

/// Minimum weight by counting through every message of the reference basis.
inline int reference_min_distance(const QcCode& code) {
  const auto basis = reference_basis(code);
  const std::uint32_t p = code.p();
  const int k = static_cast<int>(basis.size());
  const std::size_t n = static_cast<std::size_t>(code.length());
  std::vector<std::uint32_t> digits(k, 0);
  int best = code.length() + 1;
  for (;;) {
    int i = 0;
    while (i < k && ++digits[i] == p) digits[i++] = 0;
    if (i == k) break;
    int w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t s = 0;
      for (int r = 0; r < k; ++r) s += std::uint64_t{digits[r]} * basis[r][c];
      if (s % p) ++w;
    }
    best = std::min(best, w);
  }
  return best;
}

// ---- random objects ----------------------------------------------------

inline Poly random_poly(Rng& rng, std::uint32_t p, int max_degree) {
  std::vector<std::uint32_t> c(std::max(max_degree + 1, 0));
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  for (auto& x : c) x = d(rng);
  return Poly(p, c);
}

inline PolyVec random_message(Rng& rng, const QcCode& code) {
  PolyVec msg;
  for (int i = 0; i < code.ell(); ++i) msg.push_back(random_poly(rng, code.p(), code.m() - 1));
  return msg;
}

inline PolyVec random_codeword(Rng& rng, const QcCode& code) { return code.encode(random_message(rng, code)); }

/// Error with exactly eps burst positions, each carrying a random nonzero
/// GF(p)^l symbol vector.
inline PolyVec plant_burst(Rng& rng, const QcCode& code, int eps, std::vector<int>* positions = nullptr) {
  std::vector<int> pos(code.m());
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  pos.resize(eps);
  std::sort(pos.begin(), pos.end());
  const int ell = code.ell();
  Row flat(static_cast<std::size_t>(code.length()), 0);
  std::uniform_int_distribution<std::uint32_t> d(0, code.p() - 1);
  for (int j : pos) {
    bool nonzero = false;
    while (!nonzero) {
      for (int t = 0; t < ell; ++t) {
        flat[static_cast<std::size_t>(j) * ell + t] = d(rng);
        nonzero = nonzero || flat[static_cast<std::size_t>(j) * ell + t] != 0;
      }
    }
  }
  if (positions) *positions = pos;
  return from_flat(flat, ell, code.p());
}

/// Product of the minimal polynomials of a random subset of cosets; every
/// divisor of X^m - 1 arises this way.
inline Poly random_divisor(Rng& rng, const Field& field) {
  Poly g(field.characteristic(), {1});
  for (const auto& c : cyclotomic_cosets(field.root_order(), field.characteristic())) {
    if (rng() & 1) g = g * minimal_polynomial(c.representative, field);
  }
  return g;
}

/// Random valid reduced basis over GF(2) with 1 <= k <= max_k. Diagonal
/// entries are random divisors of X^m - 1; an entry above the diagonal in
/// column j is a random multiple of g_jj / gcd(g_jj, (X^m-1)/g_ii) of lower
/// degree than g_jj. Candidates failing validation are redrawn.
inline QcCode random_valid_code(Rng& rng, const std::shared_ptr<const Field>& field, int ell, int max_k) {
  const int m = field->root_order();
  const std::uint32_t p = field->characteristic();
  const Poly xm1 = Poly::x_pow_minus_one(p, m);
  for (;;) {
    GroebnerMatrix g(ell, m, p);
    int k = 0;
    for (int i = 0; i < ell; ++i) {
      g.at(i, i) = random_divisor(rng, *field);
      k += m - g.at(i, i).degree();
    }
    if (k < 1 || k > max_k) continue;
    for (int i = 0; i < ell; ++i) {
      const Poly h = xm1 / g.at(i, i);
      for (int j = i + 1; j < ell; ++j) {
        const Poly& gjj = g.at(j, j);
        if (gjj.degree() < 1 || (rng() & 3) == 0) continue;
        const Poly step = gjj / gcd(gjj, h);
        const int room = gjj.degree() - step.degree() - 1;
        if (room < 0) continue;
        g.at(i, j) = random_poly(rng, p, room) * step;
      }
    }
    if (!QcCode::check(g, *field).empty()) continue;
    return QcCode::validate(g, field);
  }
}

// ---- reference bounds --------------------------------------------------

/// Exponents e in [0, m) with det G(alpha^e) = 0, from the diagonal alone.
inline std::vector<bool> reference_eigen_exponents(const QcCode& code) {
  const Field& f = code.field();
  std::vector<bool> out(code.m(), false);
  for (int e = 0; e < code.m(); ++e) {
    for (int i = 0; i < code.ell(); ++i) out[e] = out[e] || eval(code.generator(i, i), f.alpha_pow(e)).is_zero();
  }
  return out;
}

/// Largest min(delta + nu, d_ec) over all (f, z, delta) for a fixed nu, or -1
/// when no delta > 2 qualifies. The intersection of eigenspaces is the kernel
/// of the stacked matrices G(alpha^e), e in D; a vector c in GF(p)^l lies in
/// the eigencode iff it is in the row space of that stack.
inline int reference_best_dstar(const QcCode& code, int nu) {
  const Field& f = code.field();
  const int m = code.m();
  const int ell = code.ell();
  const std::uint32_t p = code.p();
  const auto eig = reference_eigen_exponents(code);
  std::vector<Vector> words;  // nonzero GF(p)^l vectors
  std::vector<int> weights;
  std::uint64_t total = 1;
  for (int t = 0; t < ell; ++t) total *= p;
  for (std::uint64_t w = 1; w < total; ++w) {
    Vector c;
    int wt = 0;
    std::uint64_t x = w;
    for (int t = 0; t < ell; ++t) {
      c.push_back(f.from_int(static_cast<long long>(x % p)));
      wt += (x % p) != 0;
      x /= p;
    }
    words.push_back(c);
    weights.push_back(wt);
  }
  int best = -1;
  for (int z = 1; z < std::max(m, 2); ++z) {
    if (std::gcd(z, m) != 1) continue;
    for (int f0 = 0; f0 < m; ++f0) {
      Matrix stack(f, 0, ell);
      for (int delta = 3; delta <= m + 1; ++delta) {
        const int i = delta - 2;
        bool ok = true;
        for (int j = 0; j <= nu && ok; ++j) ok = eig[positive_mod(f0 + j + 1LL * i * z, m)];
        if (!ok) break;
        for (int row_i = (delta == 3 ? 0 : i); row_i <= i; ++row_i) {
          for (int j = 0; j <= nu; ++j) {
            const auto x = f.alpha_pow(f0 + j + 1LL * row_i * z);
            for (int r = 0; r < ell; ++r) {
              Vector row;
              for (int c = 0; c < ell; ++c) row.push_back(eval(code.generator(r, c), x));
              stack.append_row(row);
            }
          }
        }
        const int rk = rank(stack);
        if (rk == ell) break;
        int dec = std::numeric_limits<int>::max();
        for (std::size_t w = 0; w < words.size(); ++w) {
          Matrix aug = stack;
          aug.append_row(words[w]);
          if (rank(aug) == rk) dec = std::min(dec, weights[w]);
        }
        best = std::max(best, std::min(delta + nu, dec));
      }
    }
  }
  return best;
}

/// Zero exponents of a cyclic code's generator polynomial.
inline std::vector<bool> cyclic_zeros(const Poly& g, const Field& f) {
  std::vector<bool> z(f.root_order());
  for (int e = 0; e < f.root_order(); ++e) z[e] = eval(g, f.alpha_pow(e)).is_zero();
  return z;
}

/// Consecutive-run bound: longest run f, f+z, ..., f+(delta-2)z of zeros with
/// gcd(z, m) = 1 gives d >= delta.
inline int reference_bch_bound(const std::vector<bool>& zeros) {
  const int m = static_cast<int>(zeros.size());
  int best = 1;
  for (int z = 1; z < m; ++z) {
    if (std::gcd(z, m) != 1) continue;
    for (int f0 = 0; f0 < m; ++f0) {
      int run = 0;
      while (run < m && zeros[positive_mod(f0 + 1LL * run * z, m)]) ++run;
      best = std::max(best, run + 1);
    }
  }
  return best;
}

/// Hartmann-Tzeng bound with second step 1: zeros at f + i z + j for
/// i in [delta - 1), j in [nu + 1) give d >= delta + nu. Only delta > 2
/// counts; -1 when no such set exists.
inline int reference_ht_bound(const std::vector<bool>& zeros, int nu) {
  const int m = static_cast<int>(zeros.size());
  int best = -1;
  for (int z = 1; z < std::max(m, 2); ++z) {
    if (std::gcd(z, m) != 1) continue;
    for (int f0 = 0; f0 < m; ++f0) {
      int len = 0;
      for (;;) {
        bool all = true;
        for (int j = 0; j <= nu; ++j) all = all && zeros[positive_mod(f0 + j + 1LL * len * z, m)];
        if (!all || len >= m) break;
        ++len;
      }
      if (len + 1 > 2) best = std::max(best, len + 1 + nu);
    }
  }
  return best;
}

}  // namespace qcc::test

#endif  // QCC_TESTS_SUPPORT_HPP
