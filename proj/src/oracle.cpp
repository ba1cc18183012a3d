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

#include "qcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "qcc/decoder.hpp"

namespace qcc {
namespace {

using Row = std::vector<std::uint32_t>;

std::uint64_t word_count(std::uint32_t p, int k, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > limit) return limit + 1;
  }
  return n;
}

// Binary rows packed 64 symbols per word.
std::vector<std::vector<std::uint64_t>> pack_rows(const std::vector<Row>& rows, int n) {
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> w(words, 0);
    for (int s = 0; s < n; ++s) {
      if (r[s]) w[s / 64] |= std::uint64_t{1} << (s % 64);
    }
    out.push_back(std::move(w));
  }
  return out;
}

int popcount(const std::vector<std::uint64_t>& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

// Visits every codeword in modular p-ary Gray order, nonzero ones only.
// Step n -> n+1 adds generator row j once, where j is the number of trailing
// (p-1) digits of n.
template <class Visit>
void gray_walk(const std::vector<Row>& rows, std::uint32_t p, int n, Visit&& visit) {
  const int k = static_cast<int>(rows.size());
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
  Row acc(static_cast<std::size_t>(n), 0);
  const std::uint64_t total = word_count(p, k, ~std::uint64_t{0} >> 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    int j = 0;
    while (digits[j] == p - 1) digits[j++] = 0;
    ++digits[j];
    const Row& r = rows[j];
    for (int s = 0; s < n; ++s) acc[s] = (acc[s] + r[s]) % p;
    visit(acc);
  }
}

int weight(const Row& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; }));
}

}  // namespace

std::vector<Row> flat_generator_matrix(const QcCode& code) {
  const int m = code.m();
  const int ell = code.ell();
  std::vector<Row> rows;
  for (int i = 0; i < ell; ++i) {
    const int shifts = m - code.generator(i, i).degree();
    PolyVec row = code.basis().row(i);
    for (int s = 0; s < shifts; ++s) {
      rows.push_back(to_flat(row, m));
      row = shift(row, m);
    }
  }
  return rows;
}

int min_distance_exhaustive(const QcCode& code, Traversal order) {
  const std::uint32_t p = code.p();
  const int k = code.dimension();
  if (k == 0) throw EnumerationError("code has dimension 0; minimum distance undefined");
  const std::uint64_t total = word_count(p, k, kMaxDistanceEnumeration);
  if (total > kMaxDistanceEnumeration) {
    throw EnumerationError("refusing to enumerate " + std::to_string(p) + "^" + std::to_string(k) +
                           " codewords (limit 2^18)");
  }
  const auto rows = flat_generator_matrix(code);
  const int n = code.length();
  int best = n;

  if (order == Traversal::kCounting) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
    for (std::uint64_t msg = 1; msg < total; ++msg) {
      std::uint64_t v = msg;
      for (int i = 0; i < k; ++i) {
        digits[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      Row acc(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < k; ++i) {
        if (digits[i] == 0) continue;
        for (int s = 0; s < n; ++s) acc[s] = (acc[s] + digits[i] * rows[i][s]) % p;
      }
      best = std::min(best, weight(acc));
    }
    return best;
  }

  if (p == 2) {
    const auto packed = pack_rows(rows, n);
    std::vector<std::uint64_t> acc(packed.front().size(), 0);
    for (std::uint64_t step = 1; step < total; ++step) {
      const int j = std::countr_zero(step);  // binary reflected Gray code
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= packed[j][w];
      best = std::min(best, popcount(acc));
    }
    return best;
  }
  gray_walk(rows, p, n, [&](const Row& w) { best = std::min(best, weight(w)); });
  return best;
}

NearestResult nearest_codeword(const QcCode& code, const PolyVec& rx) {
  const std::uint32_t p = code.p();
  const int k = code.dimension();
  const std::uint64_t total = word_count(p, k, kMaxNearestEnumeration);
  if (total > kMaxNearestEnumeration) {
    throw EnumerationError("refusing to enumerate " + std::to_string(p) + "^" + std::to_string(k) +
                           " codewords (limit 2^16)");
  }
  PolyVec reduced;
  for (const auto& c : rx) reduced.push_back(c.mod_xm1(code.m()));
  const Row target = to_flat(reduced, code.m());
  const int n = code.length();
  auto distance = [&](const Row& w) {
    int d = 0;
    for (int s = 0; s < n; ++s) d += w[s] != target[s];
    return d;
  };
  NearestResult best;
  Row best_word(static_cast<std::size_t>(n), 0);
  best.distance = distance(best_word);
  best.ties = 1;
  if (k > 0) {
    gray_walk(flat_generator_matrix(code), p, n, [&](const Row& w) {
      const int d = distance(w);
      if (d < best.distance) {
        best.distance = d;
        best.ties = 1;
        best_word = w;
      } else if (d == best.distance) {
        ++best.ties;
      }
    });
  }
  best.codeword = from_flat(best_word, code.ell(), p);
  return best;
}

int sampled_weight_upper_bound(const QcCode& code, std::uint64_t samples, std::uint64_t seed) {
  const std::uint32_t p = code.p();
  const int k = code.dimension();
  const int n = code.length();
  if (k == 0) throw EnumerationError("code has dimension 0");
  const auto rows = flat_generator_matrix(code);
  std::mt19937_64 rng(seed);
  int best = n + 1;
  if (p == 2) {
    const auto packed = pack_rows(rows, n);
    std::vector<std::uint64_t> acc(packed.front().size());
    for (std::uint64_t it = 0; it < samples; ++it) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t bits = 0;
      for (int i = 0; i < k; ++i) {
        if (i % 64 == 0) bits = rng();
        if ((bits >> (i % 64)) & 1) {
          for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= packed[i][w];
        }
      }
      const int wt = popcount(acc);
      if (wt > 0) best = std::min(best, wt);
    }
  } else {
    std::uniform_int_distribution<std::uint32_t> sym(0, p - 1);
    Row acc(static_cast<std::size_t>(n));
    for (std::uint64_t it = 0; it < samples; ++it) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int i = 0; i < k; ++i) {
        const std::uint32_t c = sym(rng);
        if (c == 0) continue;
        for (int s = 0; s < n; ++s) acc[s] = (acc[s] + c * rows[i][s]) % p;
      }
      const int wt = weight(acc);
      if (wt > 0) best = std::min(best, wt);
    }
  }
  return best;
}

bool verify_rank_decomposition(const QcCode& code, const BoundCertificate& cert, const PolyVec& error) {
  if (!cert.witness) throw UsageError("certificate has no witness");
  const Field& field = code.field();
  const Vector& v = *cert.witness;
  const int m = code.m();

  std::vector<int> positions;
  for (int s = 0; s < m; ++s) {
    for (const auto& c : error) {
      if (c.coeff(s) != 0) {
        positions.push_back(s);
        break;
      }
    }
  }
  const int eps = static_cast<int>(positions.size());
  const SyndromeSet synd = syndromes(code, cert, error);
  const DecodingFrame& fr = synd.frame;
  if (eps > fr.radius()) throw UsageError("planted error exceeds the decoding radius");

  const Matrix s_matrix = key_equation_system(synd, eps).first;
  const int rows_per = fr.length - eps;

  Matrix x(field, fr.count * rows_per, eps);
  for (int t = 0; t < fr.count; ++t) {
    for (int i = 0; i < rows_per; ++i) {
      for (int k = 0; k < eps; ++k) {
        const long long e = (fr.first + static_cast<long long>(t) * fr.sequence_step +
                             static_cast<long long>(i) * fr.locator_step) * positions[k];
        x(t * rows_per + i, k) = field.alpha_pow(e);
      }
    }
  }
  Matrix y(field, eps, eps);
  for (int k = 0; k < eps; ++k) {
    FieldElement big = field.zero();
    for (int t = 0; t < code.ell(); ++t) big += field.from_int(error[t].coeff(positions[k])) * v[t];
    y(k, k) = big;
  }
  Matrix xbar(field, eps, eps);
  for (int k = 0; k < eps; ++k) {
    for (int j = 0; j < eps; ++j) {
      xbar(k, j) = field.alpha_pow(static_cast<long long>(j) * fr.locator_step * positions[k]);
    }
  }
  if (!(x * y * xbar == s_matrix)) return false;
  return rank(s_matrix) == eps;
}

}  // namespace qcc
