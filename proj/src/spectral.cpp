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

#include "qcc/spectral.hpp"

#include <algorithm>
#include <random>

namespace qcc {
namespace {

int root_multiplicity(ExtPoly f, const FieldElement& root) {
  int mult = 0;
  while (!f.is_zero() && f.divide_linear(root)) ++mult;
  return mult;
}

// Annihilator of span(basis): rows y with y . b = 0 for every b.
std::vector<Vector> annihilator(const Eigenspace& s, const Field& field) {
  if (s.basis.empty()) {
    std::vector<Vector> all;
    for (int i = 0; i < s.ell; ++i) {
      Vector e(static_cast<std::size_t>(s.ell), field.zero());
      e[i] = field.one();
      all.push_back(std::move(e));
    }
    return all;
  }
  return kernel(Matrix::from_rows(field, s.basis, s.ell));
}

}  // namespace

Matrix evaluate_generator(const QcCode& code, const FieldElement& x) {
  const Field& field = code.field();
  Matrix g(field, code.ell(), code.ell());
  for (int i = 0; i < code.ell(); ++i) {
    for (int j = i; j < code.ell(); ++j) g(i, j) = eval(code.generator(i, j), x);
  }
  return g;
}

bool is_eigenvalue_exponent(const QcCode& code, int e) {
  const FieldElement x = code.field().alpha_pow(e);
  for (int i = 0; i < code.ell(); ++i) {
    if (eval(code.generator(i, i), x).is_zero()) return true;
  }
  return false;
}

std::vector<Eigenvalue> eigenvalues(const QcCode& code) {
  const Field& field = code.field();
  std::vector<ExtPoly> diagonal;
  for (int i = 0; i < code.ell(); ++i) diagonal.push_back(ExtPoly::lift(field, code.generator(i, i)));
  std::vector<Eigenvalue> out;
  for (int e = 0; e < code.m(); ++e) {
    const FieldElement x = field.alpha_pow(e);
    int alg = 0;
    for (const auto& d : diagonal) alg += root_multiplicity(d, x);
    if (alg == 0) continue;
    const int geo = code.ell() - rank(evaluate_generator(code, x));
    out.push_back({e, alg, geo});
  }
  return out;
}

Eigenspace eigenspace(const QcCode& code, int e) {
  const int m = code.m();
  const int exp = ((e % m) + m) % m;
  Eigenspace s{code.ell(), {exp}, {}};
  if (!is_eigenvalue_exponent(code, exp)) return s;
  s.basis = kernel(evaluate_generator(code, code.field().alpha_pow(exp)));
  return s;
}

Eigenspace intersect(std::span<const Eigenspace> spaces) {
  if (spaces.empty()) throw UsageError("intersection of an empty list of spaces");
  const int ell = spaces.front().ell;
  for (const auto& s : spaces) {
    if (s.ell != ell) throw UsageError("spaces of different ambient dimension");
  }
  if (spaces.size() == 1) return spaces.front();

  const Field* field = nullptr;
  for (const auto& s : spaces) {
    if (!s.basis.empty()) {
      field = &s.basis.front().front().field();
      break;
    }
  }
  Eigenspace out{ell, {}, {}};
  for (const auto& s : spaces) out.exponents.insert(out.exponents.end(), s.exponents.begin(), s.exponents.end());
  std::sort(out.exponents.begin(), out.exponents.end());
  out.exponents.erase(std::unique(out.exponents.begin(), out.exponents.end()), out.exponents.end());
  if (field == nullptr) return out;  // some space is zero-dimensional

  Matrix constraints(*field, 0, ell);
  for (const auto& s : spaces) {
    if (s.basis.empty()) return out;
    if (s.dimension() == ell) continue;
    for (const auto& row : annihilator(s, *field)) constraints.append_row(row);
    out.basis = kernel(constraints);
    if (out.basis.empty()) return out;
  }
  out.basis = kernel(constraints);
  return out;
}

EigencodeInfo eigencode(const Eigenspace& space, const Field& field) {
  const std::uint32_t p = field.characteristic();
  const auto fp = Field::prime_field(p);
  const int ell = space.ell;
  const int r = field.degree();
  Matrix constraints(*fp, 0, ell);
  for (const auto& v : space.basis) {
    std::vector<std::vector<std::uint32_t>> coords;
    for (const auto& x : v) coords.push_back(field.coordinates(x));
    for (int k = 0; k < r; ++k) {
      Vector row;
      for (int t = 0; t < ell; ++t) row.push_back(fp->from_int(coords[t][k]));
      constraints.append_row(row);
    }
  }
  EigencodeInfo info;
  for (const auto& g : kernel(constraints)) {
    std::vector<std::uint32_t> gen;
    for (const auto& x : g) gen.push_back(x.packed());
    info.generators.push_back(std::move(gen));
  }
  const int k = info.dimension();
  if (k == 0) return info;

  std::uint64_t words = 1;
  for (int i = 0; i < k && words <= EigencodeInfo::kMaxEnumeration; ++i) words *= p;
  if (words > EigencodeInfo::kMaxEnumeration) {
    info.distance = 1;
    info.distance_exact = false;
    return info;
  }
  int best = ell + 1;
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
  for (std::uint64_t n = 1; n < words; ++n) {
    for (int i = 0; i < k; ++i) {  // base-p counter
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    int w = 0;
    for (int t = 0; t < ell; ++t) {
      std::uint64_t s = 0;
      for (int i = 0; i < k; ++i) s += std::uint64_t{digits[i]} * info.generators[i][t];
      w += (s % p) != 0;
    }
    best = std::min(best, w);
  }
  info.distance = best;
  return info;
}

bool has_independent_coordinates(const Vector& v, const Field& field) {
  const int ell = static_cast<int>(v.size());
  if (ell == 0 || ell > field.degree()) return false;
  const auto fp = Field::prime_field(field.characteristic());
  Matrix coords(*fp, ell, field.degree());
  for (int t = 0; t < ell; ++t) {
    const auto c = field.coordinates(v[t]);
    for (int k = 0; k < field.degree(); ++k) coords(t, k) = fp->from_int(c[k]);
  }
  return rank(coords) == ell;
}

std::optional<Vector> independent_witness(const Eigenspace& space, const Field& field, std::uint64_t seed) {
  const auto& basis = space.basis;
  const int d = space.dimension();
  if (d == 0) return std::nullopt;
  for (const auto& b : basis) {
    if (has_independent_coordinates(b, field)) return b;
  }

  const std::uint32_t p = field.characteristic();
  auto combine = [&](const std::vector<int>& idx, const std::vector<std::uint32_t>& coeff) {
    Vector v(static_cast<std::size_t>(space.ell), field.zero());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const FieldElement c = field.from_int(coeff[i]);
      for (int t = 0; t < space.ell; ++t) v[t] += c * basis[idx[i]][t];
    }
    return v;
  };
  // Subsets of size 2 and 3 with all-nonzero GF(p) coefficients.
  for (int size = 2; size <= std::min(3, d); ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::vector<bool> pick(static_cast<std::size_t>(d), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      idx.clear();
      for (int i = 0; i < d; ++i) {
        if (pick[i]) idx.push_back(i);
      }
      std::vector<std::uint32_t> coeff(static_cast<std::size_t>(size), 1);
      while (true) {
        Vector v = combine(idx, coeff);
        if (has_independent_coordinates(v, field)) return v;
        int pos = 0;
        while (pos < size && ++coeff[pos] == p) coeff[pos++] = 1;
        if (pos == size) break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_elem(0, field.order() - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vector v(static_cast<std::size_t>(space.ell), field.zero());
    for (const auto& b : basis) {
      const FieldElement c = field.from_packed(pick_elem(rng));
      for (int t = 0; t < space.ell; ++t) v[t] += c * b[t];
    }
    if (has_independent_coordinates(v, field)) return v;
  }
  return std::nullopt;
}

}  // namespace qcc
