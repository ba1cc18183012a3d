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

#include "qcc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qcc {
namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.modulus() != b.modulus()) throw UsageError("polynomials over different prime fields");
}

void require_same_field(const ExtPoly& a, const ExtPoly& b) {
  if (!a.field().same_as(b.field())) throw UsageError("polynomials over different fields");
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::monomial(std::uint32_t p, int degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c[degree] = coeff;
  return Poly(p, std::move(c));
}

Poly Poly::x_pow_minus_one(std::uint32_t p, int m) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(m) + 1, 0);
  c[0] = p - 1;
  c[m] = 1;
  return Poly(p, std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p_;
  }
  return Poly(a.p_, std::move(c));
}

Poly Poly::operator-() const {
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p_ - c_[i]) % p_;
  return Poly(p_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.p_);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
  }
  return Poly(a.p_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

Poly Poly::scaled(std::uint32_t s) const {
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = static_cast<std::uint32_t>(std::uint64_t{c_[i]} * (s % p_) % p_);
  }
  return Poly(p_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  require_same_ring(*this, divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  const std::uint64_t p = p_;
  std::vector<std::uint64_t> rem(c_.begin(), c_.end());
  const int dd = divisor.degree();
  const int n = degree();
  if (n < dd) return {Poly(p_), *this};
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(n - dd) + 1, 0);
  const std::uint64_t lead_inv = inv_mod(divisor.leading(), p_);
  for (int i = n; i >= dd; --i) {
    const std::uint64_t c = rem[i] % p;
    if (c == 0) continue;
    const std::uint64_t q = c * lead_inv % p;
    quot[i - dd] = static_cast<std::uint32_t>(q);
    for (int j = 0; j <= dd; ++j) {
      rem[i - dd + j] = (rem[i - dd + j] + (p - q) * divisor.c_[j]) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(p_, std::move(quot)), Poly(p_, std::vector<std::uint32_t>(rem.begin(), rem.end()))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

Poly Poly::mod_xm1(int m) const {
  if (degree() < m) return *this;
  std::vector<std::uint32_t> c(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i % m] = (c[i % m] + c_[i]) % p_;
  return Poly(p_, std::move(c));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << (c_[i] != 1 ? "*" : "") << "X";
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  require_same_ring(a, b);
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly mul_mod_xm1(const Poly& a, const Poly& b, int m) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.modulus());
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(m), 0);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      auto& slot = acc[(i + j) % static_cast<std::size_t>(m)];
      slot = (slot + std::uint64_t{ac[i]} * bc[j]) % p;
    }
  }
  return Poly(a.modulus(), std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

FieldElement eval(const Poly& f, const FieldElement& x) {
  const Field& field = x.field();
  if (f.modulus() != field.characteristic()) {
    throw UsageError("polynomial and point have different characteristic");
  }
  FieldElement acc = field.zero();
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + field.from_int(c[i]);
  return acc;
}

ExtPoly::ExtPoly(const Field& field, Vector coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!field.same_as(c.field())) throw UsageError("coefficient from a different field");
  }
  trim();
}

ExtPoly ExtPoly::lift(const Field& field, const Poly& f) {
  if (f.modulus() != field.characteristic()) {
    throw UsageError("polynomial and field have different characteristic");
  }
  Vector c;
  c.reserve(f.coeffs().size());
  for (auto v : f.coeffs()) c.push_back(field.from_int(v));
  return ExtPoly(field, std::move(c));
}

void ExtPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement ExtPoly::eval(const FieldElement& x) const {
  FieldElement acc = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

ExtPoly operator+(const ExtPoly& a, const ExtPoly& b) {
  require_same_field(a, b);
  Vector c(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return ExtPoly(*a.field_, std::move(c));
}

ExtPoly operator-(const ExtPoly& a, const ExtPoly& b) {
  require_same_field(a, b);
  Vector c(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  }
  return ExtPoly(*a.field_, std::move(c));
}

ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return ExtPoly(*a.field_);
  Vector c(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return ExtPoly(*a.field_, std::move(c));
}

bool ExtPoly::divide_linear(const FieldElement& root) {
  if (c_.empty() || !eval(root).is_zero()) return false;
  // Synthetic division by (X - root).
  Vector q(c_.size() - 1, field_->zero());
  FieldElement carry = field_->zero();
  for (std::size_t i = c_.size(); i-- > 1;) {
    carry = c_[i] + carry * root;
    q[i - 1] = carry;
  }
  c_ = std::move(q);
  trim();
  return true;
}

Poly ExtPoly::descend() const {
  std::vector<std::uint32_t> c;
  c.reserve(c_.size());
  for (const auto& v : c_) {
    if (!field_->in_prime_field(v)) throw DomainError("coefficient outside the prime field");
    c.push_back(v.packed());
  }
  return Poly(field_->characteristic(), std::move(c));
}

CyclotomicCoset cyclotomic_coset(int i, int m, std::uint32_t q) {
  if (m < 1) throw DomainError("modulus m must be positive");
  if (std::gcd(static_cast<long long>(q), static_cast<long long>(m)) != 1) {
    throw DomainError("gcd(q, m) != 1");
  }
  const long long mm = m;
  const long long start = ((i % mm) + mm) % mm;
  std::set<int> members;
  long long x = start;
  do {
    members.insert(static_cast<int>(x));
    x = x * q % mm;
  } while (x != start);
  return {static_cast<int>(start), std::vector<int>(members.begin(), members.end())};
}

std::vector<CyclotomicCoset> cyclotomic_cosets(int m, std::uint32_t q) {
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    auto coset = cyclotomic_coset(i, m, q);
    for (int j : coset.members) seen[j] = true;
    out.push_back(std::move(coset));
  }
  return out;
}

Poly minimal_polynomial(int i, const Field& field) {
  const auto coset = cyclotomic_coset(i, field.root_order(), field.characteristic());
  ExtPoly acc(field, {field.one()});
  for (int j : coset.members) acc = acc * ExtPoly(field, {-field.alpha_pow(j), field.one()});
  return acc.descend();
}

}  // namespace qcc
