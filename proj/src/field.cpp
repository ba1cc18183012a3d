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

#include "qcc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qcc/poly.hpp"

namespace qcc {
namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;
constexpr std::uint64_t kTableFieldSize = std::uint64_t{1} << 16;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result(mod.modulus(), {1});
  base = base % mod;
  while (e > 0) {
    if (e & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return result;
}

// Rabin's test.
bool is_irreducible(const Poly& f) {
  const std::uint32_t p = f.modulus();
  const int r = f.degree();
  if (r < 1) return false;
  if (r == 1) return true;
  const Poly x = Poly::monomial(p, 1);
  auto frobenius_power = [&](int k) {
    Poly h = x;
    for (int i = 0; i < k; ++i) h = pow_mod(h, p, f);
    return h;
  };
  if (!((frobenius_power(r) - x) % f).is_zero()) return false;
  for (std::uint64_t d : prime_factors(static_cast<std::uint64_t>(r))) {
    const Poly h = frobenius_power(r / static_cast<int>(d)) - x;
    if (gcd(h, f).degree() != 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

std::uint32_t pack(std::span<const std::uint32_t> coords, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) v = v * p + coords[i];
  return static_cast<std::uint32_t>(v);
}

std::string join_coords(const std::vector<std::uint32_t>& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

}  // namespace

const Field& FieldElement::field() const {
  if (field_ == nullptr) throw UsageError("field element has no field");
  return *field_;
}

FieldElement FieldElement::inverse() const { return field().inv(*this); }
FieldElement FieldElement::pow(long long e) const { return field().pow(*this, e); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return a.field().add(a, b);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a.field().sub(a, b);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return a.field().mul(a, b);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a.field().mul(a, b.field().inv(b));
}
FieldElement FieldElement::operator-() const { return field().neg(*this); }

std::shared_ptr<const Field> Field::create(const FieldSpec& spec) {
  return std::shared_ptr<const Field>(new Field(spec));
}

std::shared_ptr<const Field> Field::prime_field(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[p];
  if (slot) return slot;
  FieldSpec spec;
  spec.p = p;
  spec.r = 1;
  spec.modulus = {0, 1};
  spec.m = 1;
  spec.alpha = std::vector<std::uint32_t>{1};
  slot = create(spec);
  return slot;
}

std::shared_ptr<const Field> Field::for_root_order(std::uint32_t p, int m, int r) {
  if (!is_prime(p)) throw FieldConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1 || std::gcd(static_cast<std::uint64_t>(m), std::uint64_t{p}) != 1) {
    throw FieldConfigError("root order m must be positive and coprime to p");
  }
  int order = 1;
  std::uint64_t acc = p % static_cast<std::uint64_t>(m);
  while (acc != 1 % static_cast<std::uint64_t>(m)) {
    acc = acc * p % static_cast<std::uint64_t>(m);
    ++order;
  }
  if (r == 0) r = order;
  if (r < 1 || r % order != 0) {
    throw FieldConfigError("m = " + std::to_string(m) + " does not divide p^r - 1 for r = " + std::to_string(r));
  }
  if (r > 24) throw FieldConfigError("GF(p^r) too large for this library");
  const std::uint64_t size = ipow(p, r);
  if (size > kMaxFieldSize) throw FieldConfigError("GF(p^r) too large for this library");
  const auto group_order = size - 1;
  const auto factors = prime_factors(group_order);
  // Lower coefficients enumerated as a base-p counter; the first primitive
  // polynomial wins.
  for (std::uint64_t low = 0; low < ipow(p, r); ++low) {
    std::vector<std::uint32_t> coeffs(r + 1);
    std::uint64_t v = low;
    for (int i = 0; i < r; ++i) {
      coeffs[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    coeffs[r] = 1;
    if (coeffs[0] == 0) continue;
    const Poly f(p, coeffs);
    if (!is_irreducible(f)) continue;
    if (r == 1) {
      FieldSpec spec{p, 1, coeffs, m, std::nullopt};
      return create(spec);
    }
    const Poly x = Poly::monomial(p, 1);
    bool primitive = true;
    for (auto q : factors) {
      if (pow_mod(x, group_order / q, f) == Poly(p, {1})) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    return create(FieldSpec{p, r, coeffs, m, std::nullopt});
  }
  throw FieldConfigError("no primitive polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t p = spec_.p;
  if (!is_prime(p)) throw FieldConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (spec_.r < 1) throw FieldConfigError("extension degree r must be positive");
  if (spec_.modulus.size() != static_cast<std::size_t>(spec_.r) + 1) {
    throw FieldConfigError("modulus must have exactly r+1 coefficients");
  }
  for (auto c : spec_.modulus) {
    if (c >= p) throw FieldConfigError("modulus coefficient out of range [0, p)");
  }
  if (spec_.modulus.back() != 1) throw FieldConfigError("modulus must be monic");
  if (spec_.r > 24) throw FieldConfigError("GF(p^r) too large for this library");
  const std::uint64_t size = ipow(p, spec_.r);
  if (size > kMaxFieldSize) throw FieldConfigError("GF(p^r) too large for this library");
  size_ = static_cast<std::uint32_t>(size);
  if (!is_irreducible(Poly(p, spec_.modulus))) {
    throw FieldConfigError("modulus " + join_coords(spec_.modulus) + " is reducible over GF(" +
                           std::to_string(p) + ")");
  }
  const int m = spec_.m;
  if (m < 1) throw FieldConfigError("root order m must be positive");
  if (std::gcd(static_cast<std::uint64_t>(m), std::uint64_t{p}) != 1) {
    throw FieldConfigError("gcd(m, p) != 1: repeated-root codes are not supported");
  }
  const std::uint64_t group_order = size - 1;
  if (group_order % static_cast<std::uint64_t>(m) != 0) {
    throw FieldConfigError("m = " + std::to_string(m) + " does not divide p^r - 1 = " +
                           std::to_string(group_order));
  }

  const auto factors = prime_factors(group_order);
  auto has_order = [&](std::uint32_t a, std::uint64_t order, const std::vector<std::uint64_t>& fs) {
    if (a == 0 || pow_packed(a, order) != 1) return false;
    for (auto q : fs) {
      if (pow_packed(a, order / q) == 1) return false;
    }
    return true;
  };

  // Primitive element: class of X first, then ascending packed values.
  if (spec_.r > 1 && has_order(p, group_order, factors)) {
    primitive_ = p;
  } else {
    for (std::uint32_t a = 1; a < size_; ++a) {
      if (has_order(a, group_order, factors)) {
        primitive_ = a;
        break;
      }
    }
  }

  if (size <= kTableFieldSize) {
    exp_.resize(group_order);
    log_.assign(size_, -1);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < group_order; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::int32_t>(i);
      x = mul_dense(x, primitive_);
    }
  }

  std::uint32_t alpha = 0;
  if (spec_.alpha) {
    if (spec_.alpha->size() != static_cast<std::size_t>(spec_.r)) {
      throw FieldConfigError("alpha must have exactly r coordinates");
    }
    for (auto c : *spec_.alpha) {
      if (c >= p) throw FieldConfigError("alpha coordinate out of range [0, p)");
    }
    alpha = pack(*spec_.alpha, p);
    if (!has_order(alpha, static_cast<std::uint64_t>(m), prime_factors(static_cast<std::uint64_t>(m)))) {
      throw FieldConfigError("alpha does not have multiplicative order " + std::to_string(m));
    }
  } else {
    alpha = pow_packed(primitive_, group_order / static_cast<std::uint64_t>(m));
    std::vector<std::uint32_t> coords(spec_.r);
    std::uint32_t v = alpha;
    for (int i = 0; i < spec_.r; ++i) {
      coords[i] = v % p;
      v /= p;
    }
    spec_.alpha = coords;
  }

  alpha_powers_.resize(m);
  std::uint32_t x = 1;
  for (int i = 0; i < m; ++i) {
    alpha_powers_[i] = x;
    alpha_log_.emplace(x, i);
    x = mul_packed(x, alpha);
  }
}

bool Field::same_as(const Field& other) const { return this == &other || spec_ == other.spec_; }

void Field::check_member(const FieldElement& a) const {
  if (a.field_ == this) return;
  if (a.field_ == nullptr) throw UsageError("field element has no field");
  if (!same_as(*a.field_)) throw UsageError("field elements belong to different fields");
}

std::uint32_t Field::add_packed(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (int i = 0; i < spec_.r; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

std::uint32_t Field::neg_packed(std::uint32_t a) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (int i = 0; i < spec_.r; ++i) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

std::uint32_t Field::mul_dense(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t p = spec_.p;
  const int r = spec_.r;
  std::vector<std::uint64_t> da(r), db(r), prod(2 * r - 1, 0);
  for (int i = 0; i < r; ++i) {
    da[i] = a % p;
    a /= static_cast<std::uint32_t>(p);
    db[i] = b % p;
    b /= static_cast<std::uint32_t>(p);
  }
  for (int i = 0; i < r; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (int d = 2 * r - 2; d >= r; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    // X^r = -(modulus_0 + ... + modulus_{r-1} X^{r-1})
    for (int i = 0; i < r; ++i) {
      prod[d - r + i] = (prod[d - r + i] + (p - c) * spec_.modulus[i]) % p;
    }
    prod[d] = 0;
  }
  std::uint64_t out = 0;
  for (int i = r; i-- > 0;) out = out * p + prod[i];
  return static_cast<std::uint32_t>(out);
}

std::uint32_t Field::mul_packed(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    const auto n = exp_.size();
    return exp_[(static_cast<std::size_t>(log_[a]) + static_cast<std::size_t>(log_[b])) % n];
  }
  return mul_dense(a, b);
}

std::uint32_t Field::pow_packed(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul_packed(result, a);
    a = mul_packed(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement Field::alpha_pow(long long e) const {
  const long long m = spec_.m;
  const long long idx = ((e % m) + m) % m;
  return {this, alpha_powers_[static_cast<std::size_t>(idx)]};
}

FieldElement Field::from_int(long long c) const {
  const long long p = spec_.p;
  return {this, static_cast<std::uint32_t>(((c % p) + p) % p)};
}

FieldElement Field::from_coordinates(std::span<const std::uint32_t> coords) const {
  if (coords.size() != static_cast<std::size_t>(spec_.r)) {
    throw UsageError("expected " + std::to_string(spec_.r) + " coordinates");
  }
  for (auto c : coords) {
    if (c >= spec_.p) throw UsageError("coordinate out of range [0, p)");
  }
  return {this, pack(coords, spec_.p)};
}

FieldElement Field::from_packed(std::uint32_t packed) const {
  if (packed >= size_) throw UsageError("packed value outside the field");
  return {this, packed};
}

std::vector<std::uint32_t> Field::coordinates(const FieldElement& a) const {
  check_member(a);
  std::vector<std::uint32_t> out(spec_.r);
  std::uint32_t v = a.value_;
  for (int i = 0; i < spec_.r; ++i) {
    out[i] = v % spec_.p;
    v /= spec_.p;
  }
  return out;
}

bool Field::in_prime_field(const FieldElement& a) const {
  check_member(a);
  return a.value_ < spec_.p;
}

std::optional<int> Field::log_alpha(const FieldElement& a) const {
  check_member(a);
  auto it = alpha_log_.find(a.value_);
  if (it == alpha_log_.end()) return std::nullopt;
  return it->second;
}

std::string Field::format(const FieldElement& a) const {
  if (a.is_zero()) return "0";
  if (auto e = log_alpha(a)) return "a^" + std::to_string(*e);
  return join_coords(coordinates(a));
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check_member(a);
  check_member(b);
  return {this, add_packed(a.value_, b.value_)};
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check_member(a);
  check_member(b);
  return {this, add_packed(a.value_, neg_packed(b.value_))};
}

FieldElement Field::neg(const FieldElement& a) const {
  check_member(a);
  return {this, neg_packed(a.value_)};
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check_member(a);
  check_member(b);
  return {this, mul_packed(a.value_, b.value_)};
}

FieldElement Field::inv(const FieldElement& a) const {
  check_member(a);
  if (a.value_ == 0) throw DomainError("inverse of zero");
  if (!log_.empty()) {
    const auto n = exp_.size();
    return {this, exp_[(n - static_cast<std::size_t>(log_[a.value_])) % n]};
  }
  return {this, pow_packed(a.value_, size_ - 2)};
}

FieldElement Field::pow(const FieldElement& a, long long e) const {
  check_member(a);
  if (e < 0) return pow(inv(a), -e);
  return {this, pow_packed(a.value_, static_cast<std::uint64_t>(e))};
}

}  // namespace qcc
