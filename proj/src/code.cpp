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

#include "qcc/code.hpp"

#include <sstream>

namespace qcc {
namespace {

std::string describe(const std::vector<ConditionViolation>& vs) {
  std::ostringstream os;
  os << "invalid generator matrix:";
  for (const auto& v : vs) os << "\n  condition " << v.condition << ": " << v.message;
  return os.str();
}

std::string entry_name(int i, int j) {
  return "g_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// Cancels components start, start+1, ... against the diagonal entries. On
// success the quotients are written to message[start..].
bool reduce_from(PolyVec& word, const GroebnerMatrix& g, int start, PolyVec* message) {
  for (int i = start; i < g.ell; ++i) {
    auto [q, rem] = word[i].divmod(g.at(i, i));
    if (!rem.is_zero()) return false;
    word[i] = Poly(rem.modulus());
    for (int j = i + 1; j < g.ell; ++j) word[j] = word[j] - mul_mod_xm1(q, g.at(i, j), g.m);
    if (message) (*message)[i] = std::move(q);
  }
  return true;
}

}  // namespace

PolyVec GroebnerMatrix::row(int i) const {
  return PolyVec(entries.begin() + static_cast<std::ptrdiff_t>(i) * ell,
                 entries.begin() + static_cast<std::ptrdiff_t>(i + 1) * ell);
}

InvalidCode::InvalidCode(std::vector<ConditionViolation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

std::vector<ConditionViolation> QcCode::check(const GroebnerMatrix& g, const Field& field) {
  std::vector<ConditionViolation> out;
  const std::uint32_t p = field.characteristic();
  if (g.ell < 1 || g.entries.size() != static_cast<std::size_t>(g.ell) * g.ell) {
    out.push_back({0, -1, -1, "matrix must be l x l with l >= 1"});
    return out;
  }
  if (g.m != field.root_order()) {
    out.push_back({0, -1, -1,
                   "co-index m = " + std::to_string(g.m) + " differs from the field's root order " +
                       std::to_string(field.root_order())});
    return out;
  }
  for (const auto& e : g.entries) {
    if (e.modulus() != p) {
      out.push_back({0, -1, -1, "entry over GF(" + std::to_string(e.modulus()) + ") in a GF(" +
                                    std::to_string(p) + ") code"});
      return out;
    }
  }

  const Poly xm1 = Poly::x_pow_minus_one(p, g.m);
  for (int i = 0; i < g.ell; ++i) {
    for (int j = 0; j < i; ++j) {
      if (!g.at(i, j).is_zero()) {
        out.push_back({1, i, j, entry_name(i, j) + " below the diagonal must be zero"});
      }
    }
  }
  for (int i = 0; i < g.ell; ++i) {
    const Poly& d = g.at(i, i);
    for (int j = 0; j < i; ++j) {
      if (g.at(j, i).degree() >= d.degree()) {
        out.push_back({2, j, i,
                       "deg " + entry_name(j, i) + " = " + std::to_string(g.at(j, i).degree()) +
                           " is not below deg " + entry_name(i, i) + " = " + std::to_string(d.degree())});
      }
    }
  }
  for (int i = 0; i < g.ell; ++i) {
    const Poly& d = g.at(i, i);
    if (d.is_zero() || !(xm1 % d).is_zero()) {
      out.push_back({3, i, i, "g_{i,i} does not divide X^m-1 (i = " + std::to_string(i) + ")"});
    }
  }
  for (int i = 0; i < g.ell; ++i) {
    if (!(g.at(i, i).monic() == xm1)) continue;
    for (int j = i + 1; j < g.ell; ++j) {
      if (!g.at(i, j).is_zero()) {
        out.push_back({4, i, j, entry_name(i, i) + " = X^m-1 but " + entry_name(i, j) + " is nonzero"});
      }
    }
  }
  if (!out.empty()) return out;

  for (int i = 0; i < g.ell; ++i) {
    const Poly h = xm1 / g.at(i, i);
    PolyVec w(static_cast<std::size_t>(g.ell), Poly(p));
    for (int j = i + 1; j < g.ell; ++j) w[j] = mul_mod_xm1(h, g.at(i, j), g.m);
    if (!reduce_from(w, g, i + 1, nullptr)) {
      out.push_back({5, i, -1,
                     "(X^m-1)/" + entry_name(i, i) + " times row " + std::to_string(i) +
                         " is not generated by the rows below it"});
    }
  }
  return out;
}

QcCode QcCode::validate(GroebnerMatrix basis, std::shared_ptr<const Field> field) {
  if (!field) throw UsageError("code needs a field");
  auto violations = check(basis, *field);
  if (!violations.empty()) throw InvalidCode(std::move(violations));
  return QcCode(std::move(field), std::move(basis));
}

QcCode::QcCode(std::shared_ptr<const Field> field, GroebnerMatrix basis)
    : field_(std::move(field)), basis_(std::move(basis)) {
  k_ = basis_.m * basis_.ell;
  for (int i = 0; i < basis_.ell; ++i) k_ -= basis_.at(i, i).degree();
}

PolyVec QcCode::zero_word() const { return PolyVec(static_cast<std::size_t>(ell()), Poly(p())); }

PolyVec QcCode::encode(const PolyVec& message) const {
  if (static_cast<int>(message.size()) != ell()) throw UsageError("message needs l components");
  PolyVec out = zero_word();
  for (int i = 0; i < ell(); ++i) {
    const Poly a = message[i].mod_xm1(m());
    if (a.is_zero()) continue;
    for (int j = i; j < ell(); ++j) out[j] = out[j] + mul_mod_xm1(a, basis_.at(i, j), m());
  }
  return out;
}

std::optional<PolyVec> QcCode::message_of(const PolyVec& word) const {
  if (static_cast<int>(word.size()) != ell()) throw UsageError("word needs l components");
  PolyVec w;
  w.reserve(word.size());
  for (const auto& c : word) {
    if (c.modulus() != p()) throw UsageError("word over a different prime field");
    w.push_back(c.mod_xm1(m()));
  }
  PolyVec message = zero_word();
  if (!reduce_from(w, basis_, 0, &message)) return std::nullopt;
  return message;
}

PolyVec shift(const PolyVec& word, int m) {
  PolyVec out;
  out.reserve(word.size());
  for (const auto& c : word) {
    out.push_back(mul_mod_xm1(c, Poly::monomial(c.modulus(), 1), m));
  }
  return out;
}

std::vector<std::uint32_t> to_flat(const PolyVec& word, int m) {
  const std::size_t ell = word.size();
  std::vector<std::uint32_t> flat(ell * static_cast<std::size_t>(m), 0);
  for (std::size_t t = 0; t < ell; ++t) {
    if (word[t].degree() >= m) throw UsageError("component degree must be below m");
    for (int s = 0; s < m; ++s) flat[static_cast<std::size_t>(s) * ell + t] = word[t].coeff(s);
  }
  return flat;
}

PolyVec from_flat(const std::vector<std::uint32_t>& flat, int ell, std::uint32_t p) {
  if (ell < 1 || flat.size() % static_cast<std::size_t>(ell) != 0) {
    throw UsageError("flat word length is not a multiple of l");
  }
  const std::size_t m = flat.size() / static_cast<std::size_t>(ell);
  PolyVec out;
  for (int t = 0; t < ell; ++t) {
    std::vector<std::uint32_t> c(m);
    for (std::size_t s = 0; s < m; ++s) {
      const auto v = flat[s * static_cast<std::size_t>(ell) + static_cast<std::size_t>(t)];
      if (v >= p) throw UsageError("symbol out of range [0, p)");
      c[s] = v;
    }
    out.emplace_back(p, std::move(c));
  }
  return out;
}

int hamming_weight(const PolyVec& word) {
  int w = 0;
  for (const auto& c : word) {
    for (auto v : c.coeffs()) w += v != 0;
  }
  return w;
}

PolyVec add(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw UsageError("words of different length");
  PolyVec out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

PolyVec sub(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw UsageError("words of different length");
  PolyVec out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

}  // namespace qcc
