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

#include "qcc/decoder.hpp"

namespace qcc {

const char* to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::kLocatorNotFound: return "LOCATOR_NOT_FOUND";
    case FailureReason::kRootDeficit: return "ROOT_DEFICIT";
    case FailureReason::kValuesInconsistent: return "VALUES_INCONSISTENT";
    case FailureReason::kValueNotRepresentable: return "VALUE_NOT_REPRESENTABLE";
    case FailureReason::kNotACodeword: return "NOT_A_CODEWORD";
  }
  return "UNKNOWN";
}

DecodingFrame make_frame(const CertificateParams& c) {
  DecodingFrame frame{c.f, c.z, 1, c.delta - 1, c.nu + 1, false};
  if (frame.length < frame.count) frame = DecodingFrame{c.f, 1, c.z, c.nu + 1, c.delta - 1, true};
  return frame;
}

bool SyndromeSet::all_zero() const {
  for (const auto& s : sequences) {
    for (const auto& x : s) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

ExtPoly SyndromeSet::polynomial(int t) const {
  return ExtPoly(sequences.at(static_cast<std::size_t>(t)).front().field(), sequences[t]);
}

SyndromeSet syndromes(const QcCode& code, const BoundCertificate& cert, const PolyVec& rx) {
  if (!cert.witness) throw UsageError("decoding needs a certificate with an independent witness");
  const auto& p = cert.params;
  if (!cert.eigencode.infinite() && cert.eigencode.distance <= p.delta + p.nu) {
    throw UsageError("decoding needs an eigencode distance above delta + nu");
  }
  if (static_cast<int>(rx.size()) != code.ell()) throw UsageError("received word needs l components");

  const Field& field = code.field();
  SyndromeSet synd{make_frame(p), p, *cert.witness, {}};
  const auto& fr = synd.frame;
  const long long m = code.m();
  for (int t = 0; t < fr.count; ++t) {
    Vector seq;
    for (int i = 0; i < fr.length; ++i) {
      const long long e = (fr.first + static_cast<long long>(i) * fr.locator_step +
                           static_cast<long long>(t) * fr.sequence_step) % m;
      const FieldElement x = field.alpha_pow(e);
      FieldElement s = field.zero();
      for (int j = 0; j < code.ell(); ++j) s += eval(rx[j], x) * synd.witness[j];
      seq.push_back(s);
    }
    synd.sequences.push_back(std::move(seq));
  }
  return synd;
}

std::pair<Matrix, Vector> key_equation_system(const SyndromeSet& synd, int eps) {
  const Field& field = synd.witness.front().field();
  const int rows_per = synd.frame.length - eps;
  if (eps < 0 || rows_per < 0) throw UsageError("trial degree out of range");
  Matrix a(field, 0, eps);
  Vector b;
  for (const auto& s : synd.sequences) {
    for (int i = 0; i < rows_per; ++i) {
      Vector row(s.begin() + i, s.begin() + i + eps);
      a.append_row(row);
      b.push_back(-s[i + eps]);
    }
  }
  return {a, b};
}

ExtPoly solve_key_equations(const SyndromeSet& synd) {
  const Field& field = synd.witness.front().field();
  if (synd.all_zero()) return ExtPoly(field, {field.one()});
  const int tau = synd.frame.radius();
  for (int eps = 1; eps <= tau; ++eps) {
    auto [a, b] = key_equation_system(synd, eps);
    const auto sol = solve(a, b);
    if (!sol || !sol->unique) continue;
    // Unknowns are (L_eps, ..., L_1).
    Vector coeffs(static_cast<std::size_t>(eps) + 1, field.zero());
    coeffs[0] = field.one();
    for (int j = 0; j < eps; ++j) coeffs[eps - j] = sol->x[j];
    return ExtPoly(field, std::move(coeffs));
  }
  throw DecodingFailure(FailureReason::kLocatorNotFound,
                        "no error locator of degree <= " + std::to_string(tau));
}

std::vector<int> find_positions(const Field& field, const DecodingFrame& frame, const ExtPoly& locator) {
  const int m = field.root_order();
  std::vector<int> positions;
  for (int i = 0; i < m; ++i) {
    if (locator.eval(field.alpha_pow(-static_cast<long long>(i) * frame.locator_step)).is_zero()) {
      positions.push_back(i);
    }
  }
  if (static_cast<int>(positions.size()) < locator.degree()) {
    throw DecodingFailure(FailureReason::kRootDeficit,
                          "locator of degree " + std::to_string(locator.degree()) + " has " +
                              std::to_string(positions.size()) + " roots in the locator group");
  }
  return positions;
}

Vector error_values(const SyndromeSet& synd, const std::vector<int>& positions) {
  if (positions.empty()) return {};
  const Field& field = synd.witness.front().field();
  const auto& fr = synd.frame;
  const int eps = static_cast<int>(positions.size());
  auto node = [&](int i, int t, int s) {
    const long long e = (fr.first + static_cast<long long>(i) * fr.locator_step +
                         static_cast<long long>(t) * fr.sequence_step) * s;
    return field.alpha_pow(e);
  };
  Matrix v(field, eps, eps);
  Vector rhs;
  for (int i = 0; i < eps; ++i) {
    for (int k = 0; k < eps; ++k) v(i, k) = node(i, 0, positions[k]);
    rhs.push_back(synd.sequences[0][i]);
  }
  const auto sol = solve(v, rhs);
  if (!sol || !sol->unique) {
    throw DecodingFailure(FailureReason::kValuesInconsistent, "singular error-value system");
  }
  for (const auto& x : sol->x) {
    if (x.is_zero()) throw DecodingFailure(FailureReason::kValuesInconsistent, "zero error value at a located position");
  }
  for (int t = 0; t < fr.count; ++t) {
    for (int i = 0; i < fr.length; ++i) {
      FieldElement s = field.zero();
      for (int k = 0; k < eps; ++k) s += sol->x[k] * node(i, t, positions[k]);
      if (!(s == synd.sequences[t][i])) {
        throw DecodingFailure(FailureReason::kValuesInconsistent,
                              "error values disagree with syndrome S_" + std::to_string(t) + "[" +
                                  std::to_string(i) + "]");
      }
    }
  }
  return sol->x;
}

std::vector<std::vector<std::uint32_t>> recover_symbols(const Field& field, const Vector& witness,
                                                        const Vector& values) {
  const auto fp = Field::prime_field(field.characteristic());
  const int ell = static_cast<int>(witness.size());
  const int r = field.degree();
  Matrix a(*fp, r, ell);
  for (int t = 0; t < ell; ++t) {
    const auto c = field.coordinates(witness[t]);
    for (int k = 0; k < r; ++k) a(k, t) = fp->from_int(c[k]);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& value : values) {
    Vector b;
    for (auto c : field.coordinates(value)) b.push_back(fp->from_int(c));
    const auto sol = solve(a, b);
    if (!sol) {
      throw DecodingFailure(FailureReason::kValueNotRepresentable,
                            "error value " + field.format(value) + " is not in the GF(p)-span of the witness");
    }
    if (!sol->unique) throw UsageError("witness coordinates are not linearly independent over GF(p)");
    std::vector<std::uint32_t> symbols;
    for (const auto& x : sol->x) symbols.push_back(x.packed());
    out.push_back(std::move(symbols));
  }
  return out;
}

DecodeOutcome decode(const QcCode& code, const BoundCertificate& cert, const PolyVec& rx) {
  DecodeOutcome out;
  out.syndromes = syndromes(code, cert, rx);
  const Field& field = code.field();
  try {
    out.locator = solve_key_equations(*out.syndromes);
    auto& err = out.error;
    err.positions = find_positions(field, out.syndromes->frame, *out.locator);
    err.values = error_values(*out.syndromes, err.positions);
    err.symbols = recover_symbols(field, out.syndromes->witness, err.values);

    std::vector<std::vector<std::uint32_t>> comps(static_cast<std::size_t>(code.ell()),
                                                  std::vector<std::uint32_t>(static_cast<std::size_t>(code.m()), 0));
    for (std::size_t k = 0; k < err.positions.size(); ++k) {
      for (int t = 0; t < code.ell(); ++t) comps[t][err.positions[k]] = err.symbols[k][t];
    }
    for (auto& c : comps) err.error_word.emplace_back(code.p(), std::move(c));
    err.symbol_errors = hamming_weight(err.error_word);

    PolyVec received;
    for (const auto& c : rx) received.push_back(c.mod_xm1(code.m()));
    out.codeword = sub(received, err.error_word);
    if (!code.is_codeword(out.codeword)) {
      throw DecodingFailure(FailureReason::kNotACodeword, "corrected word is not a codeword");
    }
    out.success = true;
  } catch (const DecodingFailure& failure) {
    out.success = false;
    out.reason = failure.reason();
    out.detail = failure.what();
    out.codeword.clear();
  }
  return out;
}

}  // namespace qcc
