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

#include "io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qcc::io {
namespace {

void check_keys(const Json& doc, const std::string& where, const std::set<std::string>& allowed,
                const std::set<std::string>& required) {
  if (!doc.is_object()) throw ParseError(where + ": expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown key \"" + key + "\"");
  }
  for (const auto& key : required) {
    if (!doc.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
  }
}

long long get_int(const Json& doc, const std::string& key, const std::string& where) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<long long>();
}

std::vector<std::uint32_t> get_symbols(const Json& v, std::uint32_t p, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of integers");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& x = v[i];
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= p) {
      throw ParseError(where + "[" + std::to_string(i) + "]: expected an integer in [0, " + std::to_string(p) + ")");
    }
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

Json symbols_json(const std::vector<std::uint32_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot write file");
  out << doc.dump(2) << '\n';
}

QcCode parse_code(const Json& doc, const std::string& where) {
  check_keys(doc, where, {"p", "r", "modulus", "m", "alpha", "ell", "generators"}, {"p", "m", "ell", "generators"});
  const long long p_raw = get_int(doc, "p", where);
  const long long m = get_int(doc, "m", where);
  const long long ell = get_int(doc, "ell", where);
  if (p_raw < 2 || p_raw > (1LL << 24)) throw ParseError(where + ".p: out of range");
  if (m < 1 || m > (1LL << 24)) throw ParseError(where + ".m: out of range");
  if (ell < 1 || ell > 64) throw ParseError(where + ".ell: out of range [1, 64]");
  const auto p = static_cast<std::uint32_t>(p_raw);

  std::shared_ptr<const Field> field;
  if (doc.contains("modulus")) {
    FieldSpec spec;
    spec.p = p;
    spec.m = static_cast<int>(m);
    spec.modulus = get_symbols(doc.at("modulus"), p, where + ".modulus");
    spec.r = doc.contains("r") ? static_cast<int>(get_int(doc, "r", where))
                               : static_cast<int>(spec.modulus.size()) - 1;
    if (doc.contains("alpha")) spec.alpha = get_symbols(doc.at("alpha"), p, where + ".alpha");
    field = Field::create(spec);
  } else {
    if (doc.contains("alpha")) throw ParseError(where + ".alpha: needs an explicit modulus");
    const int r = doc.contains("r") ? static_cast<int>(get_int(doc, "r", where)) : 0;
    field = Field::for_root_order(p, static_cast<int>(m), r);
  }

  const auto& gens = doc.at("generators");
  const std::string gw = where + ".generators";
  if (!gens.is_array() || gens.size() != static_cast<std::size_t>(ell)) {
    throw ParseError(gw + ": expected " + std::to_string(ell) + " rows");
  }
  GroebnerMatrix g(static_cast<int>(ell), static_cast<int>(m), p);
  for (int i = 0; i < ell; ++i) {
    const auto& row = gens[i];
    const std::string rw = gw + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(ell)) {
      throw ParseError(rw + ": expected " + std::to_string(ell) + " entries");
    }
    for (int j = 0; j < ell; ++j) {
      g.at(i, j) = Poly(p, get_symbols(row[j], p, rw + "[" + std::to_string(j) + "]"));
    }
  }
  return QcCode::validate(std::move(g), field);
}

Json code_to_json(const QcCode& code) {
  const auto& spec = code.field().spec();
  Json doc;
  doc["p"] = spec.p;
  doc["r"] = spec.r;
  doc["modulus"] = symbols_json(spec.modulus);
  doc["m"] = spec.m;
  doc["alpha"] = symbols_json(*spec.alpha);
  doc["ell"] = code.ell();
  Json gens = Json::array();
  for (int i = 0; i < code.ell(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < code.ell(); ++j) row.push_back(symbols_json(code.generator(i, j).coeffs()));
    gens.push_back(row);
  }
  doc["generators"] = gens;
  return doc;
}

QcCode load_code(const std::string& path) { return parse_code(read_json(path), path); }

BoundCertificate parse_certificate(const Json& doc, const QcCode& code, const std::string& where) {
  check_keys(doc, where, {"f", "z", "delta", "nu", "witness"}, {"f", "z", "delta", "nu"});
  CertificateParams params;
  params.f = static_cast<int>(get_int(doc, "f", where));
  params.z = static_cast<int>(get_int(doc, "z", where));
  params.delta = static_cast<int>(get_int(doc, "delta", where));
  params.nu = static_cast<int>(get_int(doc, "nu", where));
  BoundCertificate cert = verify_certificate(code, params);
  if (doc.contains("witness")) {
    const auto& w = doc.at("witness");
    const std::string ww = where + ".witness";
    if (!w.is_array() || w.size() != static_cast<std::size_t>(code.ell())) {
      throw ParseError(ww + ": expected " + std::to_string(code.ell()) + " coordinate lists");
    }
    Vector v;
    for (int t = 0; t < code.ell(); ++t) {
      const auto coords = get_symbols(w[t], code.p(), ww + "[" + std::to_string(t) + "]");
      if (coords.size() != static_cast<std::size_t>(code.field().degree())) {
        throw ParseError(ww + "[" + std::to_string(t) + "]: expected " + std::to_string(code.field().degree()) +
                         " coordinates");
      }
      v.push_back(code.field().from_coordinates(coords));
    }
    attach_witness(cert, code, v);
  }
  return cert;
}

Json certificate_to_json(const BoundCertificate& cert, const Field& field) {
  Json doc;
  doc["f"] = cert.params.f;
  doc["z"] = cert.params.z;
  doc["delta"] = cert.params.delta;
  doc["nu"] = cert.params.nu;
  if (cert.witness) {
    Json w = Json::array();
    for (const auto& x : *cert.witness) w.push_back(symbols_json(field.coordinates(x)));
    doc["witness"] = w;
  }
  return doc;
}

BoundCertificate load_certificate(const std::string& path, const QcCode& code) {
  return parse_certificate(read_json(path), code, path);
}

PolyVec parse_word(const Json& doc, const QcCode& code, const std::string& where) {
  check_keys(doc, where, {"word"}, {"word"});
  const auto flat = get_symbols(doc.at("word"), code.p(), where + ".word");
  if (flat.size() != static_cast<std::size_t>(code.length())) {
    throw ParseError(where + ".word: expected " + std::to_string(code.length()) + " symbols, got " +
                     std::to_string(flat.size()));
  }
  return from_flat(flat, code.ell(), code.p());
}

Json word_to_json(const PolyVec& word, int m) {
  Json doc;
  doc["word"] = symbols_json(to_flat(word, m));
  return doc;
}

PolyVec load_word(const std::string& path, const QcCode& code) {
  return parse_word(read_json(path), code, path);
}

PolyVec parse_message(const Json& doc, const QcCode& code, const std::string& where) {
  check_keys(doc, where, {"message"}, {"message"});
  const auto& msg = doc.at("message");
  if (!msg.is_array() || msg.size() != static_cast<std::size_t>(code.ell())) {
    throw ParseError(where + ".message: expected " + std::to_string(code.ell()) + " polynomials");
  }
  PolyVec out;
  for (int i = 0; i < code.ell(); ++i) {
    out.emplace_back(code.p(), get_symbols(msg[i], code.p(), where + ".message[" + std::to_string(i) + "]"));
  }
  return out;
}

PolyVec load_message(const std::string& path, const QcCode& code) {
  return parse_message(read_json(path), code, path);
}

}  // namespace qcc::io
