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

#include "commands.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "qcc/bound.hpp"
#include "qcc/decoder.hpp"
#include "qcc/errors.hpp"
#include "qcc/oracle.hpp"
#include "qcc/spectral.hpp"

namespace qcc::cli {
namespace {

using io::Json;

struct Options {
  std::string code_path;
  std::string cert_path;
  std::string rx_path;
  std::string message_path;
  std::string out_path;
  std::string cert_out_path;
  std::string format = "text";
  std::string method = "brute";
  int max_nu = 2;
  int f = 0;
  int z = 1;
  int delta = 3;
  int nu = 0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

std::string join(const std::vector<std::string>& items, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

std::vector<std::string> format_vector(const Field& field, const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(field.format(x));
  return out;
}

template <typename T>
std::vector<std::string> format_ints(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

std::string distance_text(const EigencodeInfo& ec) {
  if (ec.infinite()) return "inf";
  return (ec.distance_exact ? "" : ">=") + std::to_string(ec.distance);
}

Json distance_json(const EigencodeInfo& ec) {
  if (ec.infinite()) return "inf";
  return ec.distance;
}

Json certificate_report(const BoundCertificate& cert, const Field& field) {
  Json j;
  j["f"] = cert.params.f;
  j["z"] = cert.params.z;
  j["delta"] = cert.params.delta;
  j["nu"] = cert.params.nu;
  j["dstar"] = cert.dstar;
  j["exponents"] = cert.exponents;
  j["intersection_dimension"] = cert.intersection.dimension();
  j["eigencode_dimension"] = cert.eigencode.dimension();
  j["eigencode_distance"] = distance_json(cert.eigencode);
  j["eigencode_distance_exact"] = cert.eigencode.distance_exact;
  if (cert.witness) {
    j["witness"] = format_vector(field, *cert.witness);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string certificate_line(const BoundCertificate& cert, const Field& field) {
  std::ostringstream s;
  s << "d*=" << cert.dstar << " f=" << cert.params.f << " z=" << cert.params.z << " delta=" << cert.params.delta
    << " nu=" << cert.params.nu << " dec=" << distance_text(cert.eigencode) << " witness=";
  if (cert.witness) {
    s << "(" << join(format_vector(field, *cert.witness), ", ") << ")";
  } else {
    s << "none";
  }
  return s.str();
}

std::string flat_text(const PolyVec& word, int m) { return join(format_ints(to_flat(word, m))); }

void emit(const Options& opt, std::ostream& out, const Json& report, const std::string& text) {
  if (opt.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    out << text;
  }
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  if (opt.max_nu < 0) throw UsageError("--max-nu must be >= 0");
  const QcCode code = io::load_code(opt.code_path);
  const Field& field = code.field();
  const auto eig = eigenvalues(code);

  Json report;
  std::ostringstream text;
  report["n"] = code.length();
  report["k"] = code.dimension();
  report["p"] = code.p();
  report["r"] = field.degree();
  report["m"] = code.m();
  report["ell"] = code.ell();
  text << "code: p=" << code.p() << " r=" << field.degree() << " m=" << code.m() << " ell=" << code.ell() << '\n';
  text << "parameters: [" << code.length() << ", " << code.dimension() << "]\n";

  Json eig_json = Json::array();
  text << "eigenvalues: " << eig.size() << " (exponent algebraic geometric)\n";
  for (const auto& e : eig) {
    eig_json.push_back({{"exponent", e.exponent}, {"algebraic", e.algebraic_mult}, {"geometric", e.geometric_mult}});
    text << "  " << e.exponent << ' ' << e.algebraic_mult << ' ' << e.geometric_mult << '\n';
  }
  report["eigenvalues"] = eig_json;

  std::optional<BoundCertificate> best;
  Json bounds = Json::array();
  text << "bounds:\n";
  for (int nu = 0; nu <= opt.max_nu; ++nu) {
    auto cert = best_bound_for_nu(code, nu);
    if (!cert) {
      bounds.push_back({{"nu", nu}, {"certificate", nullptr}});
      text << "  nu=" << nu << ": none\n";
      continue;
    }
    bounds.push_back({{"nu", nu}, {"certificate", certificate_report(*cert, field)}});
    text << "  nu=" << nu << ": " << certificate_line(*cert, field) << '\n';
    if (!best || cert->dstar > best->dstar) best = std::move(cert);
  }
  report["bounds"] = bounds;
  if (best) {
    report["dstar"] = best->dstar;
    report["best"] = certificate_report(*best, field);
    text << "d* = " << best->dstar << " via f=" << best->params.f << " z=" << best->params.z
         << " delta=" << best->params.delta << " nu=" << best->params.nu << '\n';
    if (!opt.cert_out_path.empty()) io::write_json(opt.cert_out_path, io::certificate_to_json(*best, field));
  } else {
    report["dstar"] = nullptr;
    text << "d* = none (no certificate with delta > 2)\n";
  }
  emit(opt, out, report, text.str());
  return kExitOk;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  const QcCode code = io::load_code(opt.code_path);
  const BoundCertificate cert = verify_certificate(code, {opt.f, opt.z, opt.delta, opt.nu});
  const Field& field = code.field();
  std::ostringstream text;
  text << "exponents: " << join(format_ints(cert.exponents)) << '\n';
  text << "intersection dimension: " << cert.intersection.dimension() << '\n';
  text << "eigencode: dimension " << cert.eigencode.dimension() << ", distance " << distance_text(cert.eigencode)
       << '\n';
  text << "certificate: " << certificate_line(cert, field) << '\n';
  if (!cert.witness) text << "warning: no witness eigenvector; the certificate bounds d but cannot drive decoding\n";
  if (!opt.out_path.empty()) io::write_json(opt.out_path, io::certificate_to_json(cert, field));
  emit(opt, out, certificate_report(cert, field), text.str());
  return kExitOk;
}

int cmd_encode(const Options& opt, std::ostream& out) {
  const QcCode code = io::load_code(opt.code_path);
  const PolyVec message = io::load_message(opt.message_path, code);
  const PolyVec word = code.encode(message);
  const Json doc = io::word_to_json(word, code.m());
  if (!opt.out_path.empty()) {
    io::write_json(opt.out_path, doc);
    emit(opt, out, {{"weight", hamming_weight(word)}, {"out", opt.out_path}},
         "codeword written to " + opt.out_path + " (weight " + std::to_string(hamming_weight(word)) + ")\n");
  } else {
    emit(opt, out, doc, "codeword: " + flat_text(word, code.m()) + '\n');
  }
  return kExitOk;
}

int cmd_decode(const Options& opt, std::ostream& out, std::ostream& err) {
  const QcCode code = io::load_code(opt.code_path);
  const Field& field = code.field();
  const PolyVec rx = io::load_word(opt.rx_path, code);
  BoundCertificate cert =
      opt.cert_path.empty() ? best_bound(code, opt.max_nu) : io::load_certificate(opt.cert_path, code);
  if (!cert.witness) {
    throw UsageError("certificate f=" + std::to_string(cert.params.f) + " z=" + std::to_string(cert.params.z) +
                     " delta=" + std::to_string(cert.params.delta) + " nu=" + std::to_string(cert.params.nu) +
                     " has no witness eigenvector; supply one in the certificate file");
  }

  const DecodeOutcome res = decode(code, cert, rx);
  Json report;
  std::ostringstream text;
  report["certificate"] = certificate_report(cert, field);
  text << "certificate: " << certificate_line(cert, field) << '\n';
  if (res.syndromes) {
    const auto& fr = res.syndromes->frame;
    report["frame"] = {{"first", fr.first},
                       {"locator_step", fr.locator_step},
                       {"sequence_step", fr.sequence_step},
                       {"length", fr.length},
                       {"count", fr.count},
                       {"swapped", fr.swapped},
                       {"radius", fr.radius()}};
    text << "radius: " << fr.radius() << (fr.swapped ? " (axes swapped)" : "") << '\n';
    Json seqs = Json::array();
    text << "syndromes:\n";
    for (std::size_t t = 0; t < res.syndromes->sequences.size(); ++t) {
      const auto s = format_vector(field, res.syndromes->sequences[t]);
      seqs.push_back(s);
      text << "  S" << t << ": " << join(s) << '\n';
    }
    report["syndromes"] = seqs;
  }
  if (res.locator) {
    const auto l = format_vector(field, res.locator->coeffs());
    report["locator"] = l;
    text << "locator: " << join(l) << '\n';
  }
  if (!res.success) {
    report["success"] = false;
    report["failure"] = to_string(res.reason);
    report["detail"] = res.detail;
    text << "FAILURE: " << to_string(res.reason) << ": " << res.detail << '\n';
    emit(opt, out, report, text.str());
    err << "decoding failed: " << to_string(res.reason) << '\n';
    return kExitDecodingFailure;
  }
  const auto& e = res.error;
  report["success"] = true;
  report["positions"] = e.positions;
  report["values"] = format_vector(field, e.values);
  Json symbols = Json::array();
  for (const auto& s : e.symbols) symbols.push_back(s);
  report["symbols"] = symbols;
  report["symbol_errors"] = e.symbol_errors;
  report["codeword"] = to_flat(res.codeword, code.m());
  text << "positions: " << join(format_ints(e.positions)) << '\n';
  text << "values: " << join(format_vector(field, e.values)) << '\n';
  text << "symbols:\n";
  for (std::size_t j = 0; j < e.positions.size(); ++j) {
    text << "  " << e.positions[j] << ": " << join(format_ints(e.symbols[j])) << '\n';
  }
  text << "symbol errors: " << e.symbol_errors << '\n';
  text << "codeword: " << flat_text(res.codeword, code.m()) << '\n';
  if (!opt.out_path.empty()) io::write_json(opt.out_path, io::word_to_json(res.codeword, code.m()));
  emit(opt, out, report, text.str());
  return kExitOk;
}

int cmd_mindist(const Options& opt, std::ostream& out) {
  const QcCode code = io::load_code(opt.code_path);
  Json report;
  std::ostringstream text;
  report["n"] = code.length();
  report["k"] = code.dimension();
  if (opt.method == "brute") {
    const int d = min_distance_exhaustive(code);
    report["method"] = "brute";
    report["distance"] = d;
    text << "minimum distance: " << d << " (exhaustive)\n";
  } else {
    if (opt.samples == 0) throw UsageError("--samples must be positive");
    const int w = sampled_weight_upper_bound(code, opt.samples, opt.seed);
    report["method"] = "sample";
    report["samples"] = opt.samples;
    report["seed"] = opt.seed;
    report["upper_bound"] = w;
    report["guaranteed"] = false;
    text << "sampled upper bound: d <= " << w << " (" << opt.samples << " random codewords, seed " << opt.seed
         << ")\n";
    text << "advisory: NOT a guaranteed distance; sampling only bounds d from above\n";
  }
  emit(opt, out, report, text.str());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Quasi-cyclic code analysis and decoding", "qcc"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* analyze = app.add_subcommand("analyze", "Parameters, eigenvalues and best bounds of a code");
  analyze->add_option("--code", opt.code_path, "Code definition file")->required();
  analyze->add_option("--max-nu", opt.max_nu, "Largest nu to search")->capture_default_str();
  analyze->add_option("--cert-out", opt.cert_out_path, "Write the best certificate here");

  auto* bound = app.add_subcommand("bound", "Check one certificate (f, z, delta, nu)");
  bound->add_option("--code", opt.code_path, "Code definition file")->required();
  bound->add_option("--f", opt.f, "Offset")->required();
  bound->add_option("--z", opt.z, "Step, a unit modulo m")->required();
  bound->add_option("--delta", opt.delta, "Run length bound, > 2")->required();
  bound->add_option("--nu", opt.nu, "Number of extra shifts")->required();
  bound->add_option("--out", opt.out_path, "Write the certificate here");

  auto* encode = app.add_subcommand("encode", "Encode a message");
  encode->add_option("--code", opt.code_path, "Code definition file")->required();
  encode->add_option("--message", opt.message_path, "Message file")->required();
  encode->add_option("--out", opt.out_path, "Write the codeword here");

  auto* dec = app.add_subcommand("decode", "Decode a received word");
  dec->add_option("--code", opt.code_path, "Code definition file")->required();
  dec->add_option("--rx", opt.rx_path, "Received word file")->required();
  dec->add_option("--cert", opt.cert_path, "Certificate file (default: best bound)");
  dec->add_option("--max-nu", opt.max_nu, "Largest nu when searching for a certificate")->capture_default_str();
  dec->add_option("--out", opt.out_path, "Write the estimated codeword here");

  auto* mindist = app.add_subcommand("mindist", "Minimum distance by enumeration or sampling");
  mindist->add_option("--code", opt.code_path, "Code definition file")->required();
  mindist->add_option("--method", opt.method, "brute or sample")
      ->check(CLI::IsMember({"brute", "sample"}))
      ->capture_default_str();
  mindist->add_option("--samples", opt.samples, "Codewords drawn by sample")->capture_default_str();
  mindist->add_option("--seed", opt.seed, "Seed for sample")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (bound->parsed()) return cmd_bound(opt, out);
    if (encode->parsed()) return cmd_encode(opt, out);
    if (dec->parsed()) return cmd_decode(opt, out, err);
    return cmd_mindist(opt, out);
  } catch (const InvalidCode& e) {
    err << "invalid code:\n";
    for (const auto& v : e.violations()) err << "  condition " << v.condition << ": " << v.message << '\n';
    return kExitInvalidCode;
  } catch (const FieldConfigError& e) {
    err << "invalid field: " << e.what() << '\n';
    return kExitInvalidCode;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotACertificate& e) {
    err << "not a certificate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoBoundFound& e) {
    err << "no bound: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationError& e) {
    err << "enumeration refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidCode;
  }
}

}  // namespace qcc::cli
