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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "io.hpp"
#include "qcc/decoder.hpp"
#include "qcc/oracle.hpp"
#include "support.hpp"

using namespace qcc;
namespace fs = std::filesystem;

namespace {

const std::string kData = QCC_DATA_DIR;
const std::string kCode = kData + "/qc126.json";
const std::string kCert = kData + "/qc126_cert.json";
const std::string kRx = kData + "/qc126_rx.json";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "qcc_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path path = scratch() / name;
  std::ofstream(path) << content;
  return path.string();
}

std::string write_json(const std::string& name, const io::Json& doc) { return write_file(name, doc.dump(2)); }

QcCode small_code() {
  const auto f = Field::for_root_order(2, 15);
  GroebnerMatrix g(2, 15, 2);
  g.at(0, 0) = minimal_polynomial(1, *f) * minimal_polynomial(3, *f);
  g.at(0, 1) = g.at(0, 0) * Poly(2, {1, 1});
  g.at(1, 1) = g.at(0, 0) * minimal_polynomial(5, *f);
  return QcCode::validate(g, f);
}

}  // namespace

TEST_CASE("analyze the example code") {
  const Result r = run({"analyze", "--code", kCode, "--max-nu", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "parameters: [126, 100]"));
  CHECK(has(r.out, "  36 2 2\n"));
  CHECK(has(r.out, "  5 1 1\n"));
  CHECK(has(r.out, "nu=0: d*=4 "));
  CHECK(has(r.out, "nu=1: d*=5 f=0 z=4 delta=4 nu=1"));
  CHECK(has(r.out, "d* = 5 via f=0 z=4 delta=4 nu=1"));
}

TEST_CASE("analyze as JSON") {
  const Result r = run({"--format", "json", "analyze", "--code", kCode, "--max-nu", "1"});
  REQUIRE(r.code == 0);
  const auto doc = io::Json::parse(r.out);
  CHECK(doc["n"] == 126);
  CHECK(doc["k"] == 100);
  CHECK(doc["dstar"] == 5);
  CHECK(doc["bounds"][0]["certificate"]["dstar"] == 4);
  CHECK(doc["eigenvalues"].size() == 16);
}

TEST_CASE("analyze a cyclic code") {
  const auto f = Field::for_root_order(2, 15);
  GroebnerMatrix g(1, 15, 2);
  g.at(0, 0) = minimal_polynomial(1, *f) * minimal_polynomial(3, *f);
  const std::string path = write_json("bch15.json", io::code_to_json(QcCode::validate(g, f)));
  const Result r = run({"analyze", "--code", path, "--max-nu", "0"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "parameters: [15, 7]"));
  CHECK(has(r.out, "d* = 5"));
}

TEST_CASE("invalid codes exit with 2") {
  io::Json doc = io::read_json(kCode);
  doc["generators"][1][1] = std::vector<int>(17, 1);
  const Result r = run({"analyze", "--code", write_json("bad3.json", doc)});
  CHECK(r.code == 2);
  CHECK(has(r.err, "g_{i,i} does not divide X^m-1"));

  io::Json reducible = io::read_json(kCode);
  reducible["modulus"] = {1, 0, 0, 0, 0, 0, 1};
  CHECK(run({"analyze", "--code", write_json("badfield.json", reducible)}).code == 2);
}

TEST_CASE("parse errors exit with 1 and name the location") {
  const Result broken = run({"analyze", "--code", write_file("broken.json", "{\"p\": 2,, }")});
  CHECK(broken.code == 1);
  CHECK(has(broken.err, "byte"));

  io::Json extra = io::read_json(kCode);
  extra["colour"] = "blue";
  const Result unknown = run({"analyze", "--code", write_json("extra.json", extra)});
  CHECK(unknown.code == 1);
  CHECK(has(unknown.err, "unknown key \"colour\""));

  io::Json coeff = io::read_json(kCode);
  coeff["generators"][0][1][3] = 2;
  const Result range = run({"analyze", "--code", write_json("coeff.json", coeff)});
  CHECK(range.code == 1);
  CHECK(has(range.err, "generators[0][1][3]"));

  CHECK(run({"analyze", "--code", (scratch() / "missing.json").string()}).code == 1);
}

TEST_CASE("code files round-trip") {
  const io::Json doc = io::read_json(kCode);
  CHECK(io::code_to_json(io::parse_code(doc)) == doc);
  const QcCode code = small_code();
  const io::Json again = io::code_to_json(code);
  CHECK(io::code_to_json(io::parse_code(again)) == again);
  CHECK(io::parse_code(again).basis().entries == code.basis().entries);
}

TEST_CASE("decode the example") {
  const Result r = run({"decode", "--code", kCode, "--cert", kCert, "--rx", kRx});
  CHECK(r.code == 0);
  CHECK(has(r.out, "S0: a^35 a^26 a^7\n"));
  CHECK(has(r.out, "S1: a^45 a^33 a^51\n"));
  CHECK(has(r.out, "locator: a^0 a^49 a^2\n"));
  CHECK(has(r.out, "positions: 0 32\n"));
  CHECK(has(r.out, "values: a^0 a^4\n"));
  CHECK(has(r.out, "  0: 1 0\n"));
  CHECK(has(r.out, "  32: 1 1\n"));
  CHECK(has(r.out, "symbol errors: 3\n"));
  std::string zeros;
  for (int i = 0; i < 126; ++i) zeros += i ? " 0" : "0";
  CHECK(has(r.out, "codeword: " + zeros + "\n"));

  const Result searched = run({"decode", "--code", kCode, "--rx", kRx});
  CHECK(searched.code == 0);
  CHECK(has(searched.out, "positions: 0 32\n"));
}

TEST_CASE("decoding failure exits with 3") {
  const QcCode code = io::load_code(kCode);
  const BoundCertificate cert = io::load_certificate(kCert, code);
  test::Rng rng(2);
  std::optional<PolyVec> bad;
  while (!bad) {
    const PolyVec rx = test::plant_burst(rng, code, 4);
    if (!decode(code, cert, rx).success) bad = rx;
  }
  const std::string rx = write_json("fail_rx.json", io::word_to_json(*bad, code.m()));
  const Result r = run({"decode", "--code", kCode, "--cert", kCert, "--rx", rx});
  CHECK(r.code == 3);
  CHECK(has(r.out, "FAILURE: "));
}

TEST_CASE("encode then decode") {
  const std::string code_path = write_json("small.json", io::code_to_json(small_code()));
  const std::string zero_msg = write_json("zero_msg.json", io::Json{{"message", {io::Json::array(), io::Json::array()}}});
  const std::string out = (scratch() / "zero_cw.json").string();
  CHECK(run({"encode", "--code", code_path, "--message", zero_msg, "--out", out}).code == 0);
  CHECK(io::read_json(out)["word"] == std::vector<int>(30, 0));

  const std::string msg = write_json("msg.json", io::Json{{"message", {{1, 0, 1}, {0, 1}}}});
  const std::string cw = (scratch() / "cw.json").string();
  CHECK(run({"encode", "--code", code_path, "--message", msg, "--out", cw}).code == 0);
  const Result r = run({"--format", "json", "decode", "--code", code_path, "--rx", cw});
  REQUIRE(r.code == 0);
  const auto doc = io::Json::parse(r.out);
  CHECK(doc["positions"].empty());
  CHECK(doc["codeword"] == io::read_json(cw)["word"]);
}

TEST_CASE("mindist") {
  const QcCode code = small_code();
  const std::string path = write_json("small_md.json", io::code_to_json(code));
  const Result brute = run({"mindist", "--code", path, "--method", "brute"});
  CHECK(brute.code == 0);
  CHECK(has(brute.out, "minimum distance: " + std::to_string(min_distance_exhaustive(code)) + " (exhaustive)"));

  const Result sample = run({"--format", "json", "mindist", "--code", kCode, "--method", "sample", "--samples", "2000",
                             "--seed", "5"});
  REQUIRE(sample.code == 0);
  const auto doc = io::Json::parse(sample.out);
  CHECK(doc["guaranteed"] == false);
  CHECK(doc["upper_bound"].get<int>() >= 5);
  const Result text = run({"mindist", "--code", kCode, "--method", "sample", "--samples", "200"});
  CHECK(has(text.out, "NOT a guaranteed distance"));
  CHECK(run({"mindist", "--code", kCode}).code == 1);
}

TEST_CASE("bound command") {
  const std::string out = (scratch() / "cert.json").string();
  const Result r = run({"bound", "--code", kCode, "--f", "0", "--z", "4", "--delta", "4", "--nu", "1", "--out", out});
  CHECK(r.code == 0);
  CHECK(has(r.out, "exponents: 0 1 4 5 8 9\n"));
  CHECK(has(r.out, "d*=5"));
  const Result dec = run({"decode", "--code", kCode, "--cert", out, "--rx", kRx});
  CHECK(dec.code == 0);
  CHECK(has(dec.out, "positions: 0 32\n"));
  const Result bad = run({"bound", "--code", kCode, "--f", "3", "--z", "1", "--delta", "3", "--nu", "0"});
  CHECK(bad.code == 1);
  CHECK(has(bad.err, "not an eigenvalue"));
}

TEST_CASE("certificate written by analyze drives decoding") {
  const std::string out = (scratch() / "best.json").string();
  CHECK(run({"analyze", "--code", kCode, "--max-nu", "1", "--cert-out", out}).code == 0);
  CHECK(run({"decode", "--code", kCode, "--cert", out, "--rx", kRx}).code == 0);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"analyze"}).code == 1);
  CHECK(run({"analyze", "--code", kCode, "--bogus"}).code == 1);
  CHECK(run({"--format", "xml", "analyze", "--code", kCode}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"analyze", "--code", kCode, "--max-nu", "2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> dec{"--format", "json", "decode", "--code", kCode, "--cert", kCert, "--rx", kRx};
  CHECK(run(dec).out == run(dec).out);
}
