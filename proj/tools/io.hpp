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

#ifndef QCC_TOOLS_IO_HPP
#define QCC_TOOLS_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qcc/bound.hpp"
#include "qcc/code.hpp"

namespace qcc::io {

using Json = nlohmann::ordered_json;

/// Malformed input file; the message names the file and the offending
/// location (byte offset or key path).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& doc);

// Code definition:
//   {"p": 2, "r": 6, "modulus": [1,1,0,1,1,0,1], "m": 63, "alpha": [0,1,0,0,0,0],
//    "ell": 2, "generators": [[[...], [...]], [[], [...]]]}
// "r", "modulus" and "alpha" are optional. Generator entries are ascending
// GF(p) coefficient lists; entries below the diagonal must be empty.
QcCode parse_code(const Json& doc, const std::string& where = "code");
Json code_to_json(const QcCode& code);
QcCode load_code(const std::string& path);

// Certificate: {"f": 0, "z": 4, "delta": 4, "nu": 1, "witness": [[...], [...]]}
// "witness" (one coordinate list per component) is optional.
BoundCertificate parse_certificate(const Json& doc, const QcCode& code, const std::string& where = "certificate");
Json certificate_to_json(const BoundCertificate& cert, const Field& field);
BoundCertificate load_certificate(const std::string& path, const QcCode& code);

// Word: {"word": [...]} in the interleaved flat layout, length m*l.
PolyVec parse_word(const Json& doc, const QcCode& code, const std::string& where = "word");
Json word_to_json(const PolyVec& word, int m);
PolyVec load_word(const std::string& path, const QcCode& code);

// Message: {"message": [[...], ...]}, l ascending coefficient lists.
PolyVec parse_message(const Json& doc, const QcCode& code, const std::string& where = "message");
PolyVec load_message(const std::string& path, const QcCode& code);

}  // namespace qcc::io

#endif  // QCC_TOOLS_IO_HPP
