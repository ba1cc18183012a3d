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

#ifndef QCC_ERRORS_HPP
#define QCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcc {

/// Caller passed values that do not belong together (e.g. elements of two
/// different fields).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request: inverse of zero, division by the zero
/// polynomial, coset with gcd(q, m) != 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The field description does not define a field with the requested root of
/// unity.
class FieldConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcc

#endif  // QCC_ERRORS_HPP
