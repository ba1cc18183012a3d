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

#ifndef QCC_LINALG_HPP
#define QCC_LINALG_HPP

#include <optional>
#include <vector>

#include "qcc/field.hpp"

namespace qcc {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(const Field& field, int rows, int cols)
      : field_(&field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, field.zero()) {}

  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, int cols);

  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FieldElement& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const FieldElement& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Vector row(int i) const;
  void append_row(const Vector& row);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const Field* field_;
  int rows_;
  int cols_;
  Vector data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> row_reduce(Matrix& a);

int rank(Matrix a);

/// Basis of {x : A x = 0}. Each basis vector is scaled so its first nonzero
/// coordinate is 1.
std::vector<Vector> kernel(const Matrix& a);

struct LinearSolution {
  Vector x;     // one solution
  bool unique;  // A has full column rank
};

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const Matrix& a, const Vector& b);

/// A x for a column vector x.
Vector multiply(const Matrix& a, const Vector& x);

}  // namespace qcc

#endif  // QCC_LINALG_HPP
