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

#include "qcc/linalg.hpp"

#include <utility>

namespace qcc {

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, int cols) {
  Matrix out(field, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < out.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw UsageError("ragged matrix rows");
    for (int j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

Vector Matrix::row(int i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

void Matrix::append_row(const Vector& row) {
  if (static_cast<int>(row.size()) != cols_) throw UsageError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix dimension mismatch");
  Matrix out(*a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<int> row_reduce(Matrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (!a(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const FieldElement inv = a(row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const FieldElement factor = a(i, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Matrix a) { return static_cast<int>(row_reduce(a).size()); }

std::vector<Vector> kernel(const Matrix& a) {
  Matrix r = a;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  const Field& field = a.field();
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(static_cast<std::size_t>(a.cols()), field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<int>(k), free);
    for (const auto& x : v) {
      if (!x.is_zero()) {
        const FieldElement inv = x.inverse();
        for (auto& y : v) y *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve(const Matrix& a, const Vector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw UsageError("right-hand side length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  LinearSolution sol{Vector(static_cast<std::size_t>(a.cols()), a.field().zero()),
                     static_cast<int>(pivots.size()) == a.cols()};
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.x[pivots[k]] = aug(static_cast<int>(k), a.cols());
  return sol;
}

Vector multiply(const Matrix& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.cols()) throw UsageError("vector length mismatch");
  Vector out(static_cast<std::size_t>(a.rows()), a.field().zero());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

}  // namespace qcc
