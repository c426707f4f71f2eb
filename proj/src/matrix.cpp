/*
 * Copyright 2026 The hlrc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hlrc/matrix.hpp"

namespace hlrc {

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) fail(Errc::BadInput, "column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.at(r, j) = at(r, cols[j]);
  }
  return out;
}

std::size_t Matrix::rank() const {
  const Field& F = *field_;
  std::vector<Elem> w = a_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && w[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < cols_; ++j)
        std::swap(w[pivot * cols_ + j], w[rank * cols_ + j]);
    Elem s = F.inv(w[rank * cols_ + c]);
    for (std::size_t j = c; j < cols_; ++j)
      w[rank * cols_ + j] = F.mul(w[rank * cols_ + j], s);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      Elem f = w[r * cols_ + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j)
        w[r * cols_ + j] = F.sub(w[r * cols_ + j], F.mul(f, w[rank * cols_ + j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<Elem> Matrix::mul_left(const std::vector<Elem>& x) const {
  if (x.size() != rows_) fail(Errc::LengthMismatch, "vector length does not match rows");
  const Field& F = *field_;
  std::vector<Elem> out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    const Elem* src = row(r);
    for (std::size_t c = 0; c < cols_; ++c)
      out[c] = F.add(out[c], F.mul(x[r], src[c]));
  }
  return out;
}

std::optional<std::vector<Elem>> Matrix::solve_left(const std::vector<Elem>& b) const {
  if (rows_ != cols_) fail(Errc::BadInput, "solve requires a square matrix");
  if (b.size() != cols_) fail(Errc::LengthMismatch, "vector length does not match columns");
  const Field& F = *field_;
  const std::size_t n = rows_;

  // x . A = b is A^T x^T = b^T; eliminate on the transpose, augmented with b.
  std::vector<Elem> w(n * (n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) w[r * (n + 1) + c] = at(c, r);
    w[r * (n + 1) + n] = b[r];
  }
  const std::size_t stride = n + 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && w[pivot * stride + c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c)
      for (std::size_t j = c; j <= n; ++j) std::swap(w[pivot * stride + j], w[c * stride + j]);
    Elem s = F.inv(w[c * stride + c]);
    for (std::size_t j = c; j <= n; ++j) w[c * stride + j] = F.mul(w[c * stride + j], s);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      Elem f = w[r * stride + c];
      if (f == 0) continue;
      for (std::size_t j = c; j <= n; ++j)
        w[r * stride + j] = F.sub(w[r * stride + j], F.mul(f, w[c * stride + j]));
    }
  }
  std::vector<Elem> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = w[r * stride + n];
  return x;
}

bool ColumnSpan::accept(std::vector<Elem> col) {
  const Field& F = *field_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Elem f = col[pivot_[i]];
    if (f == 0) continue;
    for (std::size_t r = 0; r < col.size(); ++r)
      col[r] = F.sub(col[r], F.mul(f, basis_[i][r]));
  }
  std::size_t p = 0;
  while (p < col.size() && col[p] == 0) ++p;
  if (p == col.size()) return false;
  Elem s = F.inv(col[p]);
  for (std::size_t r = 0; r < col.size(); ++r) col[r] = F.mul(col[r], s);
  basis_.push_back(std::move(col));
  pivot_.push_back(p);
  return true;
}

}  // namespace hlrc
