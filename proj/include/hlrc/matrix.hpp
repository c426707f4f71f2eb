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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlrc/gf.hpp"

namespace hlrc {

// Dense row-major matrix over a field, with exact Gaussian elimination.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  std::size_t rank() const;

  // x . (*this) for a length-rows() vector x.
  std::vector<Elem> mul_left(const std::vector<Elem>& x) const;

  // Solves x . A = b for square A; nullopt when A is singular.
  std::optional<std::vector<Elem>> solve_left(const std::vector<Elem>& b) const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

// Incremental column-independence filter: feed candidate columns one at a
// time; accept() returns true when the column enlarges the span so far.
class ColumnSpan {
 public:
  explicit ColumnSpan(FieldPtr field) : field_(std::move(field)) {}

  std::size_t rank() const { return basis_.size(); }
  bool accept(std::vector<Elem> col);

 private:
  FieldPtr field_;
  std::vector<std::vector<Elem>> basis_;  // reduced columns
  std::vector<std::size_t> pivot_;        // pivot row of each basis column
};

}  // namespace hlrc
