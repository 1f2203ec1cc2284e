// Copyright 2026 The lefschetz-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEFSCHETZ_LINALG_HPP
#define LEFSCHETZ_LINALG_HPP

#include <optional>
#include <vector>

#include "lefschetz/field.hpp"

namespace lefschetz {

using Vec = std::vector<Scalar>;

struct Matrix {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::vector<Vec> a;  // row major

  Matrix() = default;
  Matrix(FieldPtr f, int r, int c);
  static Matrix identity(FieldPtr f, int n);

  Scalar& at(int i, int j) { return a[i][j]; }
  const Scalar& at(int i, int j) const { return a[i][j]; }

  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  Matrix pow(unsigned e) const;

  static Matrix block_diag(const std::vector<Matrix>& blocks);
  std::string str() const;
};

Vec zero_vec(const FieldPtr& f, int n);
Vec unit_vec(const FieldPtr& f, int n, int i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scaled(const Vec& x, const Scalar& c);

// Reduced row echelon form (unique); returns pivot columns in order.
// Function-field matrices prefer sparser pivot rows; the result is the
// canonical RREF either way.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols);

int rank(const Matrix& m);

// Canonical kernel basis: one vector per free column (ascending), with a 1
// in the free position.
std::vector<Vec> kernel_basis(const Matrix& m);

// One solution of m x = b with free variables set to zero, if consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

// Row space in canonical reduced echelon form; equality of subspaces is
// structural equality of the bases.
class Subspace {
 public:
  Subspace(FieldPtr f, int ambient) : field_(std::move(f)), ambient_(ambient) {}
  static Subspace span(FieldPtr f, int ambient, const std::vector<Vec>& vectors);

  const FieldPtr& field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  // Adds v if it enlarges the span; keeps canonical form. Returns true when
  // the dimension grew.
  bool add(const Vec& v);
  // Residual of v after reduction by the basis; zero iff contained.
  Vec reduce(const Vec& v) const;

  static Subspace sum(const Subspace& x, const Subspace& y);
  static Subspace intersect(const Subspace& x, const Subspace& y);

 private:
  FieldPtr field_;
  int ambient_;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_LINALG_HPP
