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

#include "lefschetz/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lefschetz {

Matrix::Matrix(FieldPtr f, int r, int c) : field(std::move(f)), rows(r), cols(c) {
  a.assign(r, Vec(c, field->zero()));
}

Matrix Matrix::identity(FieldPtr f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = f->one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("Matrix: shape mismatch in product");
  Matrix r(field, rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o.a[k][j].is_zero()) continue;
        r.a[i][j] += a[i][k] * o.a[k][j];
      }
    }
  }
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols)
    throw std::invalid_argument("Matrix: shape mismatch in apply");
  Vec y(rows, field->zero());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
  return y;
}

Matrix Matrix::transpose() const {
  Matrix r(field, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.a[j][i] = a[i][j];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("Matrix: shape mismatch in sum");
  Matrix r = *this;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.a[i][j] += o.a[i][j];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& row : r.a)
    for (auto& x : row) x = x * c;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

bool Matrix::is_zero() const {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows != cols) throw std::invalid_argument("Matrix: pow needs a square matrix");
  Matrix base = *this;
  Matrix r = identity(field, rows);
  while (e != 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("Matrix: empty block list");
  int n = 0;
  for (const auto& b : blocks) {
    if (b.rows != b.cols) throw std::invalid_argument("Matrix: non-square block");
    n += b.rows;
  }
  Matrix r(blocks[0].field, n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) r.a[off + i][off + j] = b.a[i][j];
    off += b.rows;
  }
  return r;
}

std::string Matrix::str() const {
  std::string s;
  for (int i = 0; i < rows; ++i) {
    s += "[";
    for (int j = 0; j < cols; ++j) {
      if (j != 0) s += ", ";
      s += a[i][j].str();
    }
    s += "]\n";
  }
  return s;
}

Vec zero_vec(const FieldPtr& f, int n) { return Vec(n, f->zero()); }

Vec unit_vec(const FieldPtr& f, int n, int i) {
  Vec v(n, f->zero());
  v[i] = f->one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vec add(const Vec& x, const Vec& y) {
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec scaled(const Vec& x, const Scalar& c) {
  Vec r = x;
  for (auto& v : r) v = v * c;
  return r;
}

namespace {

int row_weight(const Vec& v) {
  int w = 0;
  for (const auto& x : v)
    if (!x.is_zero()) ++w;
  return w;
}

}  // namespace

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
  Matrix w = m;
  bool sparse_pivoting = m.field->kind() == FieldKind::rational_functions;
  int next_row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < w.cols && next_row < w.rows; ++col) {
    int pivot = -1;
    if (sparse_pivoting) {
      int best_weight = 0;
      for (int i = next_row; i < w.rows; ++i) {
        if (w.a[i][col].is_zero()) continue;
        int wt = row_weight(w.a[i]);
        if (pivot < 0 || wt < best_weight) {
          pivot = i;
          best_weight = wt;
        }
      }
    } else {
      for (int i = next_row; i < w.rows; ++i) {
        if (!w.a[i][col].is_zero()) {
          pivot = i;
          break;
        }
      }
    }
    if (pivot < 0) continue;
    std::swap(w.a[next_row], w.a[pivot]);
    Scalar inv = w.a[next_row][col].inv();
    for (int j = col; j < w.cols; ++j) w.a[next_row][j] = w.a[next_row][j] * inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == next_row || w.a[i][col].is_zero()) continue;
      Scalar factor = w.a[i][col];
      for (int j = col; j < w.cols; ++j)
        w.a[i][j] -= factor * w.a[next_row][j];
    }
    pivots.push_back(col);
    ++next_row;
  }
  if (pivot_cols != nullptr) *pivot_cols = pivots;
  return w;
}

int rank(const Matrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::vector<int> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.field, m.cols);
    v[free] = m.field->one();
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.a[static_cast<int>(k)][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.field, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.a[i][j] = m.a[i][j];
    aug.a[i][m.cols] = b[i];
  }
  std::vector<int> pivots;
  Matrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  Vec x = zero_vec(m.field, m.cols);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = r.a[static_cast<int>(k)][m.cols];
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  Matrix aug(m.field, m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.a[i][j] = m.a[i][j];
    aug.a[i][m.cols + i] = m.field->one();
  }
  std::vector<int> pivots;
  Matrix r = rref(aug, &pivots);
  if (static_cast<int>(pivots.size()) < m.cols ||
      pivots[static_cast<std::size_t>(m.cols) - 1] != m.cols - 1)
    return std::nullopt;
  Matrix inv(m.field, m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.a[i][j] = r.a[i][m.cols + j];
  return inv;
}

Subspace Subspace::span(FieldPtr f, int ambient, const std::vector<Vec>& vectors) {
  Subspace s(std::move(f), ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) r[j] -= c * basis_[k][j];
  }
  return r;
}

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (!r[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  Scalar inv = r[pivot].inv();
  for (int j = 0; j < ambient_; ++j) r[j] = r[j] * inv;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = basis_[k][pivot];
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) basis_[k][j] -= c * r[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(r));
  return true;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& x, const Subspace& y) {
  Subspace s = x;
  for (const auto& v : y.basis_) s.add(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& x, const Subspace& y) {
  // vectors of x whose coordinates also combine into y:
  // solve [X^T | -Y^T] c = 0 columnwise and read off X-side combinations
  if (x.ambient_ != y.ambient_)
    throw std::invalid_argument("intersect: ambient mismatch");
  Subspace out(x.field_, x.ambient_);
  if (x.dim() == 0 || y.dim() == 0) return out;
  Matrix m(x.field_, x.ambient_, x.dim() + y.dim());
  for (int i = 0; i < x.ambient_; ++i) {
    for (int k = 0; k < x.dim(); ++k) m.a[i][k] = x.basis_[k][i];
    for (int k = 0; k < y.dim(); ++k) m.a[i][x.dim() + k] = -y.basis_[k][i];
  }
  for (const auto& ker : kernel_basis(m)) {
    Vec v = zero_vec(x.field_, x.ambient_);
    for (int k = 0; k < x.dim(); ++k)
      if (!ker[k].is_zero()) v = lefschetz::add(v, scaled(x.basis_[k], ker[k]));
    out.add(v);
  }
  return out;
}

}  // namespace lefschetz
