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

#include "lefschetz/liealg.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lefschetz {

LieAlgebra LieAlgebra::build(FieldPtr field, int dim,
                             std::vector<std::string> names,
                             const std::vector<BracketEntry>& entries) {
  if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
  if (names.empty()) {
    for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != dim)
    throw std::invalid_argument("LieAlgebra: name count mismatch");
  {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (n.empty() || !seen.insert(n).second)
        throw std::invalid_argument("LieAlgebra: duplicate or empty basis name");
      if (n == "r")
        throw std::invalid_argument("LieAlgebra: basis name 'r' is reserved");
      for (const auto& v : field->vars())
        if (n == v)
          throw std::invalid_argument(
              "LieAlgebra: basis name collides with field variable '" + n + "'");
    }
  }

  LieAlgebra g;
  g.dim_ = dim;
  g.field_ = std::move(field);
  g.names_ = std::move(names);
  g.table_.assign(static_cast<std::size_t>(dim) * dim, {});
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.i >= dim || e.j >= dim || e.i == e.j)
      throw std::invalid_argument("LieAlgebra: bracket indices out of range");
    int i = e.i, j = e.j;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto& row = g.table_[static_cast<std::size_t>(g.slot(i, j))];
    for (const auto& t : e.terms) {
      if (t.k < 0 || t.k >= dim)
        throw std::invalid_argument("LieAlgebra: bracket target out of range");
      Scalar c = flip ? -t.c : t.c;
      auto it = row.find(t.k);
      if (it == row.end()) {
        if (!c.is_zero()) row.emplace(t.k, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  }

  // exhaustive Jacobi verification over basis triples
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (int k = j + 1; k < dim; ++k) {
        Vec s = g.bracket(g.bracket_basis(i, j), unit_vec(g.field_, dim, k));
        s = add(s, g.bracket(g.bracket_basis(j, k), unit_vec(g.field_, dim, i)));
        s = add(s, g.bracket(g.bracket_basis(k, i), unit_vec(g.field_, dim, j)));
        if (!is_zero_vec(s)) {
          std::string defect;
          for (int t = 0; t < dim; ++t) {
            if (s[t].is_zero()) continue;
            if (!defect.empty()) defect += " + ";
            defect += "(" + s[t].str() + ")*" + g.names_[t];
          }
          throw JacobiViolation(i, j, k, defect);
        }
      }
    }
  }
  return g;
}

const std::map<int, Scalar>& LieAlgebra::table(int i, int j) const {
  return table_[static_cast<std::size_t>(slot(i, j))];
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec out = zero_vec(field_, dim_);
  if (i == j) return out;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  for (const auto& [k, c] : table(i, j)) out[k] = flip ? -c : c;
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      int a = i, b = j;
      bool flip = a > b;
      if (flip) std::swap(a, b);
      for (const auto& [k, c] : table(a, b)) {
        Scalar v = x[i] * y[j] * c;
        out[k] += flip ? -v : v;
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad_basis(int i) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = bracket_basis(i, j);
    for (int k = 0; k < dim_; ++k) m.a[k][j] = col[k];
  }
  return m;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = bracket(x, unit_vec(field_, dim_, j));
    for (int k = 0; k < dim_; ++k) m.a[k][j] = col[k];
  }
  return m;
}

Scalar LieAlgebra::ad_trace(int i) const {
  Scalar t = field_->zero();
  for (int j = 0; j < dim_; ++j) {
    if (i == j) continue;
    int a = i, b = j;
    bool flip = a > b;
    if (flip) std::swap(a, b);
    auto it = table(a, b).find(j);
    if (it != table(a, b).end()) t += flip ? -it->second : it->second;
  }
  return t;
}

KForm LieAlgebra::d_covector(int i) const {
  KForm d = KForm::zero(field_, dim_, 2);
  for (int a = 0; a < dim_; ++a) {
    for (int b = a + 1; b < dim_; ++b) {
      auto it = table(a, b).find(i);
      if (it == table(a, b).end()) continue;
      Mask m = (Mask(1) << a) | (Mask(1) << b);
      d.set_term(m, d.coeff(m) - it->second);
    }
  }
  return d;
}

KForm LieAlgebra::ce_d(const KForm& a) const {
  if (a.dim() != dim_) throw ExteriorError("ce_d: dimension mismatch");
  if (!a.field()->same(*field_)) throw ExteriorError("ce_d: field mismatch");
  KForm out = KForm::zero(field_, dim_, a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = indices_from_mask(m);
    for (std::size_t t = 0; t < idx.size(); ++t) {
      // prefix ^ d(e^{idx_t}) ^ suffix, Koszul sign (-1)^t
      std::vector<int> rest;
      for (std::size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      KForm partial = wedge(d_covector(idx[t]),
                            KForm::monomial(field_, dim_, rest, field_->one()));
      // moving d(e^{i_t}) to the front of the prefix costs (-1)^t; wedging the
      // 2-form past the prefix is free (even degree)
      Scalar sign_c = (t % 2 == 0) ? c : -c;
      out = out + partial.scaled(sign_c);
    }
  }
  return out;
}

Subspace LieAlgebra::commutator() const {
  Subspace s(field_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) s.add(bracket_basis(i, j));
  return s;
}

Subspace LieAlgebra::center() const {
  // x central iff sum_i x_i c_{ij}^k = 0 for all j, k
  Matrix m(field_, dim_ * dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      Vec col = bracket_basis(i, j);
      for (int k = 0; k < dim_; ++k) m.a[j * dim_ + k][i] = col[k];
    }
  }
  Subspace s(field_, dim_);
  for (const auto& v : kernel_basis(m)) s.add(v);
  return s;
}

bool LieAlgebra::is_unimodular() const {
  for (int i = 0; i < dim_; ++i)
    if (!ad_trace(i).is_zero()) return false;
  return true;
}

Subspace LieAlgebra::bracket_span(const Subspace& x, const Subspace& y) const {
  Subspace s(field_, dim_);
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) s.add(bracket(u, v));
  return s;
}

std::vector<Scalar> char_poly(const Matrix& m) {
  // Faddeev-LeVerrier; valid over any field of characteristic zero
  int n = m.rows;
  const FieldPtr& f = m.field;
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, f->zero());
  c[0] = f->one();
  Matrix mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) mk = m * mk;
    Scalar tr = f->zero();
    for (int i = 0; i < n; ++i) tr += mk.a[i][i];
    c[static_cast<std::size_t>(k)] = tr * f->integer(-1) / f->integer(k);
    if (k < n) {
      for (int i = 0; i < n; ++i) mk.a[i][i] += c[static_cast<std::size_t>(k)];
    }
  }
  return c;
}

namespace {

// Permutation-triangularizability: treat nonzero off-diagonal entries as a
// digraph; a DAG means the matrix is conjugate to a triangular one by a
// permutation, so the eigenvalues are the diagonal entries.
bool dag_triangular(const Matrix& m) {
  int n = m.rows;
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (int w = 0; w < n; ++w) {
          if (w == v || m.a[w][v].is_zero()) continue;
          if (state[w] == 1) return false;  // cycle
          if (state[w] == 0) stack.push_back(w);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

// evaluate monic polynomial (leading first) at x
Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar v = x.field()->zero();
  for (const auto& c : coeffs) v = v * x + c;
  return v;
}

// deflate a known root; coeffs monic leading-first
std::vector<Scalar> poly_deflate(const std::vector<Scalar>& coeffs, const Scalar& r) {
  std::vector<Scalar> out;
  Scalar carry = r.field()->zero();
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    carry = coeffs[i] + carry * r;
    out.push_back(carry);
  }
  return out;
}

// Sufficient splitting check for one generator's characteristic polynomial.
TriState splits_real(const Matrix& ad) {
  const FieldPtr& f = ad.field;
  if (dag_triangular(ad)) return TriState::yes;
  std::vector<Scalar> p = char_poly(ad);
  // candidate roots: 0 and the diagonal entries
  std::vector<Scalar> candidates = {f->zero()};
  for (int i = 0; i < ad.rows; ++i) candidates.push_back(ad.a[i][i]);
  bool progress = true;
  while (p.size() > 1 && progress) {
    progress = false;
    for (const auto& r : candidates) {
      if (poly_eval(p, r).is_zero()) {
        p = poly_deflate(p, r);
        progress = true;
        break;
      }
    }
  }
  if (p.size() <= 1) return TriState::yes;
  if (p.size() == 3) {
    // monic quadratic x^2 + bx + c, discriminant b^2 - 4c
    Scalar disc = p[1] * p[1] - f->integer(4) * p[2];
    if (disc.is_rational()) {
      Rational d = disc.as_rational();
      if (d.sign() < 0) return TriState::no;
      // a rational square discriminant splits over Q
      auto sn = BigInt::sqrt_exact(d.num());
      auto sd = BigInt::sqrt_exact(d.den());
      if (sn.has_value() && sd.has_value()) return TriState::yes;
    }
  }
  return TriState::unknown;
}

}  // namespace

Classification LieAlgebra::classify() const {
  Classification out;

  // lower central series
  Subspace whole(field_, dim_);
  for (int i = 0; i < dim_; ++i) whole.add(unit_vec(field_, dim_, i));
  Subspace lcs = commutator();
  for (int step = 0; step <= dim_ + 1; ++step) {
    if (lcs.dim() == 0) {
      out.nilpotent = true;
      break;
    }
    Subspace next = bracket_span(whole, lcs);
    if (next == lcs) break;
    lcs = next;
  }

  // derived series
  Subspace der = commutator();
  for (int step = 0; step <= dim_ + 1; ++step) {
    if (der.dim() == 0) {
      out.solvable = true;
      break;
    }
    Subspace next = bracket_span(der, der);
    if (next == der) break;
    der = next;
  }

  if (!out.solvable) {
    out.completely_solvable = TriState::no;
    return out;
  }
  out.completely_solvable = TriState::yes;
  for (int i = 0; i < dim_ && out.completely_solvable != TriState::no; ++i) {
    TriState t = splits_real(ad_basis(i));
    if (t == TriState::no) out.completely_solvable = TriState::no;
    if (t == TriState::unknown && out.completely_solvable == TriState::yes)
      out.completely_solvable = TriState::unknown;
  }
  return out;
}

bool LieAlgebra::is_heisenberg() const {
  if (dim_ % 2 == 0) return false;
  Subspace comm = commutator();
  if (comm.dim() != 1) return false;
  if (!(comm == center())) return false;
  if (!classify().nilpotent) return false;
  // the bracket-into-center pairing must be nondegenerate on g / center
  const Vec& z = comm.basis()[0];
  int zi = comm.pivots()[0];
  Matrix pairing(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      Vec b = bracket_basis(i, j);
      // b is proportional to z since the commutator is 1-dimensional
      pairing.a[i][j] = b[zi] / z[zi];
    }
  }
  return rank(pairing) == dim_ - 1;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  return dim_ == o.dim_ && field_->same(*o.field_) && table_ == o.table_;
}

std::vector<BracketEntry> LieAlgebra::bracket_entries() const {
  std::vector<BracketEntry> out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      const auto& row = table(i, j);
      if (row.empty()) continue;
      BracketEntry e{i, j, {}};
      for (const auto& [k, c] : row) e.terms.push_back({k, c});
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool is_morphism(const Matrix& f, const LieAlgebra& g, const LieAlgebra& h) {
  if (f.rows != h.dim() || f.cols != g.dim()) return false;
  for (int i = 0; i < g.dim(); ++i) {
    Vec fi(f.a.size(), h.field()->zero());
    for (int r = 0; r < f.rows; ++r) fi[r] = f.a[r][i];
    for (int j = i + 1; j < g.dim(); ++j) {
      Vec fj(f.a.size(), h.field()->zero());
      for (int r = 0; r < f.rows; ++r) fj[r] = f.a[r][j];
      Vec lhs = h.bracket(fi, fj);
      Vec rhs = f.apply(g.bracket_basis(i, j));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

KForm pullback(const Matrix& f, const LieAlgebra& g, const KForm& a) {
  // (f^* a)(x_1..x_k) = a(f x_1, ..., f x_k); expand over basis monomials
  KForm out = KForm::zero(g.field(), g.dim(), a.degree());
  if (a.degree() == 0) {
    for (const auto& [m, c] : a.terms()) out.set_term(m, c);
    return out;
  }
  // pull back covectors: f^*(e^i) = sum_j f[i][j] e^j, then wedge per term
  std::vector<KForm> cov;
  for (int i = 0; i < f.rows; ++i) {
    KForm w = KForm::zero(g.field(), g.dim(), 1);
    for (int j = 0; j < f.cols; ++j) {
      if (f.a[i][j].is_zero()) continue;
      w.set_term(Mask(1) << j, f.a[i][j]);
    }
    cov.push_back(std::move(w));
  }
  for (const auto& [m, c] : a.terms()) {
    KForm t = KForm::unit(g.field(), g.dim());
    for (int i : indices_from_mask(m)) t = wedge(t, cov[static_cast<std::size_t>(i)]);
    out = out + t.scaled(c);
  }
  return out;
}

bool pullback_commutes_with_d(const Matrix& f, const LieAlgebra& g,
                              const LieAlgebra& h) {
  for (int i = 0; i < h.dim(); ++i) {
    KForm ei = KForm::monomial(h.field(), h.dim(), {i}, h.field()->one());
    KForm lhs = g.ce_d(pullback(f, g, ei));
    KForm rhs = pullback(f, g, h.ce_d(ei));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names;
  for (const auto& n : a.names()) names.push_back(n);
  for (const auto& n : b.names()) {
    std::string candidate = n;
    int suffix = 1;
    while (std::find(names.begin(), names.end(), candidate) != names.end())
      candidate = n + "_" + std::to_string(suffix++);
    names.push_back(candidate);
  }
  std::vector<BracketEntry> entries = a.bracket_entries();
  for (const auto& e : b.bracket_entries()) {
    BracketEntry shifted{e.i + a.dim(), e.j + a.dim(), {}};
    for (const auto& t : e.terms) shifted.terms.push_back({t.k + a.dim(), t.c});
    entries.push_back(std::move(shifted));
  }
  return LieAlgebra::build(a.field(), a.dim() + b.dim(), std::move(names), entries);
}

}  // namespace lefschetz
