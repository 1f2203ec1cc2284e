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
//
// Test-only reference implementations, deliberately independent of the
// library's production code paths: the wedge oracle antisymmetrizes
// coefficient functions over index tuples, the differential oracle uses the
// alternating-sum formula on vector arguments, and the rank oracle is a
// plain elimination written directly against Rational.

#ifndef LEFSCHETZ_TESTS_ORACLES_HPP
#define LEFSCHETZ_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "lefschetz/cohomology.hpp"
#include "lefschetz/liealg.hpp"

namespace lefschetz::testing {

// alpha(e_{i_1}, ..., e_{i_k}) for arbitrary (not necessarily sorted) tuples
inline Scalar coeff_fn(const KForm& a, std::vector<int> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return a.field()->zero();
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  }
  Scalar c = a.coeff(mask_from_indices(idx));
  return sign < 0 ? -c : c;
}

// (a ^ b)(e_I) = sum over splittings of I with shuffle signs, computed by
// brute force over all subsets of each output multi-index.
inline KForm naive_wedge(const KForm& a, const KForm& b) {
  KForm out = KForm::zero(a.field(), a.dim(), a.degree() + b.degree());
  if (out.degree() > a.dim()) return out;
  int p = a.degree();
  long long total = binomial(a.dim(), out.degree());
  for (long long r = 0; r < total; ++r) {
    Mask m = colex_unrank(a.dim(), out.degree(), r);
    std::vector<int> idx = indices_from_mask(m);
    // sum over p-subsets of idx going to `a`
    std::vector<int> sel(idx.size(), 0);
    std::fill(sel.begin(), sel.begin() + p, 1);
    std::sort(sel.begin(), sel.end());
    Scalar acc = a.field()->zero();
    do {
      std::vector<int> ia, ib;
      for (std::size_t t = 0; t < idx.size(); ++t)
        (sel[t] != 0 ? ia : ib).push_back(idx[t]);
      if (static_cast<int>(ia.size()) != p) continue;
      // shuffle sign: inversions of the concatenation (ia, ib)
      int inv = 0;
      for (int x : ia)
        for (int y : ib)
          if (x > y) ++inv;
      Scalar term = coeff_fn(a, ia) * coeff_fn(b, ib);
      acc = inv % 2 == 0 ? acc + term : acc - term;
    } while (std::next_permutation(sel.begin(), sel.end()));
    if (!acc.is_zero()) out.set_term(m, acc);
  }
  return out;
}

// d alpha(x_0,...,x_k) = sum_{i<j} (-1)^{i+j} alpha([x_i,x_j], ..., no i, no j)
// evaluated on basis tuples; independent of the Leibniz-rule implementation.
inline KForm naive_ce_d(const LieAlgebra& g, const KForm& a) {
  int k = a.degree();
  KForm out = KForm::zero(g.field(), g.dim(), k + 1);
  if (k + 1 > g.dim()) return out;
  long long total = binomial(g.dim(), k + 1);
  for (long long r = 0; r < total; ++r) {
    Mask m = colex_unrank(g.dim(), k + 1, r);
    std::vector<int> idx = indices_from_mask(m);
    Scalar acc = g.field()->zero();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        Vec br = g.bracket_basis(idx[i], idx[j]);
        std::vector<int> rest;
        for (std::size_t t = 0; t < idx.size(); ++t)
          if (t != i && t != j) rest.push_back(idx[t]);
        // alpha(br, rest...) expanded over the basis expansion of br
        Scalar val = g.field()->zero();
        for (int b = 0; b < g.dim(); ++b) {
          if (br[static_cast<std::size_t>(b)].is_zero()) continue;
          std::vector<int> args = {b};
          args.insert(args.end(), rest.begin(), rest.end());
          val += br[static_cast<std::size_t>(b)] * coeff_fn(a, args);
        }
        acc = (i + j) % 2 == 0 ? acc + val : acc - val;
      }
    }
    if (!acc.is_zero()) out.set_term(m, acc);
  }
  return out;
}

// plain fraction elimination on a rational matrix; no pivot strategy shared
// with the library engine
inline int naive_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                   m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int cc = 0; cc < cols; ++cc)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
            f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
    }
    ++rank;
  }
  return rank;
}

// specialize a function-field matrix at a rational point (den must not vanish)
inline std::vector<std::vector<Rational>> specialize(
    const Matrix& m, const std::vector<Rational>& point) {
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < m.rows; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < m.cols; ++j) {
      const Scalar& s = m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const FuncVal& fv = s.func();
      Rational den = fv.den.evaluate(point);
      row.push_back(fv.num.evaluate(point) / den);
    }
    out.push_back(std::move(row));
  }
  return out;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long long ll(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng);
  }
  Rational rational(long long num = 9, long long den = 4) {
    return Rational(BigInt(ll(-num, num)), BigInt(ll(1, den)));
  }
  Scalar scalar(const FieldPtr& f) {
    switch (f->kind()) {
      case FieldKind::rationals:
        return f->from_rational(rational());
      case FieldKind::quadratic:
        return f->from_rational(rational()) +
               f->from_rational(rational()) * f->sqrt_gen();
      case FieldKind::rational_functions: {
        Scalar v = f->from_rational(rational());
        for (int i = 0; i < f->nvars(); ++i)
          v = v + f->from_rational(rational()) * f->variable(i);
        return v;
      }
    }
    return f->zero();
  }
  KForm form(const FieldPtr& f, int dim, int degree, int nterms) {
    KForm out = KForm::zero(f, dim, degree);
    long long total = binomial(dim, degree);
    if (total == 0) return out;
    for (int t = 0; t < nterms; ++t) {
      long long r = ll(0, total - 1);
      Mask m = colex_unrank(dim, degree, r);
      out.set_term(m, out.coeff(m) + scalar(f));
    }
    return out;
  }
  Vec vec(const FieldPtr& f, int dim) {
    Vec v;
    for (int i = 0; i < dim; ++i) v.push_back(scalar(f));
    return v;
  }
};

// random two-step nilpotent algebra: generators x_1..x_p, center z_1..z_q,
// [x_i, x_j] = random central combination (Jacobi is automatic)
inline LieAlgebra random_two_step(Rng& rng, const FieldPtr& f, int p, int q) {
  std::vector<BracketEntry> entries;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      BracketEntry e{i, j, {}};
      for (int k = 0; k < q; ++k) {
        Scalar c = f->from_rational(rng.rational(3, 2));
        if (!c.is_zero()) e.terms.push_back({p + k, c});
      }
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  return LieAlgebra::build(f, p + q, {}, entries);
}

}  // namespace lefschetz::testing

#endif  // LEFSCHETZ_TESTS_ORACLES_HPP
