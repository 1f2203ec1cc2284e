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

#include "lefschetz/cohomology.hpp"

namespace lefschetz {

Matrix d_matrix(const LieAlgebra& g, int k) {
  if (k < 0 || k > g.dim()) throw std::invalid_argument("d_matrix: bad degree");
  long long cols = binomial(g.dim(), k);
  long long rows = binomial(g.dim(), k + 1);
  Matrix m(g.field(), static_cast<int>(rows), static_cast<int>(cols));
  for (long long j = 0; j < cols; ++j) {
    Mask mono = colex_unrank(g.dim(), k, j);
    KForm e = KForm::zero(g.field(), g.dim(), k);
    e.set_term(mono, g.field()->one());
    Vec img = form_coords(g.ce_d(e));
    for (long long i = 0; i < rows; ++i) m.a[static_cast<int>(i)][static_cast<int>(j)] = img[static_cast<std::size_t>(i)];
  }
  return m;
}

int betti(const LieAlgebra& g, int k) {
  if (k < 0 || k > g.dim()) throw std::invalid_argument("betti: bad degree");
  long long dim_k = binomial(g.dim(), k);
  int rank_k = k == g.dim() ? 0 : rank(d_matrix(g, k));
  int rank_km1 = k == 0 ? 0 : rank(d_matrix(g, k - 1));
  return static_cast<int>(dim_k) - rank_k - rank_km1;
}

CohomologyDescriptor cohomology(const LieAlgebra& g, int k) {
  if (k < 0 || k > g.dim()) throw std::invalid_argument("cohomology: bad degree");
  long long space_dim = binomial(g.dim(), k);
  CohomologyDescriptor out(g.field(), space_dim, k);

  if (k == g.dim()) {
    // everything in top degree is closed
    for (long long i = 0; i < space_dim; ++i)
      out.cocycles.add(unit_vec(g.field(), static_cast<int>(space_dim),
                                static_cast<int>(i)));
  } else {
    Matrix dk = d_matrix(g, k);
    for (const auto& v : kernel_basis(dk)) out.cocycles.add(v);
  }
  if (k > 0) {
    Matrix dkm1 = d_matrix(g, k - 1);
    for (int j = 0; j < dkm1.cols; ++j) {
      Vec col(static_cast<std::size_t>(dkm1.rows), g.field()->zero());
      for (int i = 0; i < dkm1.rows; ++i) col[static_cast<std::size_t>(i)] = dkm1.a[i][j];
      out.coboundaries.add(col);
    }
  }

  // representatives: cocycle basis vectors surviving reduction by the
  // coboundaries and the representatives already chosen
  Subspace acc = out.coboundaries;
  for (const auto& z : out.cocycles.basis()) {
    Vec before = acc.reduce(z);
    if (acc.add(z)) {
      // normalize the representative like the echelon row it became
      int pivot = -1;
      for (int j = 0; j < static_cast<int>(before.size()); ++j) {
        if (!before[static_cast<std::size_t>(j)].is_zero()) {
          pivot = j;
          break;
        }
      }
      Vec rep = scaled(before, before[static_cast<std::size_t>(pivot)].inv());
      out.representatives.push_back(
          coords_form(g.field(), g.dim(), k, rep));
    }
  }
  out.betti = out.cocycles.dim() - out.coboundaries.dim();
  return out;
}

std::optional<KForm> is_exact(const LieAlgebra& g, const KForm& a) {
  if (!g.ce_d(a).is_zero())
    throw NotClosedError("is_exact: the form is not closed");
  int k = a.degree();
  if (k == 0) {
    // a closed 0-form is exact only when zero
    if (a.is_zero()) return KForm::zero(g.field(), g.dim(), 0);
    return std::nullopt;
  }
  Matrix d = d_matrix(g, k - 1);
  auto x = solve(d, form_coords(a));
  if (!x.has_value()) return std::nullopt;
  return coords_form(g.field(), g.dim(), k - 1, *x);
}

Vec class_coords(const CohomologyDescriptor& desc, const LieAlgebra& g,
                 const KForm& a) {
  if (a.degree() != desc.degree)
    throw std::invalid_argument("class_coords: degree mismatch");
  if (!g.ce_d(a).is_zero())
    throw NotClosedError("class_coords: the form is not closed");
  // solve over [coboundary basis | representatives]
  const FieldPtr& f = g.field();
  int rows = static_cast<int>(binomial(g.dim(), desc.degree));
  int nb = desc.coboundaries.dim();
  int nr = static_cast<int>(desc.representatives.size());
  Matrix m(f, rows, nb + nr);
  for (int c = 0; c < nb; ++c)
    for (int i = 0; i < rows; ++i)
      m.a[i][c] = desc.coboundaries.basis()[static_cast<std::size_t>(c)]
                                           [static_cast<std::size_t>(i)];
  for (int c = 0; c < nr; ++c) {
    Vec rep = form_coords(desc.representatives[static_cast<std::size_t>(c)]);
    for (int i = 0; i < rows; ++i) m.a[i][nb + c] = rep[static_cast<std::size_t>(i)];
  }
  auto x = solve(m, form_coords(a));
  if (!x.has_value())
    throw std::logic_error("class_coords: closed form outside Z^k basis");
  Vec out(static_cast<std::size_t>(nr), f->zero());
  for (int c = 0; c < nr; ++c) out[static_cast<std::size_t>(c)] = (*x)[static_cast<std::size_t>(nb + c)];
  return out;
}

}  // namespace lefschetz
