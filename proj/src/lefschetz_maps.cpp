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

#include "lefschetz/lefschetz_maps.hpp"

namespace lefschetz {

namespace {

// kernel combination -> form over the representative basis
KForm combine_reps(const std::vector<KForm>& reps, const Vec& coeffs) {
  KForm out = reps[0].scaled(coeffs[0]);
  for (std::size_t i = 1; i < reps.size(); ++i)
    out = out + reps[static_cast<std::size_t>(i)].scaled(coeffs[i]);
  return out;
}

// bijectivity of the map sending source representative i to the class of
// images[i] in the target descriptor; fills the kernel witness if any
void decide_bijectivity(const LieAlgebra& g, const CohomologyDescriptor& target,
                        const std::vector<KForm>& source_reps,
                        const std::vector<KForm>& images, DegreeVerdict* out) {
  const FieldPtr& f = g.field();
  int cols = static_cast<int>(images.size());
  int rows = target.betti;
  Matrix m(f, rows, cols);
  for (int j = 0; j < cols; ++j) {
    Vec c = class_coords(target, g, images[static_cast<std::size_t>(j)]);
    for (int i = 0; i < rows; ++i) m.a[i][j] = c[static_cast<std::size_t>(i)];
  }
  int r = rank(m);
  out->injective = r == cols;
  out->surjective = r == rows;
  if (!out->injective && !source_reps.empty()) {
    auto ker = kernel_basis(m);
    if (!ker.empty()) {
      KForm w = combine_reps(source_reps, ker[0]);
      out->kernel_witness = w;
    }
  }
}

}  // namespace

LefschetzReport symplectic_lefschetz(const SymplecticStructure& s, int deg) {
  if (deg < 0 || deg > s.n)
    throw std::invalid_argument("symplectic_lefschetz: s out of range");
  const LieAlgebra& h = s.algebra;
  LefschetzReport rep;
  rep.mode = LefschetzMode::symplectic;
  rep.s = deg;
  rep.verdict = true;
  for (int k = 0; k <= deg; ++k) {
    DegreeVerdict v;
    v.k = k;
    CohomologyDescriptor hk = cohomology(h, k);
    CohomologyDescriptor htop = cohomology(h, 2 * s.n - k);
    KForm power = wedge_power(s.omega, s.n - k);
    std::vector<KForm> images;
    for (const auto& r : hk.representatives) images.push_back(wedge(power, r));
    decide_bijectivity(h, htop, hk.representatives, images, &v);
    v.verdict = v.injective && v.surjective;
    rep.verdict = rep.verdict && v.verdict;
    rep.degrees.push_back(std::move(v));
  }
  return rep;
}

std::optional<KForm> horizontal_primitive_rep(const ContactStructure& c, int k,
                                              const CohomologyDescriptor& hk,
                                              const Vec& klass) {
  const LieAlgebra& g = c.algebra;
  const FieldPtr& f = g.field();
  int dim = g.dim();
  if (hk.betti == 0 || is_zero_vec(klass))
    return KForm::zero(f, dim, k);
  KForm rep = combine_reps(hk.representatives, klass);

  KForm deta = g.ce_d(c.eta);
  KForm power = wedge_power(deta, c.n - k + 1);

  if (k == 0) {
    // 0-forms are horizontal by convention and primitive for degree reasons
    return rep;
  }

  // unknowns: gamma in Lambda^{k-1}; beta = rep + d gamma
  long long gcols = binomial(dim, k - 1);
  long long rows_h = binomial(dim, k - 1);           // iota_xi beta = 0
  long long rows_p = binomial(dim, k + 2 * (c.n - k + 1));  // primitivity
  if (rows_p < 0) rows_p = 0;
  Matrix m(f, static_cast<int>(rows_h + rows_p), static_cast<int>(gcols));
  Vec rhs;
  {
    Vec h_rhs = form_coords(contract(c.xi, rep));
    Vec p_rhs = form_coords(wedge(power, rep));
    for (auto& x : h_rhs) rhs.push_back(-x);
    for (auto& x : p_rhs) rhs.push_back(-x);
  }
  for (long long j = 0; j < gcols; ++j) {
    KForm mono = KForm::zero(f, dim, k - 1);
    mono.set_term(colex_unrank(dim, k - 1, j), f->one());
    KForm dmono = g.ce_d(mono);
    Vec hj = form_coords(contract(c.xi, dmono));
    Vec pj = form_coords(wedge(power, dmono));
    for (long long i = 0; i < rows_h; ++i)
      m.a[static_cast<int>(i)][static_cast<int>(j)] = hj[static_cast<std::size_t>(i)];
    for (long long i = 0; i < rows_p; ++i)
      m.a[static_cast<int>(rows_h + i)][static_cast<int>(j)] = pj[static_cast<std::size_t>(i)];
  }
  auto gamma = solve(m, rhs);
  if (!gamma.has_value()) return std::nullopt;
  KForm gamma_form = coords_form(f, dim, k - 1, *gamma);
  return rep + g.ce_d(gamma_form);
}

LefschetzReport contact_lefschetz(const ContactStructure& c, int deg) {
  if (deg < 0 || deg > c.n)
    throw std::invalid_argument("contact_lefschetz: s out of range");
  const LieAlgebra& g = c.algebra;
  const FieldPtr& f = g.field();
  int dim = g.dim();
  KForm deta = g.ce_d(c.eta);

  LefschetzReport rep;
  rep.mode = LefschetzMode::contact;
  rep.s = deg;
  rep.verdict = true;

  for (int k = 0; k <= deg; ++k) {
    DegreeVerdict v;
    v.k = k;
    CohomologyDescriptor hk = cohomology(g, k);
    CohomologyDescriptor htop = cohomology(g, 2 * c.n + 1 - k);
    KForm lef_power = wedge_power(deta, c.n - k);
    KForm prim_power = wedge_power(deta, c.n - k + 1);

    auto lef_image = [&](const KForm& beta) {
      KForm img = wedge(c.eta, wedge(lef_power, beta));
      // closedness is guaranteed for admissible beta; anything else is a bug
      if (!g.ce_d(img).is_zero())
        throw std::logic_error("contact_lefschetz: image of an admissible "
                               "form is not closed");
      return img;
    };

    // (a) coverage: an admissible representative for every class
    std::vector<KForm> reps;
    std::vector<int> covered_index;
    for (int i = 0; i < hk.betti; ++i) {
      Vec klass = zero_vec(f, hk.betti);
      klass[static_cast<std::size_t>(i)] = f->one();
      auto beta = horizontal_primitive_rep(c, k, hk, klass);
      if (beta.has_value()) {
        reps.push_back(*beta);
        covered_index.push_back(i);
      } else {
        v.domain_covered = false;
        if (!v.uncovered_witness.has_value())
          v.uncovered_witness = hk.representatives[static_cast<std::size_t>(i)];
      }
    }
    v.admissible_reps = reps;

    // (b) functionality: exact admissible forms must have exact images
    if (k == 0) {
      // the only exact 0-form is zero
    } else {
      // admissible space S: d beta = 0, iota_xi beta = 0, prim ^ beta = 0
      long long cols = binomial(dim, k);
      Matrix sys(f, 0, 0);
      {
        Matrix dm = d_matrix(g, k);
        long long rows_h = binomial(dim, k - 1);
        long long rows_p = binomial(dim, k + 2 * (c.n - k + 1));
        Matrix m(f, static_cast<int>(dm.rows + rows_h + rows_p),
                 static_cast<int>(cols));
        for (int i = 0; i < dm.rows; ++i)
          for (int j = 0; j < dm.cols; ++j) m.a[i][j] = dm.a[i][j];
        for (long long j = 0; j < cols; ++j) {
          KForm mono = KForm::zero(f, dim, k);
          mono.set_term(colex_unrank(dim, k, j), f->one());
          Vec hj = form_coords(contract(c.xi, mono));
          Vec pj = form_coords(wedge(prim_power, mono));
          for (long long i = 0; i < rows_h; ++i)
            m.a[dm.rows + static_cast<int>(i)][static_cast<int>(j)] =
                hj[static_cast<std::size_t>(i)];
          for (long long i = 0; i < rows_p; ++i)
            m.a[dm.rows + static_cast<int>(rows_h + i)][static_cast<int>(j)] =
                pj[static_cast<std::size_t>(i)];
        }
        sys = std::move(m);
      }
      std::vector<Vec> admissible = kernel_basis(sys);
      if (!admissible.empty()) {
        // intersect with the coboundaries: solve sum_i c_i s_i = d gamma
        Matrix dm1 = d_matrix(g, k - 1);
        int na = static_cast<int>(admissible.size());
        Matrix join(f, static_cast<int>(cols), na + dm1.cols);
        for (int j = 0; j < na; ++j)
          for (long long i = 0; i < cols; ++i)
            join.a[static_cast<int>(i)][j] =
                admissible[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        for (int j = 0; j < dm1.cols; ++j)
          for (int i = 0; i < dm1.rows; ++i)
            join.a[i][na + j] = -dm1.a[i][j];
        Subspace exact_admissible(f, static_cast<int>(cols));
        for (const auto& ker : kernel_basis(join)) {
          Vec comb = zero_vec(f, static_cast<int>(cols));
          for (int j = 0; j < na; ++j)
            if (!ker[static_cast<std::size_t>(j)].is_zero())
              comb = add(comb, scaled(admissible[static_cast<std::size_t>(j)],
                                      ker[static_cast<std::size_t>(j)]));
          if (!is_zero_vec(comb)) exact_admissible.add(comb);
        }
        for (const auto& vec : exact_admissible.basis()) {
          KForm beta = coords_form(f, dim, k, vec);
          KForm img = lef_image(beta);
          if (!is_exact(g, img).has_value()) {
            v.well_defined = false;
            if (!v.broken_pair_witness.has_value()) v.broken_pair_witness = beta;
            break;
          }
        }
      }
    }

    // (c) the induced map on classes
    std::vector<KForm> images;
    std::vector<KForm> source_reps;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      images.push_back(lef_image(reps[t]));
      source_reps.push_back(
          hk.representatives[static_cast<std::size_t>(covered_index[t])]);
    }
    if (!images.empty() || htop.betti == 0) {
      decide_bijectivity(g, htop, source_reps, images, &v);
      if (images.empty()) {
        v.injective = true;  // vacuously: zero map from the zero space
        v.surjective = htop.betti == 0;
      }
    } else {
      v.injective = hk.betti == 0;
      v.surjective = false;
    }
    // a kernel witness must be a genuinely admissible source form
    if (v.kernel_witness.has_value() && !reps.empty()) {
      // rebuild from admissible representatives instead of raw class reps
      Matrix m(f, htop.betti, static_cast<int>(images.size()));
      for (std::size_t j = 0; j < images.size(); ++j) {
        Vec cc = class_coords(htop, g, images[j]);
        for (int i = 0; i < htop.betti; ++i)
          m.a[i][static_cast<int>(j)] = cc[static_cast<std::size_t>(i)];
      }
      auto ker = kernel_basis(m);
      if (!ker.empty()) v.kernel_witness = combine_reps(reps, ker[0]);
    }

    v.verdict = v.domain_covered && v.well_defined && v.injective && v.surjective;
    rep.verdict = rep.verdict && v.verdict;
    rep.degrees.push_back(std::move(v));
  }
  return rep;
}

TheoremMainCheck theorem_main_check(const SymplecticStructure& s) {
  if (!s.algebra.is_unimodular())
    throw StructureError("not-unimodular",
                         "theorem-main: the symplectic algebra must be unimodular");
  TheoremMainCheck out;
  out.h_verdict = symplectic_lefschetz(s, 1).verdict;
  out.g_verdict = contact_lefschetz(contactize(s), 1).verdict;
  out.agree = out.h_verdict == out.g_verdict;
  return out;
}

}  // namespace lefschetz
