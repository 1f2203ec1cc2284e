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

#include "lefschetz/symcon.hpp"

#include <bit>

namespace lefschetz {

Scalar eval_2form(const KForm& omega, const Vec& x, const Vec& y) {
  return omega.evaluate({x, y});
}

namespace {

// Pullback of a form along the linear map represented columnwise by f,
// viewed purely on coordinate spaces (no algebras involved): the i-th
// covector of the target pulls back to the i-th row of f.
KForm pullback_linear(const Matrix& f, const KForm& a) {
  KForm out = KForm::zero(a.field(), f.cols, a.degree());
  if (a.degree() == 0) {
    for (const auto& [m, c] : a.terms()) out.set_term(m, c);
    return out;
  }
  std::vector<KForm> cov;
  for (int i = 0; i < f.rows; ++i) {
    KForm w = KForm::zero(a.field(), f.cols, 1);
    for (int j = 0; j < f.cols; ++j)
      if (!f.a[i][j].is_zero()) w.set_term(Mask(1) << j, f.a[i][j]);
    cov.push_back(std::move(w));
  }
  for (const auto& [m, c] : a.terms()) {
    KForm t = KForm::unit(a.field(), f.cols);
    for (int i : indices_from_mask(m)) t = wedge(t, cov[static_cast<std::size_t>(i)]);
    out = out + t.scaled(c);
  }
  return out;
}

}  // namespace

SymplecticStructure verify_symplectic(const LieAlgebra& h, const KForm& omega) {
  if (h.dim() % 2 != 0)
    throw StructureError("odd-dimension", "symplectic: the algebra dimension is odd");
  if (omega.degree() != 2 || omega.dim() != h.dim())
    throw StructureError("bad-form", "symplectic: omega must be a 2-form on the algebra");
  KForm d = h.ce_d(omega);
  if (!d.is_zero())
    throw NotClosedError("symplectic: d(omega) = " + d.str(h.names()) + " is nonzero");
  int n = h.dim() / 2;
  if (wedge_power(omega, n).is_zero())
    throw StructureError("degenerate", "symplectic: omega^n vanishes");
  SymplecticStructure s{h, omega, n, false};
  s.frobenius = is_exact(h, omega).has_value();
  return s;
}

ContactStructure verify_contact(const LieAlgebra& g, const KForm& eta) {
  if (g.dim() % 2 != 1)
    throw StructureError("even-dimension", "contact: the algebra dimension is even");
  if (eta.degree() != 1 || eta.dim() != g.dim())
    throw StructureError("bad-form", "contact: eta must be a 1-form on the algebra");
  int n = (g.dim() - 1) / 2;
  KForm deta = g.ce_d(eta);
  KForm vol = wedge(eta, wedge_power(deta, n));
  if (vol.is_zero())
    throw StructureError("not-contact", "contact: eta ^ (d eta)^n vanishes");

  // Reeb vector: eta(xi) = 1 and iota_xi d eta = 0; 2n + 2 linear conditions
  const FieldPtr& f = g.field();
  int dim = g.dim();
  Matrix m(f, dim + 1, dim);
  Vec rhs = zero_vec(f, dim + 1);
  for (int j = 0; j < dim; ++j)
    m.a[0][j] = eta.coeff(Mask(1) << j);
  rhs[0] = f->one();
  for (int j = 0; j < dim; ++j) {
    KForm contraction = contract(unit_vec(f, dim, j), deta);
    Vec coords = form_coords(contraction);
    for (int i = 0; i < dim; ++i) m.a[1 + i][j] = coords[static_cast<std::size_t>(i)];
  }
  auto xi = solve(m, rhs);
  if (!xi.has_value() || !kernel_basis(m).empty())
    throw std::logic_error("contact: Reeb system is not uniquely solvable "
                           "although the volume form is nonzero");
  return ContactStructure{g, eta, *xi, n};
}

ContactStructure contactize(const SymplecticStructure& s) {
  const LieAlgebra& h = s.algebra;
  const FieldPtr& f = h.field();
  int hd = h.dim();
  std::string xi_name = "xi";
  for (const auto& nm : h.names())
    if (nm == xi_name) xi_name = "xi0";
  std::vector<std::string> names;
  names.push_back(xi_name);
  for (const auto& nm : h.names()) names.push_back(nm);

  std::vector<BracketEntry> entries;
  for (int i = 0; i < hd; ++i) {
    for (int j = i + 1; j < hd; ++j) {
      BracketEntry e{i + 1, j + 1, {}};
      for (const auto& [k, c] : h.table(i, j)) e.terms.push_back({k + 1, c});
      Scalar w = s.omega.coeff((Mask(1) << i) | (Mask(1) << j));
      if (!w.is_zero()) e.terms.push_back({0, w});
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  LieAlgebra g = [&] {
    try {
      return LieAlgebra::build(f, hd + 1, names, entries);
    } catch (const JacobiViolation& v) {
      // impossible: the cocycle condition is exactly d omega = 0
      throw std::logic_error(std::string("contactize: Jacobi failed: ") + v.what());
    }
  }();
  KForm eta = KForm::monomial(f, hd + 1, {0}, f->one());
  ContactStructure c{g, eta, unit_vec(f, hd + 1, 0), s.n};
  KForm deta = g.ce_d(eta);
  if (wedge(eta, wedge_power(deta, s.n)).is_zero())
    throw std::logic_error("contactize: produced a non-contact form");
  return c;
}

Decontactization decontactize(const ContactStructure& c) {
  const LieAlgebra& g = c.algebra;
  const FieldPtr& f = g.field();
  Subspace z = g.center();
  if (z.dim() == 0)
    throw StructureError("trivial-center",
                         "decontactize: the center is trivial");
  int dim = g.dim();
  int hd = dim - 1;

  // h = ker eta, in canonical kernel order
  Matrix eta_row(f, 1, dim);
  for (int j = 0; j < dim; ++j) eta_row.a[0][j] = c.eta.coeff(Mask(1) << j);
  std::vector<Vec> hbasis = kernel_basis(eta_row);
  if (static_cast<int>(hbasis.size()) != hd)
    throw std::logic_error("decontactize: kernel of a contact form has wrong rank");

  // solve for coordinates in the h-basis: stack basis vectors columnwise
  Matrix bas(f, dim, hd);
  for (int k = 0; k < hd; ++k)
    for (int i = 0; i < dim; ++i) bas.a[i][k] = hbasis[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];

  auto eta_of = [&](const Vec& v) {
    Scalar out = f->zero();
    for (int i = 0; i < dim; ++i) out += eta_row.a[0][i] * v[static_cast<std::size_t>(i)];
    return out;
  };

  std::vector<std::string> names;
  for (int k = 0; k < hd; ++k) {
    // reuse the ambient name when the kernel vector is a standard basis vector
    const Vec& v = hbasis[static_cast<std::size_t>(k)];
    int unit_at = -1;
    int nonzeros = 0;
    for (int i = 0; i < dim; ++i) {
      if (!v[static_cast<std::size_t>(i)].is_zero()) {
        ++nonzeros;
        if (v[static_cast<std::size_t>(i)].is_one()) unit_at = i;
      }
    }
    if (nonzeros == 1 && unit_at >= 0)
      names.push_back(g.names()[static_cast<std::size_t>(unit_at)]);
    else
      names.push_back("h" + std::to_string(k + 1));
  }

  std::vector<BracketEntry> entries;
  for (int i = 0; i < hd; ++i) {
    for (int j = i + 1; j < hd; ++j) {
      Vec w = g.bracket(hbasis[static_cast<std::size_t>(i)], hbasis[static_cast<std::size_t>(j)]);
      // project along xi: p_h(w) = w - eta(w) xi
      Vec ph = sub(w, scaled(c.xi, eta_of(w)));
      auto coords = solve(bas, ph);
      if (!coords.has_value())
        throw std::logic_error("decontactize: projected bracket left ker eta");
      BracketEntry e{i, j, {}};
      for (int k = 0; k < hd; ++k)
        if (!(*coords)[static_cast<std::size_t>(k)].is_zero())
          e.terms.push_back({k, (*coords)[static_cast<std::size_t>(k)]});
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  LieAlgebra h = LieAlgebra::build(f, hd, names, entries);

  KForm minus_deta = -g.ce_d(c.eta);
  KForm omega = KForm::zero(f, hd, 2);
  for (int i = 0; i < hd; ++i) {
    for (int j = i + 1; j < hd; ++j) {
      Scalar v = eval_2form(minus_deta, hbasis[static_cast<std::size_t>(i)], hbasis[static_cast<std::size_t>(j)]);
      if (!v.is_zero()) omega.set_term((Mask(1) << i) | (Mask(1) << j), v);
    }
  }
  SymplecticStructure s = verify_symplectic(h, omega);

  // isomorphism witness from contactize(s) to g: xi first, then the h-basis
  Matrix embedding(f, dim, dim);
  for (int i = 0; i < dim; ++i) embedding.a[i][0] = c.xi[static_cast<std::size_t>(i)];
  for (int k = 0; k < hd; ++k)
    for (int i = 0; i < dim; ++i)
      embedding.a[i][1 + k] = hbasis[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  return Decontactization{std::move(s), std::move(embedding)};
}

BgReport verify_bg_conditions(const SymplecticStructure& s,
                              const Subspace& a_cand) {
  const LieAlgebra& h = s.algebra;
  const FieldPtr& f = h.field();
  int dim = h.dim();
  Subspace n_sub = h.commutator();
  int b1 = dim - n_sub.dim();
  if (a_cand.ambient() != dim || a_cand.dim() != b1)
    throw StructureError("dimension-mismatch",
                         "bg-conditions: the candidate complement must have "
                         "dimension b1 = " + std::to_string(b1));

  BgReport rep;
  int ka = a_cand.dim();
  int kn = n_sub.dim();

  bool abelian = h.bracket_span(a_cand, a_cand).dim() == 0;
  bool complement = Subspace::intersect(a_cand, n_sub).dim() == 0 && ka + kn == dim;
  rep.abelian_complement = abelian && complement;
  rep.even_dimensions = ka % 2 == 0 && kn % 2 == 0;
  rep.center_meets_trivially =
      Subspace::intersect(h.center(), n_sub).dim() == 0;

  if (!complement) return rep;  // the splitting below needs a genuine complement

  // adapted coordinates: columns a-basis then n-basis
  Matrix P(f, dim, dim);
  for (int k = 0; k < ka; ++k)
    for (int i = 0; i < dim; ++i) P.a[i][k] = a_cand.basis()[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  for (int k = 0; k < kn; ++k)
    for (int i = 0; i < dim; ++i) P.a[i][ka + k] = n_sub.basis()[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  auto Pinv = inverse(P);
  if (!Pinv.has_value()) throw std::logic_error("bg-conditions: singular splitting");

  // fixed enumeration of mixed monomials e^p ^ e^q with p < ka <= q
  auto mixed_coords = [&](const KForm& two_form_adapted) {
    Vec out;
    out.reserve(static_cast<std::size_t>(ka) * kn);
    for (int p = 0; p < ka; ++p)
      for (int q = ka; q < dim; ++q)
        out.push_back(two_form_adapted.coeff((Mask(1) << p) | (Mask(1) << q)));
    return out;
  };

  KForm omega_ad = pullback_linear(P, s.omega);
  // solve mixed(omega + d gamma) = 0 for gamma in Lambda^1
  Matrix sys(f, ka * kn, dim);
  for (int l = 0; l < dim; ++l) {
    KForm dl = h.ce_d(KForm::monomial(f, dim, {l}, f->one()));
    Vec col = mixed_coords(pullback_linear(P, dl));
    for (int r = 0; r < ka * kn; ++r) sys.a[r][l] = col[static_cast<std::size_t>(r)];
  }
  Vec target = mixed_coords(omega_ad);
  for (auto& t : target) t = -t;
  auto gamma = solve(sys, target);

  if (!gamma.has_value()) {
    // report the uncorrectable mixed component
    KForm mixed = KForm::zero(f, dim, 2);
    int r = 0;
    for (int p = 0; p < ka; ++p)
      for (int q = ka; q < dim; ++q, ++r)
        mixed.set_term((Mask(1) << p) | (Mask(1) << q), omega_ad.coeff((Mask(1) << p) | (Mask(1) << q)));
    rep.obstruction = pullback_linear(*Pinv, mixed);
    return rep;
  }

  KForm gamma_form = KForm::zero(f, dim, 1);
  for (int l = 0; l < dim; ++l)
    if (!(*gamma)[static_cast<std::size_t>(l)].is_zero())
      gamma_form.set_term(Mask(1) << l, (*gamma)[static_cast<std::size_t>(l)]);
  KForm omega_adj = s.omega + h.ce_d(gamma_form);
  KForm adj_ad = pullback_linear(P, omega_adj);

  KForm part_a_ad = KForm::zero(f, dim, 2);
  KForm part_n_ad = KForm::zero(f, dim, 2);
  for (const auto& [m, c] : adj_ad.terms()) {
    auto idx = indices_from_mask(m);
    if (idx[1] < ka)
      part_a_ad.set_term(m, c);
    else if (idx[0] >= ka)
      part_n_ad.set_term(m, c);
    else
      throw std::logic_error("bg-conditions: mixed part survived the correction");
  }
  KForm omega_a = pullback_linear(*Pinv, part_a_ad);
  KForm omega_n = pullback_linear(*Pinv, part_n_ad);
  rep.omega_a = omega_a;
  rep.omega_n = omega_n;

  auto closed_nonexact = [&](const KForm& w, int part_dim) {
    if (part_dim == 0) return true;
    if (!h.ce_d(w).is_zero()) return false;
    return !is_exact(h, w).has_value();
  };
  rep.split_cohomologous =
      closed_nonexact(omega_a, ka) && closed_nonexact(omega_n, kn);

  auto nondeg_on = [&](const KForm& w, const Subspace& sub) {
    if (sub.dim() == 0) return true;
    Matrix m(f, sub.dim(), sub.dim());
    for (int p = 0; p < sub.dim(); ++p)
      for (int q = 0; q < sub.dim(); ++q)
        m.a[p][q] = eval_2form(w, sub.basis()[static_cast<std::size_t>(p)], sub.basis()[static_cast<std::size_t>(q)]);
    return rank(m) == sub.dim();
  };
  rep.parts_nondegenerate = nondeg_on(omega_a, a_cand) && nondeg_on(omega_n, n_sub);

  bool inf_sympl = true;
  for (const auto& x : a_cand.basis()) {
    for (const auto& u : n_sub.basis()) {
      for (const auto& v : n_sub.basis()) {
        Scalar val = eval_2form(omega_n, h.bracket(x, u), v) +
                     eval_2form(omega_n, u, h.bracket(x, v));
        if (!val.is_zero()) {
          inf_sympl = false;
          break;
        }
      }
      if (!inf_sympl) break;
    }
    if (!inf_sympl) break;
  }
  rep.infinitesimal_symplectic = inf_sympl;
  return rep;
}

}  // namespace lefschetz
