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

#include "lefschetz/catalog.hpp"

#include <algorithm>

namespace lefschetz::catalog {

namespace {

KForm mono(const FieldPtr& f, int dim, std::vector<int> idx) {
  return KForm::monomial(f, dim, idx, f->one());
}

}  // namespace

CatalogObjects abelian_symplectic(int n) {
  if (n < 1) throw std::invalid_argument("abelian_symplectic: n >= 1");
  auto f = Field::rationals();
  LieAlgebra h = LieAlgebra::build(f, 2 * n, {}, {});
  KForm omega = KForm::zero(f, 2 * n, 2);
  for (int i = 0; i < n; ++i)
    omega = omega + mono(f, 2 * n, {2 * i, 2 * i + 1});
  CatalogObjects out{h, verify_symplectic(h, omega), std::nullopt, {}};
  out.contact = contactize(*out.symplectic);
  return out;
}

CatalogObjects heisenberg(int n) {
  if (n < 1) throw std::invalid_argument("heisenberg: n >= 1");
  auto f = Field::rationals();
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  LieAlgebra plane = LieAlgebra::build(f, 2 * n, names, {});
  KForm omega = KForm::zero(f, 2 * n, 2);
  for (int i = 0; i < n; ++i) omega = omega + mono(f, 2 * n, {i, n + i});
  SymplecticStructure s = verify_symplectic(plane, omega);
  ContactStructure c = contactize(s);
  return CatalogObjects{c.algebra, s, c, {}};
}

CatalogObjects kodaira_thurston() {
  auto f = Field::rationals();
  LieAlgebra h = LieAlgebra::build(f, 4, {"e1", "e2", "e3", "e4"},
                                   {{0, 1, {{2, f->one()}}}});
  KForm omega = mono(f, 4, {0, 3}) + mono(f, 4, {1, 2});
  CatalogObjects out{h, verify_symplectic(h, omega), std::nullopt, {}};
  out.contact = contactize(*out.symplectic);
  return out;
}

CatalogObjects split_family(const std::vector<long long>& ks, TRelation rel) {
  int m = static_cast<int>(ks.size());
  if (m < 1) throw std::invalid_argument("split_family: at least one k");
  for (long long k : ks)
    if (k < 3) throw std::invalid_argument("split_family: each k must be >= 3");

  // one log-parameter per distinct k, or a single shared one
  std::vector<int> var_of(static_cast<std::size_t>(m), 0);
  std::vector<std::string> vars;
  if (rel == TRelation::all_equal) {
    vars = {"t"};
  } else {
    std::vector<long long> seen;
    for (int i = 0; i < m; ++i) {
      auto it = std::find(seen.begin(), seen.end(), ks[static_cast<std::size_t>(i)]);
      if (it == seen.end()) {
        seen.push_back(ks[static_cast<std::size_t>(i)]);
        var_of[static_cast<std::size_t>(i)] = static_cast<int>(seen.size()) - 1;
      } else {
        var_of[static_cast<std::size_t>(i)] = static_cast<int>(it - seen.begin());
      }
    }
    if (seen.size() == 1) {
      vars = {"t"};
    } else {
      for (std::size_t i = 1; i <= seen.size(); ++i)
        vars.push_back("t" + std::to_string(i));
    }
  }
  auto f = Field::rational_functions(vars);

  int dim = 2 * m + 2;
  std::vector<std::string> names = {"f1", "f2"};
  for (int i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
  auto u = [&](int i) { return 1 + i; };          // u_i, 1-based
  auto v = [&](int i) { return 1 + m + i; };      // v_i, 1-based

  std::vector<BracketEntry> entries;
  for (int i = 1; i <= m; ++i) {
    Scalar tau = f->variable(var_of[static_cast<std::size_t>(i - 1)]);
    entries.push_back({0, u(i), {{u(i), tau}}});
    entries.push_back({0, v(i), {{v(i), -tau}}});
  }
  LieAlgebra h = LieAlgebra::build(f, dim, names, entries);

  KForm delta = mono(f, dim, {0, 1});
  KForm omega = delta;
  for (int i = 1; i <= m; ++i) omega = omega + mono(f, dim, {u(i), v(i)});

  CatalogObjects out{h, verify_symplectic(h, omega), std::nullopt, {}};
  out.contact = contactize(*out.symplectic);
  out.algebra = out.contact->algebra;

  // the named 2-form and (2n-2)-form families; n = m + 1
  int n = m + 1;
  auto& forms = out.named_forms;
  forms["delta"] = delta;
  std::vector<int> gamma_all;
  for (int i = 1; i <= m; ++i) gamma_all.push_back(u(i));
  for (int i = 1; i <= m; ++i) gamma_all.push_back(v(i));
  std::sort(gamma_all.begin(), gamma_all.end());
  KForm big_gamma = mono(f, dim, gamma_all);
  forms["Gamma"] = big_gamma;

  std::vector<KForm> gamma(static_cast<std::size_t>(n + 1),
                           KForm::zero(f, dim, 2));
  gamma[1] = delta;
  for (int i = 1; i <= m; ++i) gamma[static_cast<std::size_t>(i + 1)] = mono(f, dim, {u(i), v(i)});
  for (int l = 1; l <= n; ++l)
    forms["gamma_" + std::to_string(l)] = gamma[static_cast<std::size_t>(l)];

  // complements, signed so that omega^{n-2} gamma_a = (n-2)! sum_{b != a} gammabar_b
  auto sgn = [&](long long e) { return e % 2 == 0 ? f->one() : -f->one(); };
  std::vector<KForm> gammabar(static_cast<std::size_t>(n + 1),
                              KForm::zero(f, dim, 2 * n - 2));
  gammabar[1] = big_gamma.scaled(sgn(static_cast<long long>(m) * (m - 1) / 2));
  for (int i = 1; i <= m; ++i) {
    std::vector<int> rest;
    for (int t : gamma_all)
      if (t != u(i) && t != v(i)) rest.push_back(t);
    KForm cmpl = wedge(delta, mono(f, dim, rest));
    gammabar[static_cast<std::size_t>(i + 1)] =
        cmpl.scaled(sgn(static_cast<long long>(m - 1) * (m - 2) / 2));
  }
  for (int l = 1; l <= n; ++l)
    forms["gammabar_" + std::to_string(l)] = gammabar[static_cast<std::size_t>(l)];

  forms["sigma_1"] = omega;
  for (int k = 2; k <= n; ++k)
    forms["sigma_" + std::to_string(k)] =
        gamma[static_cast<std::size_t>(k)] - gamma[1];
  KForm sbar1 = gammabar[1];
  for (int l = 2; l <= n; ++l)
    sbar1 = l % 2 == 1 ? sbar1 + gammabar[static_cast<std::size_t>(l)]
                       : sbar1 - gammabar[static_cast<std::size_t>(l)];
  forms["sigmabar_1"] = sbar1;
  for (int k = 2; k <= n; ++k)
    forms["sigmabar_" + std::to_string(k)] =
        gammabar[static_cast<std::size_t>(k)] - gammabar[1];

  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j)
        forms["theta_" + std::to_string(i) + "_" + std::to_string(j)] =
            mono(f, dim, {u(i), v(j)});
  return out;
}

CatalogObjects jordan_family(long long k, int m) {
  if (k < 3) throw std::invalid_argument("jordan_family: k >= 3");
  if (m < 2) throw std::invalid_argument("jordan_family: m >= 2");
  auto f = Field::rational_functions({"t"});
  Scalar t = f->variable(0);
  int dim = 2 * m + 2;
  std::vector<std::string> names = {"f1", "f2"};
  for (int i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
  auto u = [&](int i) { return 1 + i; };
  auto v = [&](int i) { return 1 + m + i; };

  std::vector<BracketEntry> entries;
  for (int i = 1; i <= m; ++i) {
    BracketEntry eu{0, u(i), {{u(i), t}}};
    if (i < m) eu.terms.push_back({u(i + 1), f->one()});
    entries.push_back(std::move(eu));
    BracketEntry ev{0, v(i), {{v(i), -t}}};
    if (i < m) ev.terms.push_back({v(i + 1), f->one()});
    entries.push_back(std::move(ev));
  }
  LieAlgebra h = LieAlgebra::build(f, dim, names, entries);

  KForm omega = mono(f, dim, {0, 1});
  for (int i = 1; i <= m; ++i) {
    KForm term = mono(f, dim, {u(i), v(m + 1 - i)});
    omega = i % 2 == 1 ? omega + term : omega - term;
  }
  CatalogObjects out{h, verify_symplectic(h, omega), std::nullopt, {}};
  out.contact = contactize(*out.symplectic);
  out.algebra = out.contact->algebra;
  (void)k;  // the log-parameter only matters for the lattice fixture
  return out;
}

namespace {

CatalogObjects bg_with_params(const FieldPtr& f, const Scalar& a,
                              const Scalar& b, const Scalar& c,
                              const Scalar& e, const Scalar& ff) {
  if (a.is_zero() || b.is_zero() || c.is_zero() || ff.is_zero())
    throw StructureError("zero-parameter",
                         "bg family: a, b, c, f must be nonzero");
  const int w1 = 0, w2 = 1, x1 = 2, y1 = 3, z1 = 4, x2 = 5, y2 = 6, z2 = 7;
  std::vector<BracketEntry> entries = {
      {x1, y1, {{z1, f->one()}}},
      {x2, y2, {{z2, f->one()}}},
      {w1, x1, {{x1, f->one()}}},
      {w1, y1, {{y1, f->integer(-2)}}},
      {w1, z1, {{z1, f->integer(-1)}}},
      {w1, x2, {{x2, f->integer(-1)}}},
      {w1, y2, {{y2, f->integer(2)}}},
      {w1, z2, {{z2, f->one()}}},
  };
  LieAlgebra h = LieAlgebra::build(
      f, 8, {"w1", "w2", "x1", "y1", "z1", "x2", "y2", "z2"}, entries);
  KForm omega = mono(f, 8, {w1, w2}).scaled(a) + mono(f, 8, {x1, z1}).scaled(b) +
                mono(f, 8, {x2, z2}).scaled(c) + mono(f, 8, {y1, y2}).scaled(ff);
  if (!e.is_zero()) omega = omega + mono(f, 8, {x1, x2}).scaled(e);
  CatalogObjects out{h, verify_symplectic(h, omega), std::nullopt, {}};
  out.contact = contactize(*out.symplectic);
  return out;
}

}  // namespace

CatalogObjects bg_family() {
  auto f = Field::rationals();
  return bg_with_params(f, f->one(), f->one(), f->one(), f->zero(), f->one());
}

CatalogObjects bg_family_quadratic(long long k) {
  auto [f, alpha] = alpha_for_k(k);
  Scalar one = f->one();
  Scalar b = alpha.inv();
  Scalar ell = f->integer(k * (k * k - 2)) - f->integer(k * k - 1) * alpha;
  Scalar am1 = alpha * alpha - one;
  Scalar ff = -(am1.pow(3) * ell).inv();
  return bg_with_params(f, one, b, b, f->zero(), ff);
}

CatalogObjects frobenius_plane() {
  auto f = Field::rationals();
  LieAlgebra aff = LieAlgebra::build(f, 2, {}, {{0, 1, {{1, f->one()}}}});
  KForm omega = mono(f, 2, {0, 1});
  return CatalogObjects{aff, verify_symplectic(aff, omega), std::nullopt, {}};
}

CatalogObjects sl2_contact() {
  auto f = Field::rationals();
  LieAlgebra sl2 = LieAlgebra::build(
      f, 3, {},
      {{0, 1, {{2, f->one()}}},
       {2, 0, {{0, f->integer(2)}}},
       {2, 1, {{1, f->integer(-2)}}}});
  KForm eta = mono(f, 3, {2});
  ContactStructure c = verify_contact(sl2, eta);
  return CatalogObjects{sl2, std::nullopt, c, {}};
}

CatalogObjects rotation_solvable() {
  auto f = Field::rationals();
  LieAlgebra rot = LieAlgebra::build(
      f, 3, {}, {{0, 1, {{2, f->one()}}}, {0, 2, {{1, f->integer(-1)}}}});
  return CatalogObjects{rot, std::nullopt, std::nullopt, {}};
}

CatalogObjects affr_contact() {
  // aff(R) + R with eta = e2 + e3: contact but not unimodular
  auto f = Field::rationals();
  LieAlgebra ar = LieAlgebra::build(f, 3, {}, {{0, 1, {{1, f->one()}}}});
  KForm eta = mono(f, 3, {1}) + mono(f, 3, {2});
  ContactStructure c = verify_contact(ar, eta);
  return CatalogObjects{ar, std::nullopt, c, {}};
}

// ---------------------------------------------------------------------------
// lattice fixtures

namespace {

Subspace all_but(const LieAlgebra& g, int skip) {
  Subspace s(g.field(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    if (i != skip) s.add(unit_vec(g.field(), g.dim(), i));
  return s;
}

Matrix rational_matrix(const FieldPtr& f, const std::vector<std::vector<long long>>& rows) {
  Matrix m(f, static_cast<int>(rows.size()),
           rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.a[static_cast<int>(i)][static_cast<int>(j)] =
          f->integer(rows[i][j]);
  return m;
}

Matrix subdiagonal_ones(const FieldPtr& f, int m) {
  Matrix n(f, m, m);
  for (int i = 0; i + 1 < m; ++i) n.a[i + 1][i] = f->one();
  return n;
}

}  // namespace

LatticeFixture lattice_fixture_split(long long k, int m) {
  if (m < 1) throw std::invalid_argument("lattice fixture: m >= 1");
  std::vector<long long> ks(static_cast<std::size_t>(m), k);
  CatalogObjects objs = split_family(ks, TRelation::all_equal);
  const LieAlgebra& g = objs.contact->algebra;  // (xi, f1, f2, u.., v..)
  auto [f, alpha] = alpha_for_k(k);

  std::string id = "lattice-split-" + std::to_string(k) +
                   (m > 1 ? "-m" + std::to_string(m) : "");
  // ideal drops f1; order (xi, f2, u_1..u_m, v_1..v_m)
  DerivationBlockSpec spec;
  spec.k = k;
  spec.blocks.push_back({false, 0, rational_matrix(f, {{0, 1}, {0, 0}})});
  Matrix zero_m(f, m, m);
  spec.blocks.push_back({true, 1, zero_m});
  spec.blocks.push_back({true, -1, zero_m});

  // candidate columns: xi, f2, then (w_i, w~_i) with p = 1, q = 1/(1-alpha^2)
  int nd = 2 * m + 2;
  Scalar q = (f->one() - alpha * alpha).inv();
  Matrix cand(f, nd, nd);
  cand.a[0][0] = f->one();
  cand.a[1][1] = f->one();
  for (int i = 1; i <= m; ++i) {
    int row_u = 1 + i;
    int row_v = 1 + m + i;
    int col_w = 2 * i;
    int col_wt = 2 * i + 1;
    cand.a[row_u][col_w] = f->one();
    cand.a[row_v][col_w] = q * alpha;
    cand.a[row_u][col_wt] = alpha;
    cand.a[row_v][col_wt] = q;
  }
  std::vector<Matrix> expect = {rational_matrix(f, {{1, 1}, {0, 1}})};
  for (int i = 0; i < m; ++i)
    expect.push_back(rational_matrix(f, {{0, -1}, {1, k}}));
  return LatticeFixture{id, g, all_but(g, 1), spec, cand,
                        Matrix::block_diag(expect)};
}

LatticeFixture lattice_fixture_jordan(long long k, int m) {
  if (m < 2 || m % 2 != 0)
    throw LatticeError("odd-m", "the Jordan-family fixture needs even m >= 2; "
                                "odd m is an open case");
  CatalogObjects objs = jordan_family(k, m);
  const LieAlgebra& g = objs.contact->algebra;
  auto [f, alpha] = alpha_for_k(k);

  std::string id = "lattice-jordan-" + std::to_string(k) + "-" + std::to_string(m);
  DerivationBlockSpec spec;
  spec.k = k;
  spec.blocks.push_back({false, 0, rational_matrix(f, {{0, 1}, {0, 0}})});
  spec.blocks.push_back({true, 1, subdiagonal_ones(f, m)});
  spec.blocks.push_back({true, -1, subdiagonal_ones(f, m)});

  // w_1 = u_1 + v_1 and w_{j+1} = exp(A0) w_j, a cyclic basis of the uv-block
  Matrix exp_uv(f, 2 * m, 2 * m);
  {
    DerivationBlockSpec uv;
    uv.k = k;
    uv.blocks.push_back({true, 1, subdiagonal_ones(f, m)});
    uv.blocks.push_back({true, -1, subdiagonal_ones(f, m)});
    exp_uv = exact_exp(uv);
  }
  int nd = 2 * m + 2;
  Matrix cand(f, nd, nd);
  cand.a[0][0] = f->one();
  cand.a[1][1] = f->one();
  Vec w = zero_vec(f, 2 * m);
  w[0] = f->one();
  w[static_cast<std::size_t>(m)] = f->one();
  for (int j = 0; j < 2 * m; ++j) {
    for (int r = 0; r < 2 * m; ++r) cand.a[2 + r][2 + j] = w[static_cast<std::size_t>(r)];
    w = exp_uv.apply(w);
  }
  // companion block of (x^2 - kx + 1)^m after the unipotent corner
  std::vector<Rational> qpoly = {Rational(1)};  // ascending coefficients
  for (int rep = 0; rep < m; ++rep) {
    std::vector<Rational> next(qpoly.size() + 2, Rational(0));
    for (std::size_t i = 0; i < qpoly.size(); ++i) {
      next[i] += qpoly[i];
      next[i + 1] += Rational(-k) * qpoly[i];
      next[i + 2] += qpoly[i];
    }
    qpoly = std::move(next);
  }
  Matrix comp(f, 2 * m, 2 * m);
  for (int j = 0; j + 1 < 2 * m; ++j) comp.a[j + 1][j] = f->one();
  for (int i = 0; i < 2 * m; ++i)
    comp.a[i][2 * m - 1] = -f->from_rational(qpoly[static_cast<std::size_t>(i)]);
  return LatticeFixture{
      id, g, all_but(g, 1), spec, cand,
      Matrix::block_diag({rational_matrix(f, {{1, 1}, {0, 1}}), comp})};
}

LatticeFixture lattice_fixture_bg(long long k) {
  CatalogObjects objs = bg_family_quadratic(k);
  const LieAlgebra& g = objs.contact->algebra;  // (xi, w1, w2, x1, y1, z1, x2, y2, z2)
  auto [f, alpha] = alpha_for_k(k);

  std::string id = "lattice-bg-" + std::to_string(k);
  // ideal order after dropping w1: (xi, w2, x1, y1, z1, x2, y2, z2)
  DerivationBlockSpec spec;
  spec.k = k;
  spec.blocks.push_back({false, 0, rational_matrix(f, {{0, 1}, {0, 0}})});
  Matrix one_cell(f, 1, 1);
  spec.blocks.push_back({true, 1, one_cell});   // x1
  spec.blocks.push_back({true, -2, one_cell});  // y1
  spec.blocks.push_back({true, -1, one_cell});  // z1
  spec.blocks.push_back({true, -1, one_cell});  // x2
  spec.blocks.push_back({true, 2, one_cell});   // y2
  spec.blocks.push_back({true, 1, one_cell});   // z2

  // ideal coordinate rows: 0 xi, 1 w2, 2 x1, 3 y1, 4 z1, 5 x2, 6 y2, 7 z2
  // candidate columns:     0 xi, 1 w2, 2 x~1, 3 x~2, 4 y~1, 5 y~2, 6 z~1, 7 z~2
  Scalar ell = f->integer(k * (k * k - 2)) - f->integer(k * k - 1) * alpha;
  Scalar lam2 = alpha * alpha - f->one();
  Scalar del2 = -lam2 * ell;
  Matrix cand(f, 8, 8);
  cand.a[0][0] = f->one();
  cand.a[1][1] = f->one();
  cand.a[2][2] = f->one();          // x~1 = x1 + alpha x2
  cand.a[5][2] = alpha;
  cand.a[2][3] = alpha;             // x~2 = alpha x1 + x2
  cand.a[5][3] = f->one();
  cand.a[3][4] = lam2;              // y~1 = lam2 y1 + del2 alpha y2
  cand.a[6][4] = del2 * alpha;
  cand.a[3][5] = lam2 * alpha;      // y~2 = lam2 alpha y1 + del2 y2
  cand.a[6][5] = del2;
  cand.a[4][6] = f->one();          // z~1 = z1 + alpha z2
  cand.a[7][6] = alpha;
  cand.a[4][7] = alpha;             // z~2 = alpha z1 + z2
  cand.a[7][7] = f->one();
  long long k2 = k * k;
  Matrix expect = Matrix::block_diag({
      rational_matrix(f, {{1, 1}, {0, 1}}),
      rational_matrix(f, {{0, -1}, {1, k}}),
      rational_matrix(f, {{k2 - 1, k}, {-k, -1}}),
      rational_matrix(f, {{k, 1}, {-1, 0}}),
  });
  return LatticeFixture{id, g, all_but(g, 1), spec, cand, expect};
}

// ---------------------------------------------------------------------------
// entry registry

namespace {

Manifest manifest_abelian4() {
  Manifest m;
  for (int k = 0; k <= 4; ++k)
    m.betti[k] = {static_cast<int>(binomial(4, k)), Origin::direct};
  m.unimodular = {{true, Origin::direct}};
  m.nilpotent = {{true, Origin::direct}};
  m.symplectic_verdicts[1] = {true, Origin::direct};
  m.symplectic_verdicts[2] = {true, Origin::direct};
  m.contact_verdicts[1] = {true, Origin::direct};
  return m;
}

std::vector<Entry> make_entries() {
  std::vector<Entry> out;

  out.push_back({"abelian-4", "abelian R^4 with the standard symplectic form",
                 [] { return abelian_symplectic(2); }, nullptr,
                 manifest_abelian4()});

  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    m.nilpotent = {{true, Origin::direct}};
    m.heisenberg = {{false, Origin::direct}};
    m.symplectic_verdicts[0] = {true, Origin::direct};
    m.symplectic_verdicts[1] = {false, Origin::reference};
    m.contact_verdicts[1] = {false, Origin::reference};
    out.push_back({"h3xr", "h3 + R with a symplectic form (nonabelian nilpotent)",
                   [] { return kodaira_thurston(); }, nullptr, m});
  }

  for (int n : {1, 2, 3}) {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    m.nilpotent = {{true, Origin::direct}};
    m.heisenberg = {{true, Origin::direct}};
    m.contact_verdicts[1] = {true, Origin::reference};
    if (n == 1) {
      m.betti[0] = {1, Origin::derived};
      m.betti[1] = {2, Origin::derived};
      m.betti[2] = {2, Origin::derived};
      m.betti[3] = {1, Origin::derived};
    }
    out.push_back({"heisenberg-" + std::to_string(2 * n + 1),
                   "Heisenberg contact algebra of dimension " +
                       std::to_string(2 * n + 1),
                   [n] { return heisenberg(n); }, nullptr, m});
  }

  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    m.nilpotent = {{false, Origin::direct}};
    m.betti[2] = {1, Origin::reference};  // n - 1 with n = 2
    m.contact_verdicts[1] = {true, Origin::reference};
    m.contact_verdicts[2] = {true, Origin::reference};
    out.push_back({"split-3", "almost abelian, diagonal action, one block",
                   [] { return split_family({3}, TRelation::independent); },
                   nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    m.betti[2] = {2, Origin::reference};  // n - 1 with n = 3
    m.betti[5] = {2, Origin::reference};
    m.contact_verdicts[1] = {true, Origin::reference};
    m.contact_verdicts[2] = {true, Origin::reference};
    out.push_back({"split-3-4", "almost abelian, diagonal action, two blocks",
                   [] { return split_family({3, 4}, TRelation::independent); },
                   nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    m.betti[2] = {4, Origin::derived};  // (n-1) + two extra cross classes
    m.contact_verdicts[1] = {true, Origin::reference};
    m.contact_verdicts[2] = {true, Origin::reference};
    out.push_back({"spliteq-3-3", "diagonal action with a shared log-parameter",
                   [] { return split_family({3, 3}, TRelation::all_equal); },
                   nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    m.contact_verdicts[1] = {true, Origin::reference};
    m.contact_verdicts[2] = {false, Origin::reference};
    out.push_back({"jordan-3-2", "almost abelian, double Jordan block action",
                   [] { return jordan_family(3, 2); }, nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    m.nilpotent = {{false, Origin::direct}};
    m.betti[1] = {2, Origin::reference};
    m.betti[2] = {5, Origin::reference};
    m.symplectic_verdicts[1] = {true, Origin::reference};
    m.symplectic_verdicts[2] = {false, Origin::reference};
    m.contact_verdicts[1] = {true, Origin::reference};
    m.contact_verdicts[2] = {false, Origin::reference};
    out.push_back({"bg", "8-dimensional almost nilpotent with Heisenberg wings",
                   [] { return bg_family(); }, nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{false, Origin::direct}};
    m.symplectic_verdicts[0] = {false, Origin::direct};
    out.push_back({"frobenius-plane", "aff(R) with an exact symplectic form",
                   [] { return frobenius_plane(); }, nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    out.push_back({"sl2", "contact structure with trivial center",
                   [] { return sl2_contact(); }, nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{true, Origin::direct}};
    out.push_back({"rotation", "solvable with complex adjoint eigenvalues",
                   [] { return rotation_solvable(); }, nullptr, m});
  }
  {
    Manifest m;
    m.unimodular = {{false, Origin::direct}};
    m.contact_verdicts[0] = {false, Origin::direct};
    out.push_back({"affr", "non-unimodular contact algebra",
                   [] { return affr_contact(); }, nullptr, m});
  }

  {
    Manifest m;
    m.lattice_certifies = true;
    out.push_back({"lattice-split-3", "lattice certificate, diagonal family",
                   [] { return split_family({3}, TRelation::all_equal); },
                   [] { return lattice_fixture_split(3, 1); }, m});
  }
  {
    Manifest m;
    m.lattice_certifies = true;
    out.push_back({"lattice-jordan-3-2", "lattice certificate, Jordan family",
                   [] { return jordan_family(3, 2); },
                   [] { return lattice_fixture_jordan(3, 2); }, m});
  }
  {
    Manifest m;
    m.lattice_certifies = true;
    out.push_back({"lattice-bg-3", "lattice certificate, Heisenberg-wing family",
                   [] { return bg_family_quadratic(3); },
                   [] { return lattice_fixture_bg(3); }, m});
  }
  return out;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = make_entries();
  return kEntries;
}

const Entry* find_entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::string> run_manifest(const Entry& e) {
  std::vector<std::string> failures;
  CatalogObjects objs = e.build();
  for (const auto& [k, expected] : e.manifest.betti) {
    int got = betti(objs.algebra, k);
    if (got != expected.first)
      failures.push_back("betti(" + std::to_string(k) + ") = " +
                         std::to_string(got) + ", expected " +
                         std::to_string(expected.first));
  }
  if (e.manifest.unimodular.has_value()) {
    bool got = objs.algebra.is_unimodular();
    if (got != e.manifest.unimodular->first)
      failures.push_back("unimodularity mismatch");
  }
  if (e.manifest.nilpotent.has_value()) {
    bool got = objs.algebra.classify().nilpotent;
    if (got != e.manifest.nilpotent->first)
      failures.push_back("nilpotency mismatch");
  }
  if (e.manifest.heisenberg.has_value()) {
    bool got = objs.algebra.is_heisenberg();
    if (got != e.manifest.heisenberg->first)
      failures.push_back("heisenberg recognition mismatch");
  }
  for (const auto& [s, expected] : e.manifest.symplectic_verdicts) {
    if (!objs.symplectic.has_value()) {
      failures.push_back("no symplectic structure for the stated verdict");
      continue;
    }
    bool got = symplectic_lefschetz(*objs.symplectic, s).verdict;
    if (got != expected.first)
      failures.push_back("symplectic " + std::to_string(s) +
                         "-Lefschetz verdict mismatch");
  }
  for (const auto& [s, expected] : e.manifest.contact_verdicts) {
    if (!objs.contact.has_value()) {
      failures.push_back("no contact structure for the stated verdict");
      continue;
    }
    bool got = contact_lefschetz(*objs.contact, s).verdict;
    if (got != expected.first)
      failures.push_back("contact " + std::to_string(s) +
                         "-Lefschetz verdict mismatch");
  }
  if (e.manifest.lattice_certifies) {
    if (!e.build_lattice) {
      failures.push_back("entry lacks a lattice fixture");
    } else {
      LatticeFixture fix = e.build_lattice();
      LatticeCertificate cert =
          lattice_check(fix.algebra, fix.ideal, fix.spec, fix.candidate, fix.id);
      if (!cert.valid()) failures.push_back("lattice certificate invalid");
      if (!(cert.exp_matrix == fix.expected_integral))
        failures.push_back("integral matrix differs from the expected blocks");
    }
  }
  return failures;
}

}  // namespace lefschetz::catalog
