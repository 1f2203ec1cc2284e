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

#include "doctest.h"
#include "lefschetz/catalog.hpp"
#include "lefschetz/symcon.hpp"
#include "oracles.hpp"

using namespace lefschetz;
using lefschetz::testing::random_two_step;
using lefschetz::testing::Rng;

namespace {

// contactization pairs used by several property suites
std::vector<SymplecticStructure> unimodular_fixtures() {
  std::vector<SymplecticStructure> out;
  out.push_back(*catalog::abelian_symplectic(2).symplectic);
  out.push_back(*catalog::kodaira_thurston().symplectic);
  out.push_back(*catalog::heisenberg(2).symplectic);
  out.push_back(*catalog::split_family({3}, catalog::TRelation::independent).symplectic);
  out.push_back(*catalog::jordan_family(3, 2).symplectic);
  out.push_back(*catalog::bg_family().symplectic);
  return out;
}

std::optional<SymplecticStructure> random_symplectic(Rng& rng, const FieldPtr& f,
                                                     int p, int q) {
  LieAlgebra h = random_two_step(rng, f, p, q);
  if (h.dim() % 2 != 0) return std::nullopt;
  // random closed 2-form from the cocycle space, retried for nondegeneracy
  CohomologyDescriptor d2 = cohomology(h, 2);
  for (int attempt = 0; attempt < 12; ++attempt) {
    Vec coords = zero_vec(f, d2.cocycles.ambient());
    for (const auto& z : d2.cocycles.basis())
      coords = add(coords, scaled(z, f->from_rational(rng.rational(3, 2))));
    KForm omega = coords_form(f, h.dim(), 2, coords);
    if (!wedge_power(omega, h.dim() / 2).is_zero())
      return verify_symplectic(h, omega);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("verify_symplectic accepts and classifies the standard fixtures") {
  auto f = Field::rationals();
  SymplecticStructure ab = *catalog::abelian_symplectic(2).symplectic;
  CHECK(!ab.frobenius);
  CHECK(ab.n == 2);

  SymplecticStructure bg = *catalog::bg_family().symplectic;
  CHECK(!bg.frobenius);

  // aff(R): omega = e1^e2 = -d(e2) is exact, and the algebra is not unimodular
  SymplecticStructure fr = *catalog::frobenius_plane().symplectic;
  CHECK(fr.frobenius);
  CHECK(!fr.algebra.is_unimodular());

  // error paths
  LieAlgebra h3 = catalog::heisenberg(1).algebra;
  CHECK_THROWS_AS(verify_symplectic(h3, KForm::zero(f, 3, 2)), StructureError);
  LieAlgebra ab4 = LieAlgebra::build(f, 4, {}, {});
  KForm degenerate = KForm::monomial(f, 4, {0, 1}, f->one());
  CHECK_THROWS_AS(verify_symplectic(ab4, degenerate), StructureError);
  LieAlgebra kt = catalog::kodaira_thurston().algebra;
  KForm not_closed = KForm::monomial(f, 4, {2, 3}, f->one());
  CHECK_THROWS_AS(verify_symplectic(kt, not_closed), NotClosedError);
}

TEST_CASE("unimodular symplectic fixtures are solvable") {
  for (const auto& s : unimodular_fixtures()) {
    REQUIRE(s.algebra.is_unimodular());
    CHECK(s.algebra.classify().solvable);
  }
}

TEST_CASE("verify_contact computes the Reeb vector") {
  auto f = Field::rationals();
  // heisenberg3 with eta dual to the center
  ContactStructure h3 = *catalog::heisenberg(1).contact;
  CHECK(h3.xi == unit_vec(f, 3, 0));
  KForm eta_eval = h3.eta;
  CHECK(eta_eval.evaluate({h3.xi}) == f->one());

  ContactStructure h5 = *catalog::heisenberg(2).contact;
  CHECK(h5.xi == unit_vec(f, 5, 0));
  CHECK(contract(h5.xi, h5.algebra.ce_d(h5.eta)).is_zero());

  // a non-contact 1-form on abelian R^3
  LieAlgebra ab3 = LieAlgebra::build(f, 3, {}, {});
  CHECK_THROWS_AS(verify_contact(ab3, KForm::monomial(f, 3, {0}, f->one())),
                  StructureError);
  // wrong parity
  LieAlgebra ab4 = LieAlgebra::build(f, 4, {}, {});
  CHECK_THROWS_AS(verify_contact(ab4, KForm::monomial(f, 4, {0}, f->one())),
                  StructureError);
}

TEST_CASE("contactization of the abelian plane is Heisenberg") {
  for (int n : {1, 2, 3}) {
    ContactStructure c = *catalog::heisenberg(n).contact;
    CHECK(c.algebra.dim() == 2 * n + 1);
    CHECK(c.algebra.is_heisenberg());
    Subspace z = c.algebra.center();
    CHECK(z.dim() == 1);
    CHECK(z.contains(c.xi));
  }
}

TEST_CASE("contactization invariants on assorted pairs") {
  Rng rng(71);
  std::vector<SymplecticStructure> fixtures = unimodular_fixtures();
  fixtures.push_back(*catalog::frobenius_plane().symplectic);
  for (int t = 0; t < 40; ++t) {
    auto s = random_symplectic(rng, Field::rationals(), 4, 2);
    if (s.has_value()) fixtures.push_back(*s);
  }
  int pairs = 0;
  for (const auto& s : fixtures) {
    ContactStructure c = contactize(s);
    const LieAlgebra& g = c.algebra;
    const LieAlgebra& h = s.algebra;
    // -d eta restricted to the lifted h equals omega
    KForm deta = g.ce_d(c.eta);
    for (const auto& [m, coeff] : s.omega.terms()) {
      Mask lifted = m << 1;
      CHECK(deta.coeff(lifted) == -coeff);
    }
    // the center is exactly the Reeb line
    Subspace z = g.center();
    CHECK(z.dim() == 1);
    CHECK(z.contains(c.xi));
    // classification transfers
    CHECK(g.is_unimodular() == h.is_unimodular());
    Classification cg = g.classify(), ch = h.classify();
    CHECK(cg.nilpotent == ch.nilpotent);
    CHECK(cg.solvable == ch.solvable);
    ++pairs;
  }
  CHECK(pairs >= 40);
}

TEST_CASE("commutators of a unimodular contactization differ by the Reeb line") {
  Rng rng(73);
  std::vector<SymplecticStructure> fixtures = unimodular_fixtures();
  for (int t = 0; t < 60; ++t) {
    auto s = random_symplectic(rng, Field::rationals(), 4, 2);
    if (s.has_value() && s->algebra.is_unimodular()) fixtures.push_back(*s);
  }
  int cases = 0;
  for (const auto& s : fixtures) {
    if (!s.algebra.is_unimodular()) continue;
    ContactStructure c = contactize(s);
    Subspace ng = c.algebra.commutator();
    Subspace nh = s.algebra.commutator();
    CHECK(ng.contains(c.xi));
    CHECK(ng.dim() == nh.dim() + 1);
    for (const auto& v : nh.basis()) {
      Vec lifted = zero_vec(c.algebra.field(), c.algebra.dim());
      for (int i = 0; i < s.algebra.dim(); ++i)
        lifted[static_cast<std::size_t>(i + 1)] = v[static_cast<std::size_t>(i)];
      CHECK(ng.contains(lifted));
    }
    ++cases;
  }
  CHECK(cases >= 30);
}

TEST_CASE("horizontal forms share the two differentials") {
  Rng rng(79);
  SymplecticStructure s = *catalog::bg_family().symplectic;
  ContactStructure c = contactize(s);
  const LieAlgebra& g = c.algebra;
  const LieAlgebra& h = s.algebra;
  for (int t = 0; t < 40; ++t) {
    int k = static_cast<int>(rng.ll(0, 4));
    KForm beta_h = rng.form(h.field(), h.dim(), k, 3);
    // lift to g on indices 1..2n
    KForm beta_g = KForm::zero(g.field(), g.dim(), k);
    for (const auto& [m, coeff] : beta_h.terms()) beta_g.set_term(m << 1, coeff);
    if (k > 0) CHECK(contract(c.xi, beta_g).is_zero());
    KForm dg = g.ce_d(beta_g);
    KForm dh = h.ce_d(beta_h);
    KForm dh_lift = KForm::zero(g.field(), g.dim(), k + 1);
    for (const auto& [m, coeff] : dh.terms()) dh_lift.set_term(m << 1, coeff);
    CHECK(dg == dh_lift);
  }
}

TEST_CASE("closed one-forms on a unimodular contactization are degenerate "
          "against the top power") {
  for (const auto& s : unimodular_fixtures()) {
    ContactStructure c = contactize(s);
    const LieAlgebra& g = c.algebra;
    KForm deta = g.ce_d(c.eta);
    CohomologyDescriptor h1 = cohomology(g, 1);
    for (const auto& alpha : h1.representatives) {
      CHECK(wedge(wedge_power(deta, c.n), alpha).is_zero());
      KForm img = wedge(c.eta, wedge(wedge_power(deta, c.n - 1), alpha));
      CHECK(g.ce_d(img).is_zero());
    }
  }
}

TEST_CASE("decontactization inverts contactization on the nose") {
  Rng rng(83);
  std::vector<SymplecticStructure> fixtures = unimodular_fixtures();
  for (int t = 0; t < 80; ++t) {
    auto s = random_symplectic(rng, Field::rationals(), 4, 2);
    if (s.has_value()) fixtures.push_back(*s);
  }
  int cases = 0;
  for (const auto& s : fixtures) {
    ContactStructure c = contactize(s);
    Decontactization back = decontactize(c);
    CHECK(back.structure.algebra == s.algebra);
    CHECK(back.structure.omega == s.omega);
    // the embedding witnesses an isomorphism of contact algebras
    CHECK(is_morphism(back.embedding, contactize(back.structure).algebra,
                      c.algebra));
    CHECK(inverse(back.embedding).has_value());
    ++cases;
  }
  CHECK(cases >= 50);
}

TEST_CASE("decontactization of a general contact algebra round trips up to "
          "the witnessed isomorphism") {
  // eta with mixed components: the kernel basis is not the coordinate one
  ContactStructure c = *catalog::affr_contact().contact;
  Decontactization back = decontactize(c);
  ContactStructure again = contactize(back.structure);
  CHECK(is_morphism(back.embedding, again.algebra, c.algebra));
  // eta pulls back along the embedding
  KForm pulled = pullback(back.embedding, again.algebra, c.eta);
  CHECK(pulled == again.eta);
}

TEST_CASE("trivial center refuses decontactization") {
  ContactStructure sl2 = *catalog::sl2_contact().contact;
  CHECK(sl2.algebra.center().dim() == 0);
  try {
    decontactize(sl2);
    FAIL("expected a trivial-center error");
  } catch (const StructureError& e) {
    CHECK(e.code == "trivial-center");
  }
}

TEST_CASE("contact centers have dimension at most one, spanned by the Reeb "
          "vector") {
  std::vector<ContactStructure> cs = {*catalog::heisenberg(2).contact,
                                      *catalog::sl2_contact().contact,
                                      *catalog::affr_contact().contact,
                                      contactize(*catalog::bg_family().symplectic)};
  for (const auto& c : cs) {
    Subspace z = c.algebra.center();
    CHECK(z.dim() <= 1);
    if (z.dim() == 1) CHECK(z.contains(c.xi));
  }
}

TEST_CASE("splitting conditions: abelian case passes all six") {
  SymplecticStructure ab = *catalog::abelian_symplectic(2).symplectic;
  Subspace everything(ab.algebra.field(), 4);
  for (int i = 0; i < 4; ++i)
    everything.add(unit_vec(ab.algebra.field(), 4, i));
  BgReport rep = verify_bg_conditions(ab, everything);
  CHECK(rep.abelian_complement);
  CHECK(rep.even_dimensions);
  CHECK(rep.center_meets_trivially);
  CHECK(rep.split_cohomologous);
  CHECK(rep.parts_nondegenerate);
  CHECK(rep.infinitesimal_symplectic);
  CHECK(rep.all());
}

TEST_CASE("splitting conditions: nonabelian nilpotent fails the center test") {
  SymplecticStructure kt = *catalog::kodaira_thurston().symplectic;
  const FieldPtr& f = kt.algebra.field();
  // complement of the commutator span{e3}: candidates e1, e2, e4
  Subspace cand(f, 4);
  cand.add(unit_vec(f, 4, 0));
  cand.add(unit_vec(f, 4, 1));
  cand.add(unit_vec(f, 4, 3));
  BgReport rep = verify_bg_conditions(kt, cand);
  CHECK(!rep.center_meets_trivially);
  CHECK(!rep.all());
}

TEST_CASE("splitting conditions: the split family passes with span{f1, f2}") {
  auto objs = catalog::split_family({3}, catalog::TRelation::independent);
  const SymplecticStructure& s = *objs.symplectic;
  const FieldPtr& f = s.algebra.field();
  Subspace cand(f, s.algebra.dim());
  cand.add(unit_vec(f, s.algebra.dim(), 0));
  cand.add(unit_vec(f, s.algebra.dim(), 1));
  BgReport rep = verify_bg_conditions(s, cand);
  CHECK(rep.all());
  // candidate of the wrong dimension is refused
  Subspace small(f, s.algebra.dim());
  small.add(unit_vec(f, s.algebra.dim(), 0));
  CHECK_THROWS_AS(verify_bg_conditions(s, small), StructureError);
}
