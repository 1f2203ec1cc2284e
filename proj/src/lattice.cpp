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

#include "lefschetz/lattice.hpp"

namespace lefschetz {

bool verify_nilpotent_ideal(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient() != g.dim())
    throw LatticeError("dimension-mismatch", "ideal lives in the wrong space");
  if (ideal.dim() != g.dim() - 1)
    throw LatticeError("wrong-codimension",
                       "the ideal must have codimension one");
  for (int i = 0; i < g.dim(); ++i) {
    for (const auto& r : ideal.basis()) {
      if (!ideal.contains(g.bracket(unit_vec(g.field(), g.dim(), i), r)))
        return false;
    }
  }
  // lower central series of the ideal as a subalgebra
  Subspace series = g.bracket_span(ideal, ideal);
  for (int step = 0; step <= g.dim() + 1; ++step) {
    if (series.dim() == 0) return true;
    Subspace next = g.bracket_span(ideal, series);
    if (next == series) return false;
    series = next;
  }
  return false;
}

Matrix exact_exp(const DerivationBlockSpec& spec) {
  auto [field, alpha] = alpha_for_k(spec.k);
  if (spec.blocks.empty())
    throw LatticeError("empty-spec", "no derivation blocks given");
  std::vector<Matrix> blocks;
  for (const auto& b : spec.blocks) {
    const Matrix& n = b.nilpotent;
    if (n.rows != n.cols)
      throw LatticeError("bad-block", "nilpotent part must be square");
    if (!n.field->same(*field))
      throw LatticeError("bad-block", "block entries must live in the "
                                      "certificate's quadratic field");
    for (int i = 0; i < n.rows; ++i)
      for (int j = 0; j < n.cols; ++j)
        if (!n.a[i][j].is_rational())
          throw LatticeError("bad-block", "nilpotent part must be rational");
    if (!n.pow(static_cast<unsigned>(n.rows)).is_zero())
      throw LatticeError("not-nilpotent",
                         "block matrix is not nilpotent of its size");
    // exp(N) = sum_{j < size} N^j / j!
    Matrix e = Matrix::identity(field, n.rows);
    Matrix p = Matrix::identity(field, n.rows);
    Rational fact(1);
    for (int j = 1; j < n.rows; ++j) {
      p = p * n;
      fact = fact * Rational(j);
      e = e + p.scaled(field->from_rational(fact.inv()));
    }
    if (b.scaled) e = e.scaled(alpha.pow(b.power));
    blocks.push_back(std::move(e));
  }
  return Matrix::block_diag(blocks);
}

namespace {

// D restricted to the ideal, in the ideal's echelon basis; the complement
// generator is the unique non-pivot coordinate.
Matrix ideal_derivation(const LieAlgebra& g, const Subspace& ideal) {
  std::vector<bool> pivot(static_cast<std::size_t>(g.dim()), false);
  for (int p : ideal.pivots()) pivot[static_cast<std::size_t>(p)] = true;
  int comp = -1;
  for (int i = 0; i < g.dim(); ++i)
    if (!pivot[static_cast<std::size_t>(i)]) comp = i;
  Matrix bas(g.field(), g.dim(), ideal.dim());
  for (int c = 0; c < ideal.dim(); ++c)
    for (int i = 0; i < g.dim(); ++i)
      bas.a[i][c] = ideal.basis()[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
  Matrix d(g.field(), ideal.dim(), ideal.dim());
  Vec x = unit_vec(g.field(), g.dim(), comp);
  for (int c = 0; c < ideal.dim(); ++c) {
    Vec img = g.bracket(x, ideal.basis()[static_cast<std::size_t>(c)]);
    auto coords = solve(bas, img);
    if (!coords.has_value())
      throw LatticeError("not-ideal", "derivation image left the ideal");
    for (int r = 0; r < ideal.dim(); ++r) d.a[r][c] = (*coords)[static_cast<std::size_t>(r)];
  }
  return d;
}

// The block spec must reproduce D as blockdiag(power * tau * I + N), with
// tau the single declared indeterminate of g's field, or 1 when the field
// has none. This ties the certificate to the actual derivation.
bool check_derivation(const LieAlgebra& g, const Subspace& ideal,
                      const DerivationBlockSpec& spec) {
  const FieldPtr& f = g.field();
  if (f->kind() == FieldKind::rational_functions && f->nvars() != 1)
    return false;
  Scalar tau = f->kind() == FieldKind::rational_functions ? f->variable(0)
                                                          : f->one();
  Matrix d = ideal_derivation(g, ideal);
  int off = 0;
  for (const auto& b : spec.blocks) {
    int size = b.nilpotent.rows;
    if (off + size > d.rows) return false;
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        Scalar expect = f->from_rational(b.nilpotent.a[i][j].as_rational());
        if (b.scaled && i == j)
          expect += f->integer(b.power) * tau;
        if (!(d.a[off + i][off + j] == expect)) return false;
      }
    }
    // off-block entries in these rows/columns must vanish
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < d.cols; ++j) {
        if (j >= off && j < off + size) continue;
        if (!d.a[off + i][j].is_zero()) return false;
        if (!d.a[j][off + i].is_zero()) return false;
      }
    }
    off += size;
  }
  return off == d.rows;
}

}  // namespace

LatticeCertificate lattice_check(const LieAlgebra& g, const Subspace& ideal,
                                 const DerivationBlockSpec& spec,
                                 const Matrix& candidate,
                                 const std::string& algebra_id) {
  if (!g.is_unimodular())
    throw LatticeError("not-unimodular",
                       "lattice criterion requires a unimodular algebra");
  if (!verify_nilpotent_ideal(g, ideal))
    throw LatticeError("not-nilpotent-ideal",
                       "the subspace is not a nilpotent ideal");
  auto [kfield, alpha] = alpha_for_k(spec.k);
  (void)alpha;
  int nd = ideal.dim();
  if (candidate.rows != nd || candidate.cols != nd)
    throw LatticeError("bad-candidate", "candidate must be a square change of "
                                        "basis of the ideal");
  if (!candidate.field->same(*kfield))
    throw LatticeError("bad-candidate",
                       "candidate entries must live in the certificate field");
  auto cand_inv = inverse(candidate);
  if (!cand_inv.has_value())
    throw LatticeError("singular-candidate", "candidate basis is singular");

  LatticeCertificate cert;
  cert.algebra_id = algebra_id;
  cert.derivation_consistent = check_derivation(g, ideal, spec);
  if (!cert.derivation_consistent)
    throw LatticeError("spec-mismatch",
                       "the block spec does not match the derivation on the ideal");

  // ideal structure constants, transported into the certificate field
  const FieldPtr& f = g.field();
  Matrix bas(f, g.dim(), nd);
  for (int c = 0; c < nd; ++c)
    for (int i = 0; i < g.dim(); ++i)
      bas.a[i][c] = ideal.basis()[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
  // d^k_{ij} over g's field
  std::vector<std::vector<Vec>> constants(
      static_cast<std::size_t>(nd),
      std::vector<Vec>(static_cast<std::size_t>(nd)));
  for (int i = 0; i < nd; ++i) {
    for (int j = 0; j < nd; ++j) {
      Vec br = g.bracket(ideal.basis()[static_cast<std::size_t>(i)],
                         ideal.basis()[static_cast<std::size_t>(j)]);
      auto coords = solve(bas, br);
      if (!coords.has_value())
        throw LatticeError("not-ideal", "ideal is not closed under brackets");
      constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *coords;
    }
  }
  // move them into the certificate field
  bool same_field = f->same(*kfield);
  auto to_cert_field = [&](const Scalar& s) {
    if (same_field) return s;
    if (!s.is_rational())
      throw LatticeError("ideal-not-transportable",
                         "ideal constants are neither rational nor already in "
                         "the certificate field");
    return kfield->from_rational(s.as_rational());
  };

  // structure constants in the candidate basis:
  // [c_a, c_b] = sum_{i,j} C_ia C_jb [r_i, r_j]; express back via candidate
  cert.rational_basis_ok = true;
  for (int a = 0; a < nd; ++a) {
    for (int b = a + 1; b < nd; ++b) {
      Vec img = zero_vec(kfield, nd);
      for (int i = 0; i < nd; ++i) {
        if (candidate.a[i][a].is_zero()) continue;
        for (int j = 0; j < nd; ++j) {
          if (candidate.a[j][b].is_zero()) continue;
          const Vec& dij = constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          for (int t = 0; t < nd; ++t) {
            if (dij[static_cast<std::size_t>(t)].is_zero()) continue;
            img[static_cast<std::size_t>(t)] +=
                candidate.a[i][a] * candidate.a[j][b] *
                to_cert_field(dij[static_cast<std::size_t>(t)]);
          }
        }
      }
      Vec in_new = cand_inv->apply(img);
      for (int t = 0; t < nd; ++t) {
        if (!in_new[static_cast<std::size_t>(t)].is_rational()) {
          cert.rational_basis_ok = false;
          cert.offending.push_back(
              "structure constant [" + std::to_string(a) + "," +
              std::to_string(b) + "] -> " + std::to_string(t) + " = " +
              in_new[static_cast<std::size_t>(t)].str());
        }
      }
    }
  }

  cert.exp_matrix_ideal = exact_exp(spec);
  cert.exp_matrix = *cand_inv * cert.exp_matrix_ideal * candidate;
  cert.integral_ok = true;
  for (int i = 0; i < nd; ++i) {
    for (int j = 0; j < nd; ++j) {
      if (!cert.exp_matrix.a[i][j].is_integer()) {
        cert.integral_ok = false;
        cert.offending.push_back("exp entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") = " +
                                 cert.exp_matrix.a[i][j].str());
      }
    }
  }
  return cert;
}

BgSolutionSpace bg_solution_space(long long k) {
  if (k < 3) throw LatticeError("bad-parameter", "k must be >= 3");
  auto f = Field::rationals();
  auto I = [&](long long v) { return f->integer(v); };
  long long k2 = k * k;
  Matrix m(f, 4, 4);
  // rows: the four rationality conditions on p = p1 + p2 a, q = q1 + q2 a
  m.a[0] = {I(0), I(1), I(k2 - 1), I(k * (k2 - 2))};
  m.a[1] = {I(1), I(k), I(k), I(k2 - 1)};
  m.a[2] = {I(k), I(k2 - 1), I(1), I(k)};
  m.a[3] = {I(k2 - 1), I(k * (k2 - 2)), I(0), I(1)};

  BgSolutionSpace out;
  out.rank_of_m = rank(m);
  // closed-form solution family in (u, v)
  auto annihilates = [&](const Rational& u, const Rational& v) {
    Rational denom(BigInt(k2 - 1), BigInt(1));
    Rational p1 = -(Rational(BigInt(k * (k2 - 2)), BigInt(1)) * u + v) / denom;
    Rational q1 = -(u + Rational(BigInt(k * (k2 - 2)), BigInt(1)) * v) / denom;
    Vec x = {f->from_rational(p1), f->from_rational(u), f->from_rational(q1),
             f->from_rational(v)};
    return is_zero_vec(m.apply(x));
  };
  out.parametrization_ok = annihilates(Rational(1), Rational(0)) &&
                           annihilates(Rational(0), Rational(1)) &&
                           annihilates(Rational(0), Rational(1 - k2));
  return out;
}

}  // namespace lefschetz
