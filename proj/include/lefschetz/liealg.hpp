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

#ifndef LEFSCHETZ_LIEALG_HPP
#define LEFSCHETZ_LIEALG_HPP

#include <map>
#include <string>
#include <vector>

#include "lefschetz/exterior.hpp"
#include "lefschetz/linalg.hpp"

namespace lefschetz {

struct BracketTerm {
  int k;
  Scalar c;
};

struct BracketEntry {
  int i, j;
  std::vector<BracketTerm> terms;
};

// Construction found a basis triple violating the Jacobi identity.
struct JacobiViolation : std::runtime_error {
  JacobiViolation(int i, int j, int k, std::string defect)
      : std::runtime_error("Jacobi identity fails on basis triple (" +
                           std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + "); defect " + defect),
        i(i), j(j), k(k), defect_text(std::move(defect)) {}
  int i, j, k;
  std::string defect_text;
};

enum class TriState { yes, no, unknown };

struct Classification {
  bool nilpotent = false;
  bool solvable = false;
  TriState completely_solvable = TriState::unknown;
};

// Lie algebra given by structure constants over an exact field; the Jacobi
// identity is verified exhaustively at construction.
class LieAlgebra {
 public:
  static LieAlgebra build(FieldPtr field, int dim, std::vector<std::string> names,
                          const std::vector<BracketEntry>& entries);

  int dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }

  // [e_i, e_j] as a dense coordinate vector
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  const std::map<int, Scalar>& table(int i, int j) const;  // requires i < j

  Matrix ad_basis(int i) const;
  Matrix ad(const Vec& x) const;
  Scalar ad_trace(int i) const;

  KForm ce_d(const KForm& a) const;

  Subspace commutator() const;
  Subspace center() const;
  bool is_unimodular() const;
  Classification classify() const;
  bool is_heisenberg() const;

  // span of [u, v] over basis vectors u of x and v of y
  Subspace bracket_span(const Subspace& x, const Subspace& y) const;

  bool operator==(const LieAlgebra& o) const;

  std::vector<BracketEntry> bracket_entries() const;

 private:
  LieAlgebra() = default;
  int dim_ = 0;
  FieldPtr field_;
  std::vector<std::string> names_;
  // i < j slots only; antisymmetry is structural
  std::vector<std::map<int, Scalar>> table_;
  int slot(int i, int j) const { return i * dim_ + j; }
  // differential of the i-th dual covector: -sum c_{jk}^i e^j ^ e^k
  KForm d_covector(int i) const;
};

// f realizes a Lie algebra morphism g -> h (columns = images of g's basis).
bool is_morphism(const Matrix& f, const LieAlgebra& g, const LieAlgebra& h);
// d_g(f^* a) == f^*(d_h a) for all covectors a of h.
bool pullback_commutes_with_d(const Matrix& f, const LieAlgebra& g,
                              const LieAlgebra& h);
// pullback of a form on h along f: g -> h
KForm pullback(const Matrix& f, const LieAlgebra& g, const KForm& a);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// characteristic polynomial coefficients of a square matrix, leading first
// (monic): x^n + c[1] x^{n-1} + ... + c[n]
std::vector<Scalar> char_poly(const Matrix& m);

}  // namespace lefschetz

#endif  // LEFSCHETZ_LIEALG_HPP
