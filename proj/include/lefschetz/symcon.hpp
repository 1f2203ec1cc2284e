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

#ifndef LEFSCHETZ_SYMCON_HPP
#define LEFSCHETZ_SYMCON_HPP

#include <optional>

#include "lefschetz/cohomology.hpp"

namespace lefschetz {

struct StructureError : std::runtime_error {
  StructureError(std::string code_, const std::string& what)
      : std::runtime_error(what), code(std::move(code_)) {}
  std::string code;
};

// (h, omega) with d omega = 0 and omega^n != 0, dim h = 2n.
struct SymplecticStructure {
  LieAlgebra algebra;
  KForm omega;
  int n = 0;
  bool frobenius = false;  // omega is exact
};

// (g, eta) with eta ^ (d eta)^n != 0, dim g = 2n + 1; xi is the Reeb vector.
struct ContactStructure {
  LieAlgebra algebra;
  KForm eta;
  Vec xi;
  int n = 0;
};

SymplecticStructure verify_symplectic(const LieAlgebra& h, const KForm& omega);
ContactStructure verify_contact(const LieAlgebra& g, const KForm& eta);

// Central extension by the symplectic cocycle; xi becomes basis index 0 and
// the old basis shifts to 1..2n.
ContactStructure contactize(const SymplecticStructure& s);

// Inverse construction on ker eta; requires a nontrivial center.
struct Decontactization {
  SymplecticStructure structure;
  // columns: coordinates in g of the h-basis (kernel of eta), prefixed by xi,
  // i.e. the isomorphism witness from contactize(structure) back to g
  Matrix embedding;
};
Decontactization decontactize(const ContactStructure& c);

// Structure-splitting report for the six abelian-complement conditions of a
// unimodular symplectic Lie algebra.
struct BgReport {
  bool abelian_complement = false;   // (i)
  bool even_dimensions = false;      // (ii)
  bool center_meets_trivially = false;  // (iii)
  bool split_cohomologous = false;   // (iv) adapted representative exists,
                                     //      both parts closed and non-exact
  bool parts_nondegenerate = false;  // (v)
  bool infinitesimal_symplectic = false;  // (vi)
  bool all() const {
    return abelian_complement && even_dimensions && center_meets_trivially &&
           split_cohomologous && parts_nondegenerate && infinitesimal_symplectic;
  }
  std::optional<KForm> omega_a, omega_n;  // the adapted pieces when found
  std::optional<KForm> obstruction;       // mixed part that cannot be corrected
};

BgReport verify_bg_conditions(const SymplecticStructure& s,
                              const Subspace& a_candidate);

// omega(x, y) on vectors, convenience wrapper
Scalar eval_2form(const KForm& omega, const Vec& x, const Vec& y);

}  // namespace lefschetz

#endif  // LEFSCHETZ_SYMCON_HPP
