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

#ifndef LEFSCHETZ_LATTICE_HPP
#define LEFSCHETZ_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/liealg.hpp"
#include "lefschetz/numbers.hpp"

namespace lefschetz {

struct LatticeError : std::runtime_error {
  LatticeError(std::string code_, const std::string& what)
      : std::runtime_error(what), code(std::move(code_)) {}
  std::string code;
};

// One block of exp(t0 D) on the codimension-one nilpotent ideal:
// either exp(N) for a rational nilpotent N, or alpha^power * exp(N) where
// alpha = e^{t_k} encodes the scaled eigenvalue exactly.
struct DerivationBlock {
  bool scaled = false;
  long long power = 0;  // exponent of alpha; 0 for plain nilpotent blocks
  Matrix nilpotent;     // entries over quadratic(core of k^2-4), rational values
};

struct DerivationBlockSpec {
  long long k = 3;
  std::vector<DerivationBlock> blocks;
};

struct LatticeCertificate {
  std::string algebra_id;
  bool rational_basis_ok = false;
  bool integral_ok = false;
  bool derivation_consistent = false;
  Matrix exp_matrix;        // exp(t0 D) in the candidate basis
  Matrix exp_matrix_ideal;  // exp(t0 D) in the given ideal basis
  std::vector<std::string> offending;  // entries or constants that failed
  bool valid() const { return rational_basis_ok && integral_ok; }
};

// [g, ideal] contained in the ideal and the ideal nilpotent as a subalgebra.
bool verify_nilpotent_ideal(const LieAlgebra& g, const Subspace& ideal);

// Blockwise exact exponential over quadratic(core of k^2 - 4).
Matrix exact_exp(const DerivationBlockSpec& spec);

// Certify the hypotheses of the splittable-lattice criterion: rational
// structure constants of the ideal in the candidate basis, and an integer
// matrix for exp(t0 D) there. The candidate is a change of basis of the
// ideal, columns over quadratic(core of k^2 - 4).
LatticeCertificate lattice_check(const LieAlgebra& g, const Subspace& ideal,
                                 const DerivationBlockSpec& spec,
                                 const Matrix& candidate,
                                 const std::string& algebra_id = "");

// The 4x4 rationality-constraint system for the Benson-Gordon-type lattice
// parameters: its rank, and whether the closed-form parametrization
// annihilates it.
struct BgSolutionSpace {
  int rank_of_m = 0;
  bool parametrization_ok = false;
};
BgSolutionSpace bg_solution_space(long long k);

}  // namespace lefschetz

#endif  // LEFSCHETZ_LATTICE_HPP
