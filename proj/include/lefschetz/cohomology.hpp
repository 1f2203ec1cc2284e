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

#ifndef LEFSCHETZ_COHOMOLOGY_HPP
#define LEFSCHETZ_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "lefschetz/liealg.hpp"

namespace lefschetz {

struct NotClosedError : std::runtime_error {
  explicit NotClosedError(const std::string& what) : std::runtime_error(what) {}
};

// Degree-k slice of the Chevalley-Eilenberg cohomology: cocycles,
// coboundaries, and deterministic representatives of the quotient.
struct CohomologyDescriptor {
  int degree = 0;
  Subspace cocycles;
  Subspace coboundaries;
  std::vector<KForm> representatives;
  int betti = 0;

  CohomologyDescriptor(FieldPtr f, long long space_dim, int k)
      : degree(k),
        cocycles(f, static_cast<int>(space_dim)),
        coboundaries(f, static_cast<int>(space_dim)) {}
};

// Matrix of d: Lambda^k -> Lambda^{k+1} in the colex monomial bases.
Matrix d_matrix(const LieAlgebra& g, int k);

int betti(const LieAlgebra& g, int k);

CohomologyDescriptor cohomology(const LieAlgebra& g, int k);

// Some primitive gamma with d gamma = a, or nullopt; `a` must be closed.
std::optional<KForm> is_exact(const LieAlgebra& g, const KForm& a);

// Coordinates of [a] over the descriptor's representative basis.
Vec class_coords(const CohomologyDescriptor& desc, const LieAlgebra& g,
                 const KForm& a);

}  // namespace lefschetz

#endif  // LEFSCHETZ_COHOMOLOGY_HPP
