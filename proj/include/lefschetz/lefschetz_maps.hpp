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

#ifndef LEFSCHETZ_LEFSCHETZ_MAPS_HPP
#define LEFSCHETZ_LEFSCHETZ_MAPS_HPP

#include <optional>

#include "lefschetz/symcon.hpp"

namespace lefschetz {

enum class LefschetzMode { symplectic, contact };

// Per-degree result of the Lefschetz decision. In symplectic mode the
// coverage and functionality flags are vacuous (reported true).
struct DegreeVerdict {
  int k = 0;
  bool domain_covered = true;
  bool well_defined = true;
  bool injective = false;
  bool surjective = false;
  bool verdict = false;

  // failure forensics
  std::optional<KForm> uncovered_witness;  // class with no admissible representative
  std::optional<KForm> broken_pair_witness;  // exact admissible form, non-exact image
  std::optional<KForm> kernel_witness;  // closed non-exact form with exact image

  // admissible representative per class, when coverage holds (contact mode)
  std::vector<KForm> admissible_reps;
};

struct LefschetzReport {
  LefschetzMode mode = LefschetzMode::symplectic;
  int s = 0;
  std::vector<DegreeVerdict> degrees;
  bool verdict = false;  // conjunction over k <= s
};

LefschetzReport symplectic_lefschetz(const SymplecticStructure& s, int deg);

// beta = rep(class) + d gamma with iota_xi beta = 0 and
// (d eta)^{n-k+1} ^ beta = 0, or nullopt when the class has no such
// representative.
std::optional<KForm> horizontal_primitive_rep(const ContactStructure& c, int k,
                                              const CohomologyDescriptor& hk,
                                              const Vec& klass);

LefschetzReport contact_lefschetz(const ContactStructure& c, int deg);

struct TheoremMainCheck {
  bool h_verdict = false;
  bool g_verdict = false;
  bool agree = false;
};

// Both sides of the degree-one equivalence for a unimodular symplectic
// algebra and its contactization; disagreement is an engine bug, not a result.
TheoremMainCheck theorem_main_check(const SymplecticStructure& s);

}  // namespace lefschetz

#endif  // LEFSCHETZ_LEFSCHETZ_MAPS_HPP
