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

#ifndef LEFSCHETZ_CATALOG_HPP
#define LEFSCHETZ_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/lattice.hpp"
#include "lefschetz/lefschetz_maps.hpp"
#include "lefschetz/symcon.hpp"

namespace lefschetz::catalog {

// Where a manifest value comes from: a known reference value, immediate from
// the definitions, or recomputed by an independent route.
enum class Origin { reference, direct, derived };

struct CatalogObjects {
  LieAlgebra algebra;  // the main algebra of the entry
  std::optional<SymplecticStructure> symplectic;
  std::optional<ContactStructure> contact;
  std::map<std::string, KForm> named_forms;  // forms on the symplectic algebra
};

enum class TRelation { independent, all_equal };

// Heisenberg contact algebra of dimension 2n+1 (as a contactization of the
// abelian symplectic plane power).
CatalogObjects heisenberg(int n);
CatalogObjects abelian_symplectic(int n);
// h3 + R with a symplectic form: the standard nonabelian nilpotent fixture.
CatalogObjects kodaira_thurston();
// almost abelian family with semisimple (diagonal) symplectic action;
// one log-parameter per distinct k, or one shared parameter
CatalogObjects split_family(const std::vector<long long>& ks, TRelation rel);
// almost abelian family with a double Jordan-block action
CatalogObjects jordan_family(long long k, int m);
// the 8-dimensional almost nilpotent algebra with two Heisenberg wings,
// with unit symplectic parameters over Q
CatalogObjects bg_family();
// same family over the quadratic field, with the parameter values that make
// the lattice candidate basis rational
CatalogObjects bg_family_quadratic(long long k);
// negative controls
CatalogObjects frobenius_plane();     // aff(R) with an exact symplectic form
CatalogObjects sl2_contact();         // contact with trivial center
CatalogObjects rotation_solvable();   // complex ad eigenvalues
CatalogObjects affr_contact();        // non-unimodular contact algebra

struct LatticeFixture {
  std::string id;
  LieAlgebra algebra;
  Subspace ideal;
  DerivationBlockSpec spec;
  Matrix candidate;
  Matrix expected_integral;  // entrywise expectation for the certificate
};

LatticeFixture lattice_fixture_split(long long k, int m);
LatticeFixture lattice_fixture_jordan(long long k, int m);  // m even
LatticeFixture lattice_fixture_bg(long long k);

// ---------------------------------------------------------------------------
// Entry registry with expected-results manifests for `catalog run`.

struct ManifestValue {
  Origin origin = Origin::direct;
  std::string note;
};

struct Manifest {
  // degree -> expected betti number of the entry's main algebra
  std::map<int, std::pair<int, Origin>> betti;
  std::optional<std::pair<bool, Origin>> unimodular;
  std::optional<std::pair<bool, Origin>> nilpotent;
  std::optional<std::pair<bool, Origin>> heisenberg;
  // s -> expected verdict per mode
  std::map<int, std::pair<bool, Origin>> symplectic_verdicts;
  std::map<int, std::pair<bool, Origin>> contact_verdicts;
  bool lattice_certifies = false;  // when the entry is a lattice fixture
};

struct Entry {
  std::string id;
  std::string description;
  std::function<CatalogObjects()> build;
  std::function<LatticeFixture()> build_lattice;  // empty unless a fixture
  Manifest manifest;
};

const std::vector<Entry>& entries();
const Entry* find_entry(const std::string& id);

// Re-derive the manifest of one entry; returns human-readable failure lines
// (empty means everything matched).
std::vector<std::string> run_manifest(const Entry& e);

}  // namespace lefschetz::catalog

#endif  // LEFSCHETZ_CATALOG_HPP
