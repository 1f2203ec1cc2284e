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

#ifndef LEFSCHETZ_DOCUMENT_HPP
#define LEFSCHETZ_DOCUMENT_HPP

#include <optional>
#include <string>

#include "lefschetz/lattice.hpp"
#include "lefschetz/symcon.hpp"

namespace lefschetz {

struct DocumentError : std::runtime_error {
  DocumentError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), field_path(path) {}
  std::string field_path;
};

// One structured document describes an algebra, optional symplectic or
// contact data, and an optional lattice block.
struct Document {
  LieAlgebra algebra;
  std::optional<KForm> omega;
  std::optional<KForm> eta;
  struct LatticeBlock {
    std::vector<int> ideal_indices;
    DerivationBlockSpec spec;
    Matrix candidate;
  };
  std::optional<LatticeBlock> lattice;
};

Document parse_document(const std::string& text);
// Inverse of parse_document up to structural equality of the objects.
std::string emit_document(const Document& doc);

Document document_from_algebra(const LieAlgebra& g,
                               const std::optional<KForm>& omega,
                               const std::optional<KForm>& eta);

}  // namespace lefschetz

#endif  // LEFSCHETZ_DOCUMENT_HPP
