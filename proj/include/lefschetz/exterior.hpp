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

#ifndef LEFSCHETZ_EXTERIOR_HPP
#define LEFSCHETZ_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lefschetz/linalg.hpp"

namespace lefschetz {

struct ExteriorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strictly increasing index sequences are packed as bitmasks (dim <= 60),
// so that ascending mask order is exactly colexicographic order on the
// multi-indices.
using Mask = std::uint64_t;

long long binomial(int n, int k);
Mask mask_from_indices(const std::vector<int>& idx);
std::vector<int> indices_from_mask(Mask m);
// rank of a k-subset mask in the colex enumeration of k-subsets
long long colex_rank(Mask m);
Mask colex_unrank(int dim, int degree, long long rank);

// Sparse alternating k-form over an n-dimensional space.
class KForm {
 public:
  KForm() = default;
  static KForm zero(FieldPtr f, int dim, int degree);
  static KForm unit(FieldPtr f, int dim);  // the 0-form 1
  static KForm monomial(FieldPtr f, int dim, const std::vector<int>& idx,
                        const Scalar& c);

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set_term(Mask m, const Scalar& c);
  Scalar coeff(Mask m) const;

  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator-() const;
  KForm scaled(const Scalar& c) const;
  bool operator==(const KForm& o) const;
  bool operator!=(const KForm& o) const { return !(*this == o); }

  // alpha(v_1, ..., v_k), exact evaluation on vectors
  Scalar evaluate(const std::vector<Vec>& args) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  FieldPtr field_;
  int dim_ = 0;
  int degree_ = 0;
  std::map<Mask, Scalar> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm wedge_power(const KForm& a, int p);
// Interior product; degree must be >= 1.
KForm contract(const Vec& x, const KForm& a);

// Dense coordinates in the colex monomial basis of Lambda^k, and back.
Vec form_coords(const KForm& a);
KForm coords_form(FieldPtr f, int dim, int degree, const Vec& coords);

// Textual form syntax: terms `c * b1^b3` joined by + or -, where the bi are
// declared covector names and c is a scalar expression.
KForm parse_form(const FieldPtr& f, int dim, const std::vector<std::string>& names,
                 std::string_view text);

}  // namespace lefschetz

#endif  // LEFSCHETZ_EXTERIOR_HPP
