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

#ifndef LEFSCHETZ_NUMBERS_HPP
#define LEFSCHETZ_NUMBERS_HPP

#include <utility>

#include "lefschetz/field.hpp"

namespace lefschetz {

// The larger root alpha of x^2 - kx + 1, represented exactly.
// k^2 - 4 = s^2 d with d squarefree, so alpha = k/2 + (s/2) sqrt(d)
// and the field is quadratic(d).
inline std::pair<FieldPtr, Scalar> alpha_for_k(long long k) {
  if (k < 3) throw FieldError("alpha_for_k: k must be >= 3");
  long long disc = k * k - 4;
  long long s = 1;
  for (long long p = 2; p * p <= disc; ++p) {
    while (disc % (p * p) == 0) {
      disc /= p * p;
      s *= p;
    }
  }
  FieldPtr f = Field::quadratic(disc);
  Scalar alpha = f->from_rational(Rational(BigInt(k), BigInt(2))) +
                 f->from_rational(Rational(BigInt(s), BigInt(2))) * f->sqrt_gen();
  return {f, alpha};
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_NUMBERS_HPP
