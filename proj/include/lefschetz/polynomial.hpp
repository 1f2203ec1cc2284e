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

#ifndef LEFSCHETZ_POLYNOMIAL_HPP
#define LEFSCHETZ_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz {

// Exponent vector; size equals the number of declared variables.
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order by declared variable order.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial over Q, kept in canonical sparse form
// (no zero coefficients, terms ordered by grlex).
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, Rational c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Rational& constant_value() const;  // requires is_constant or zero

  const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }
  void set_term(const Exponents& e, const Rational& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Leading term under grlex.
  const Exponents& leading_monomial() const;
  const Rational& leading_coeff() const;
  int total_degree() const;
  int degree_in(int var) const;
  bool depends_on(int var) const;

  // Exact division; returns false when b does not divide a.
  static bool try_divide(const Poly& a, const Poly& b, Poly* quotient);

  // Monic gcd (leading coefficient 1); gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  Rational evaluate(const std::vector<Rational>& point) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Exponents, Rational, GrlexLess> terms_;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_POLYNOMIAL_HPP
