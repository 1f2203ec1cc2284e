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

#ifndef LEFSCHETZ_FIELD_HPP
#define LEFSCHETZ_FIELD_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lefschetz/polynomial.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar-expression syntax error with byte position into the source text.
struct ScalarParseError : std::runtime_error {
  ScalarParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

enum class FieldKind { rationals, quadratic, rational_functions };

// Coefficient field: Q, a real quadratic extension Q(sqrt d), or the
// rational-function field Q(t1,...,tm).
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  static FieldPtr quadratic(long long d);  // d >= 2 squarefree
  static FieldPtr rational_functions(std::vector<std::string> vars);

  FieldKind kind() const { return kind_; }
  long long d() const { return d_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  bool same(const Field& o) const;
  std::string describe() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long long v) const;
  Scalar from_rational(const Rational& r) const;  // the Q embedding
  Scalar sqrt_gen() const;                        // quadratic only: sqrt(d)
  Scalar variable(int index) const;               // rational_functions only

  Scalar parse(std::string_view text) const;  // throws ScalarParseError

 private:
  Field(FieldKind kind, long long d, std::vector<std::string> vars)
      : kind_(kind), d_(d), vars_(std::move(vars)) {}
  FieldKind kind_;
  long long d_;
  std::vector<std::string> vars_;
};

struct QuadVal {
  Rational a, b;  // a + b sqrt(d)
  bool operator==(const QuadVal& o) const { return a == o.a && b == o.b; }
};

struct FuncVal {
  Poly num, den;  // reduced, den monic
  bool operator==(const FuncVal& o) const { return num == o.num && den == o.den; }
};

// Immutable field element in canonical form; equality is structural.
class Scalar {
 public:
  Scalar() = default;  // unusable until assigned from a field

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;  // throws FieldError on zero
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // True when the value lies in the prime subfield Q.
  bool is_rational() const;
  // is_rational with denominator 1.
  bool is_integer() const;
  Rational as_rational() const;  // requires is_rational

  const QuadVal& quad() const { return std::get<QuadVal>(v_); }
  const FuncVal& func() const { return std::get<FuncVal>(v_); }
  const Rational& rat() const { return std::get<Rational>(v_); }

  std::string str() const;
  // True when str() needs parentheses to act as a product factor.
  bool compound() const;

 private:
  friend class Field;
  FieldPtr field_;
  std::variant<Rational, QuadVal, FuncVal> v_;
  static void require_same(const Scalar& x, const Scalar& y);
  Scalar normalized() const;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_FIELD_HPP
