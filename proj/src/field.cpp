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

#include "lefschetz/field.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace lefschetz {

namespace {

bool squarefree(long long d) {
  for (long long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Canonical rational function: coprime num/den, den monic. Zero is 0/1.
FuncVal reduce_func(Poly num, Poly den) {
  if (den.is_zero()) throw FieldError("rational function: zero denominator");
  if (num.is_zero()) {
    return {Poly(num.nvars()), Poly::constant(num.nvars(), Rational(1))};
  }
  Poly g = Poly::gcd(num, den);
  if (!g.is_constant()) {
    Poly q;
    Poly::try_divide(num, g, &q);
    num = q;
    Poly::try_divide(den, g, &q);
    den = q;
  }
  Rational lc = den.leading_coeff();
  if (!lc.is_one()) {
    num = num.scaled(lc.inv());
    den = den.scaled(lc.inv());
  }
  return {std::move(num), std::move(den)};
}

}  // namespace

FieldPtr Field::rationals() {
  return FieldPtr(new Field(FieldKind::rationals, 0, {}));
}

FieldPtr Field::quadratic(long long d) {
  if (d < 2) throw FieldError("quadratic field: d must be >= 2");
  if (!squarefree(d)) throw FieldError("quadratic field: d must be squarefree");
  return FieldPtr(new Field(FieldKind::quadratic, d, {}));
}

FieldPtr Field::rational_functions(std::vector<std::string> vars) {
  if (vars.empty())
    throw FieldError("rational-function field: needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v))
      throw FieldError("rational-function field: bad variable name '" + v + "'");
    if (v == "r")
      throw FieldError("rational-function field: 'r' is reserved");
    if (!seen.insert(v).second)
      throw FieldError("rational-function field: duplicate variable '" + v + "'");
  }
  return FieldPtr(new Field(FieldKind::rational_functions, 0, std::move(vars)));
}

bool Field::same(const Field& o) const {
  return kind_ == o.kind_ && d_ == o.d_ && vars_ == o.vars_;
}

std::string Field::describe() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::quadratic:
      return "Q(sqrt " + std::to_string(d_) + ")";
    case FieldKind::rational_functions: {
      std::string s = "Q(";
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i != 0) s += ",";
        s += vars_[i];
      }
      return s + ")";
    }
  }
  return "?";
}

Scalar Field::from_rational(const Rational& r) const {
  Scalar s;
  s.field_ = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals:
      s.v_ = r;
      break;
    case FieldKind::quadratic:
      s.v_ = QuadVal{r, Rational(0)};
      break;
    case FieldKind::rational_functions:
      s.v_ = reduce_func(Poly::constant(nvars(), r),
                         Poly::constant(nvars(), Rational(1)));
      break;
  }
  return s;
}

Scalar Field::zero() const { return from_rational(Rational(0)); }
Scalar Field::one() const { return from_rational(Rational(1)); }
Scalar Field::integer(long long v) const { return from_rational(Rational(v)); }

Scalar Field::sqrt_gen() const {
  if (kind_ != FieldKind::quadratic)
    throw FieldError("sqrt generator only exists in quadratic fields");
  Scalar s;
  s.field_ = shared_from_this();
  s.v_ = QuadVal{Rational(0), Rational(1)};
  return s;
}

Scalar Field::variable(int index) const {
  if (kind_ != FieldKind::rational_functions)
    throw FieldError("variables only exist in rational-function fields");
  if (index < 0 || index >= nvars()) throw FieldError("variable index out of range");
  Scalar s;
  s.field_ = shared_from_this();
  s.v_ = reduce_func(Poly::variable(nvars(), index),
                     Poly::constant(nvars(), Rational(1)));
  return s;
}

void Scalar::require_same(const Scalar& x, const Scalar& y) {
  if (!x.field_ || !y.field_) throw FieldError("scalar: uninitialized operand");
  if (!x.field_->same(*y.field_))
    throw FieldError("scalar: operands from different fields (" +
                     x.field_->describe() + " vs " + y.field_->describe() + ")");
}

bool Scalar::is_zero() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return rat().is_zero();
    case FieldKind::quadratic:
      return quad().a.is_zero() && quad().b.is_zero();
    case FieldKind::rational_functions:
      return func().num.is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return rat().is_one();
    case FieldKind::quadratic:
      return quad().a.is_one() && quad().b.is_zero();
    case FieldKind::rational_functions:
      return func().den.is_constant() && func().num.is_constant() &&
             !func().num.is_zero() &&
             (func().num.constant_value() / func().den.constant_value()).is_one();
  }
  return false;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  switch (field_->kind()) {
    case FieldKind::rationals:
      s.v_ = -rat();
      break;
    case FieldKind::quadratic:
      s.v_ = QuadVal{-quad().a, -quad().b};
      break;
    case FieldKind::rational_functions:
      s.v_ = FuncVal{-func().num, func().den};
      break;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(*this, o);
  Scalar s = *this;
  switch (field_->kind()) {
    case FieldKind::rationals:
      s.v_ = rat() + o.rat();
      break;
    case FieldKind::quadratic:
      s.v_ = QuadVal{quad().a + o.quad().a, quad().b + o.quad().b};
      break;
    case FieldKind::rational_functions: {
      const FuncVal& x = func();
      const FuncVal& y = o.func();
      s.v_ = reduce_func(x.num * y.den + y.num * x.den, x.den * y.den);
      break;
    }
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(*this, o);
  Scalar s = *this;
  switch (field_->kind()) {
    case FieldKind::rationals:
      s.v_ = rat() * o.rat();
      break;
    case FieldKind::quadratic: {
      Rational d(field_->d());
      s.v_ = QuadVal{quad().a * o.quad().a + quad().b * o.quad().b * d,
                     quad().a * o.quad().b + quad().b * o.quad().a};
      break;
    }
    case FieldKind::rational_functions: {
      const FuncVal& x = func();
      const FuncVal& y = o.func();
      s.v_ = reduce_func(x.num * y.num, x.den * y.den);
      break;
    }
  }
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw FieldError("scalar: inverse of zero");
  Scalar s = *this;
  switch (field_->kind()) {
    case FieldKind::rationals:
      s.v_ = rat().inv();
      break;
    case FieldKind::quadratic: {
      // conjugate over the norm; the norm is nonzero because d is not a square
      Rational d(field_->d());
      Rational n = quad().a * quad().a - quad().b * quad().b * d;
      s.v_ = QuadVal{quad().a / n, -quad().b / n};
      break;
    }
    case FieldKind::rational_functions:
      s.v_ = reduce_func(func().den, func().num);
      break;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar base = *this;
  Scalar r = field_->one();
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n != 0) {
    if (n & 1ull) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same(*this, o);
  return v_ == o.v_;
}

bool Scalar::is_rational() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return true;
    case FieldKind::quadratic:
      return quad().b.is_zero();
    case FieldKind::rational_functions:
      return func().den.is_constant() && func().num.is_constant();
  }
  return false;
}

bool Scalar::is_integer() const {
  return is_rational() && as_rational().is_integer();
}

Rational Scalar::as_rational() const {
  if (!is_rational()) throw FieldError("scalar: not in the prime subfield");
  switch (field_->kind()) {
    case FieldKind::rationals:
      return rat();
    case FieldKind::quadratic:
      return quad().a;
    case FieldKind::rational_functions:
      return func().num.constant_value() / func().den.constant_value();
  }
  return Rational(0);
}

std::string Scalar::str() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return rat().str();
    case FieldKind::quadratic: {
      const QuadVal& q = quad();
      if (q.b.is_zero()) return q.a.str();
      std::string rpart =
          q.b.abs().is_one() ? "r" : q.b.abs().str() + "*r";
      if (q.a.is_zero()) return (q.b.sign() < 0 ? "-" : "") + rpart;
      return q.a.str() + (q.b.sign() < 0 ? " - " : " + ") + rpart;
    }
    case FieldKind::rational_functions: {
      const FuncVal& f = func();
      if (f.den.is_constant()) return f.num.str(field_->vars());
      std::string num = f.num.terms().size() == 1 && f.num.leading_coeff().abs().is_one()
                            ? f.num.str(field_->vars())
                            : "(" + f.num.str(field_->vars()) + ")";
      return num + "/(" + f.den.str(field_->vars()) + ")";
    }
  }
  return "?";
}

bool Scalar::compound() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return rat().sign() < 0;
    case FieldKind::quadratic:
      return !quad().b.is_zero() || quad().a.sign() < 0;
    case FieldKind::rational_functions:
      return func().num.terms().size() > 1 || !func().den.is_constant() ||
             (func().num.terms().size() == 1 &&
              func().num.leading_coeff().sign() < 0) ||
             func().num.is_zero();
  }
  return true;
}

// ---------------------------------------------------------------------------
// Scalar expression parser: integers, fractions, + - * / ^, parentheses,
// `r` for sqrt(d) in quadratic fields, declared variable names.

namespace {

struct ScalarParser {
  const Field& field;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ScalarParseError(pos, msg); }

  Scalar parse_expr() {
    skip_ws();
    bool neg = false;
    while (consume('+') || (peek_is('-') && (consume('-'), neg = !neg, true))) {
    }
    Scalar v = parse_term();
    if (neg) v = -v;
    while (true) {
      skip_ws();
      if (consume('+')) {
        v = v + parse_term();
      } else if (consume('-')) {
        v = v - parse_term();
      } else {
        break;
      }
    }
    return v;
  }

  Scalar parse_term() {
    Scalar v = parse_factor();
    while (true) {
      skip_ws();
      if (consume('*')) {
        v = v * parse_factor();
      } else if (consume('/')) {
        std::size_t at = pos;
        Scalar w = parse_factor();
        if (w.is_zero()) throw ScalarParseError(at, "division by zero");
        v = v / w;
      } else {
        break;
      }
    }
    return v;
  }

  Scalar parse_factor() {
    Scalar v = parse_base();
    skip_ws();
    while (consume('^')) {
      skip_ws();
      std::size_t at = pos;
      if (pos < text.size() && text[pos] == '-')
        throw ScalarParseError(at, "negative exponents are not allowed");
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a nonnegative integer exponent");
      unsigned long long e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        e = e * 10 + static_cast<unsigned long long>(text[pos] - '0');
        if (e > 1000000) throw ScalarParseError(at, "exponent too large");
        ++pos;
      }
      v = v.pow(static_cast<long long>(e));
      skip_ws();
    }
    return v;
  }

  Scalar parse_base() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Scalar v = parse_expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos;
      return -parse_base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      BigInt v = BigInt::from_string(text.substr(start, pos - start));
      return field.from_rational(Rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      if (name == "r") {
        if (field.kind() != FieldKind::quadratic)
          throw ScalarParseError(start, "'r' is only defined in quadratic fields");
        return field.sqrt_gen();
      }
      for (int i = 0; i < field.nvars(); ++i) {
        if (field.vars()[i] == name) return field.variable(i);
      }
      throw ScalarParseError(start, "variable '" + name + "' is not declared");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Scalar Field::parse(std::string_view text) const {
  ScalarParser p{*this, text, 0};
  Scalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after expression");
  return v;
}

}  // namespace lefschetz
