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

#include "lefschetz/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(int nvars, Rational c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("Poly: bad variable index");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

const Rational& Poly::constant_value() const {
  static const Rational kZero(0);
  if (terms_.empty()) return kZero;
  if (!is_constant()) throw std::logic_error("Poly: not constant");
  return terms_.begin()->second;
}

void Poly::set_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("Poly: exponent arity mismatch");
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  Poly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly base = *this;
  Poly r = Poly::constant(nvars_, Rational(1));
  while (e != 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

const Exponents& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("Poly: leading term of zero");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("Poly: leading term of zero");
  return terms_.rbegin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.rbegin()->first;
  int d = 0;
  for (auto x : e) d += static_cast<int>(x);
  return d;
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return terms_.empty() ? -1 : d;
}

bool Poly::depends_on(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

bool Poly::try_divide(const Poly& a, const Poly& b, Poly* quotient) {
  if (b.is_zero()) return false;
  Poly q(a.nvars_);
  Poly r = a;
  const Exponents& lb = b.leading_monomial();
  const Rational& cb = b.leading_coeff();
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_monomial();
    Exponents diff(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) {
      if (lr[i] < lb[i]) return false;
      diff[i] = lr[i] - lb[i];
    }
    Poly t(a.nvars_);
    t.terms_.emplace(std::move(diff), r.leading_coeff() / cb);
    q = q + t;
    r = r - t * b;
  }
  if (quotient != nullptr) *quotient = q;
  return true;
}

namespace {

// Univariate view in variable `var`: exponent-in-var -> coefficient poly
// (same arity with var zeroed out).
std::map<int, Poly> univariate_view(const Poly& p, int var) {
  std::map<int, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    int d = static_cast<int>(rest[var]);
    rest[var] = 0;
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Poly(p.nvars())).first;
    it->second.set_term(rest, (it->second.terms().count(rest)
                                   ? it->second.terms().at(rest) + c
                                   : c));
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

Poly leading_coeff_in(const Poly& p, int var) {
  auto view = univariate_view(p, var);
  if (view.empty()) return Poly(p.nvars());
  return view.rbegin()->second;
}

// Pseudo-remainder of f by g in variable var: lc_var(g)^(deg f - deg g + 1) f mod g.
Poly pseudo_rem(const Poly& f, const Poly& g, int var) {
  int dg = g.degree_in(var);
  Poly lcg = leading_coeff_in(g, var);
  Poly r = f;
  int e = f.degree_in(var) - dg + 1;
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    int dr = r.degree_in(var);
    Poly lcr = leading_coeff_in(r, var);
    Poly shift = Poly::variable(f.nvars(), var).pow(static_cast<unsigned>(dr - dg));
    r = r * lcg - lcr * shift * g;
    --e;
  }
  for (; e > 0; --e) r = r * lcg;
  return r;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!Poly::try_divide(a, b, &q))
    throw std::logic_error("Poly: inexact division in gcd");
  return q;
}

// gcd of the univariate coefficients of p with respect to var.
Poly content_in(const Poly& p, int var) {
  Poly c(p.nvars());
  for (const auto& [d, coeff] : univariate_view(p, var)) c = Poly::gcd(c, coeff);
  return c;
}

}  // namespace

// Subresultant polynomial remainder sequence; the recursion over variables
// terminates because the content computation strictly removes the main
// variable from all operands.
Poly Poly::gcd(const Poly& a, const Poly& b) {
  auto make_monic = [](Poly p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coeff().inv());
  };
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant())
    return Poly::constant(a.nvars(), Rational(1));

  int var = -1;
  for (int v = a.nvars() - 1; v >= 0; --v) {
    if (a.depends_on(v) || b.depends_on(v)) {
      var = v;
      break;
    }
  }
  if (var < 0) return Poly::constant(a.nvars(), Rational(1));
  if (!a.depends_on(var)) return make_monic(Poly::gcd(a, content_in(b, var)));
  if (!b.depends_on(var)) return make_monic(Poly::gcd(content_in(a, var), b));

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly f = divide_exact(a, ca);
  Poly g = divide_exact(b, cb);
  Poly cont = Poly::gcd(ca, cb);

  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  Poly one = Poly::constant(a.nvars(), Rational(1));
  Poly h = one, s = one;
  while (true) {
    int delta = f.degree_in(var) - g.degree_in(var);
    Poly r = pseudo_rem(f, g, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      g = one;
      break;
    }
    f = g;
    Poly divisor = s * h.pow(static_cast<unsigned>(delta));
    g = divide_exact(r, divisor);
    s = leading_coeff_in(f, var);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = s;
    } else {
      h = divide_exact(s.pow(static_cast<unsigned>(delta)),
                       h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Poly pp = g.is_constant() ? one : divide_exact(g, content_in(g, var));
  return make_monic(cont * pp);
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Poly: evaluation arity mismatch");
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) t = t * point[i].pow(e[i]);
    out += t;
  }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // descending grlex so leading term prints first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    bool neg = c.sign() < 0;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff;
    if (mono.empty()) {
      coeff = mag.str();
    } else if (mag.is_one()) {
      coeff = mono;
    } else {
      coeff = mag.str() + "*" + mono;
    }
    if (first) {
      out += (neg ? "-" : "") + coeff;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + coeff;
    }
  }
  return out;
}

}  // namespace lefschetz
