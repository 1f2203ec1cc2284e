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

#include "lefschetz/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace lefschetz {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Mask mask_from_indices(const std::vector<int>& idx) {
  Mask m = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= 60)
      throw ExteriorError("multi-index entry out of supported range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw ExteriorError("multi-index must be strictly increasing");
    m |= Mask(1) << idx[i];
  }
  return m;
}

std::vector<int> indices_from_mask(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

long long colex_rank(Mask m) {
  long long r = 0;
  int pos = 1;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) {
      r += binomial(i, pos);
      ++pos;
    }
  }
  return r;
}

Mask colex_unrank(int dim, int degree, long long rank) {
  Mask m = 0;
  for (int pos = degree; pos >= 1; --pos) {
    int c = pos - 1;
    while (c + 1 < dim && binomial(c + 1, pos) <= rank) ++c;
    rank -= binomial(c, pos);
    m |= Mask(1) << c;
  }
  return m;
}

KForm KForm::zero(FieldPtr f, int dim, int degree) {
  if (dim < 0 || dim > 60) throw ExteriorError("dimension out of supported range");
  if (degree < 0) throw ExteriorError("negative form degree");
  KForm k;
  k.field_ = std::move(f);
  k.dim_ = dim;
  k.degree_ = degree;
  return k;
}

KForm KForm::unit(FieldPtr f, int dim) {
  KForm k = zero(std::move(f), dim, 0);
  k.terms_.emplace(Mask(0), k.field_->one());
  return k;
}

KForm KForm::monomial(FieldPtr f, int dim, const std::vector<int>& idx,
                      const Scalar& c) {
  KForm k = zero(std::move(f), dim, static_cast<int>(idx.size()));
  for (int i : idx)
    if (i >= dim) throw ExteriorError("multi-index entry exceeds dimension");
  if (!c.is_zero()) k.terms_.emplace(mask_from_indices(idx), c);
  return k;
}

void KForm::set_term(Mask m, const Scalar& c) {
  if (std::popcount(m) != degree_)
    throw ExteriorError("term degree does not match the form degree");
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

Scalar KForm::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

KForm KForm::operator+(const KForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw ExteriorError("form sum: degree or dimension mismatch");
  KForm r = *this;
  for (const auto& [m, c] : o.terms_) {
    auto it = r.terms_.find(m);
    if (it == r.terms_.end()) {
      r.terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::operator-() const {
  KForm r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

KForm KForm::scaled(const Scalar& c) const {
  KForm r = zero(field_, dim_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool KForm::operator==(const KForm& o) const {
  return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
}

Scalar KForm::evaluate(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw ExteriorError("evaluate: argument count must equal the degree");
  Scalar out = field_->zero();
  for (const auto& [m, c] : terms_) {
    std::vector<int> idx = indices_from_mask(m);
    // determinant of the k x k minor picked by the multi-index, by expansion
    // over permutations (degrees here are tiny)
    std::vector<int> perm(idx.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    Scalar det = field_->zero();
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inversions;
      Scalar prod = field_->one();
      for (std::size_t i = 0; i < perm.size(); ++i)
        prod = prod * args[perm[i]][idx[i]];
      det = (inversions % 2 == 0) ? det + prod : det - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out += c * det;
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw ExteriorError("wedge: dimension mismatch");
  if (!a.field()->same(*b.field())) throw ExteriorError("wedge: field mismatch");
  KForm r = KForm::zero(a.field(), a.dim(), a.degree() + b.degree());
  if (r.degree() > a.dim()) return r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      // shuffle parity: count inversions between the two index sets
      int inv = 0;
      for (Mask m = mb; m != 0; m &= m - 1) {
        int bit = std::countr_zero(m);
        inv += std::popcount(ma >> (bit + 1));
      }
      Scalar c = ca * cb;
      if (inv % 2 != 0) c = -c;
      Mask m = ma | mb;
      auto it = r.terms().find(m);
      if (it == r.terms().end()) {
        r.set_term(m, c);
      } else {
        r.set_term(m, it->second + c);
      }
    }
  }
  return r;
}

KForm wedge_power(const KForm& a, int p) {
  if (p < 0) throw ExteriorError("wedge power: negative exponent");
  KForm r = KForm::unit(a.field(), a.dim());
  for (int i = 0; i < p; ++i) r = wedge(r, a);
  return r;
}

KForm contract(const Vec& x, const KForm& a) {
  if (static_cast<int>(x.size()) != a.dim())
    throw ExteriorError("contract: dimension mismatch");
  if (a.degree() < 1) throw ExteriorError("contract: cannot contract a 0-form");
  KForm r = KForm::zero(a.field(), a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1, ++pos) {
      int bit = std::countr_zero(rest);
      if (x[bit].is_zero()) continue;
      Scalar v = x[bit] * c;
      if (pos % 2 != 0) v = -v;
      Mask mm = m & ~(Mask(1) << bit);
      auto it = r.terms().find(mm);
      r.set_term(mm, it == r.terms().end() ? v : it->second + v);
    }
  }
  return r;
}

Vec form_coords(const KForm& a) {
  long long n = binomial(a.dim(), a.degree());
  Vec out(static_cast<std::size_t>(n), a.field()->zero());
  for (const auto& [m, c] : a.terms()) out[static_cast<std::size_t>(colex_rank(m))] = c;
  return out;
}

KForm coords_form(FieldPtr f, int dim, int degree, const Vec& coords) {
  if (static_cast<long long>(coords.size()) != binomial(dim, degree))
    throw ExteriorError("coords_form: coordinate length mismatch");
  KForm r = KForm::zero(std::move(f), dim, degree);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    r.set_term(colex_unrank(dim, degree, static_cast<long long>(i)), coords[i]);
  }
  return r;
}

std::string KForm::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i : indices_from_mask(m)) {
      if (!mono.empty()) mono += "^";
      mono += names[static_cast<std::size_t>(i)];
    }
    std::string cs = c.str();
    bool lead_minus = !c.compound() && cs.size() > 0 && cs[0] == '-';
    std::string body;
    if (mono.empty()) {
      body = c.compound() ? "(" + cs + ")" : cs;
      lead_minus = false;
    } else if (c.is_one()) {
      body = mono;
    } else if ((-c).is_one()) {
      body = mono;
      lead_minus = true;
    } else if (c.compound()) {
      body = "(" + cs + ") * " + mono;
    } else if (lead_minus) {
      body = cs.substr(1) + " * " + mono;
    } else {
      body = cs + " * " + mono;
    }
    if (first) {
      out += lead_minus ? "-" + body : body;
      first = false;
    } else {
      out += lead_minus ? " - " + body : " + " + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Form parser. Terms are separated by top-level + or -. Inside a term the
// last top-level '*' before a covector monomial splits coefficient from
// monomial; a term may also be a bare monomial or a bare scalar (0-form).

namespace {

struct FormParser {
  const FieldPtr& field;
  int dim;
  const std::vector<std::string>& names;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  int name_at(std::size_t p, std::size_t* end) const {
    if (p >= text.size()) return -1;
    if (!std::isalpha(static_cast<unsigned char>(text[p])) && text[p] != '_')
      return -1;
    std::size_t q = p;
    while (q < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[q])) || text[q] == '_'))
      ++q;
    std::string word(text.substr(p, q - p));
    for (int i = 0; i < dim; ++i) {
      if (names[static_cast<std::size_t>(i)] == word) {
        *end = q;
        return i;
      }
    }
    return -1;
  }

  // parse a monomial b1^b3^...; returns (mask, sign)
  std::pair<Mask, int> parse_monomial() {
    Mask m = 0;
    int sign = 1;
    std::vector<int> seen;
    while (true) {
      skip_ws();
      std::size_t end = 0;
      int idx = name_at(pos, &end);
      if (idx < 0) throw ScalarParseError(pos, "expected a covector name");
      Mask bit = Mask(1) << idx;
      if (m & bit) throw ScalarParseError(pos, "repeated covector in monomial");
      // count inversions against covectors already read
      int above = 0;
      for (int s : seen)
        if (s > idx) ++above;
      if (above % 2 != 0) sign = -sign;
      seen.push_back(idx);
      m |= bit;
      pos = end;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        continue;
      }
      break;
    }
    return {m, sign};
  }

  bool monomial_ahead() {
    skip_ws();
    std::size_t end = 0;
    return name_at(pos, &end) >= 0;
  }

  // a coefficient: a scalar expression that stops before a covector name
  Scalar parse_coeff() {
    // scan for the '*' that precedes a covector monomial at depth 0
    skip_ws();
    std::size_t start = pos;
    int depth = 0;
    std::size_t split = std::string_view::npos;
    std::size_t p = pos;
    while (p < text.size()) {
      char c = text[p];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (depth == 0 && (c == '+' || c == '-') && p != start) break;
      if (depth == 0 && c == '*') {
        std::size_t q = p + 1;
        while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q])))
          ++q;
        std::size_t end = 0;
        if (name_at(q, &end) >= 0) {
          split = p;
          break;
        }
      }
      ++p;
    }
    std::size_t coeff_end = split == std::string_view::npos ? p : split;
    std::string expr(text.substr(start, coeff_end - start));
    Scalar c = field->zero();
    try {
      c = field->parse(expr);
    } catch (const ScalarParseError& e) {
      throw ScalarParseError(start + e.position, e.what());
    }
    pos = coeff_end;
    if (split != std::string_view::npos) ++pos;  // consume '*'
    return c;
  }

  KForm parse() {
    skip_ws();
    if (pos == text.size()) throw ScalarParseError(pos, "empty form expression");
    KForm acc;  // set on first term
    bool have = false;
    int sign = 1;
    bool expect_term = true;
    while (true) {
      skip_ws();
      if (pos >= text.size()) {
        if (expect_term) throw ScalarParseError(pos, "dangling sign in form");
        break;
      }
      if (!expect_term) {
        if (text[pos] == '+') {
          sign = 1;
          ++pos;
          expect_term = true;
          continue;
        }
        if (text[pos] == '-') {
          sign = -1;
          ++pos;
          expect_term = true;
          continue;
        }
        throw ScalarParseError(pos, "expected '+' or '-' between form terms");
      }
      // one term; unary signs first
      while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -sign;
        ++pos;
        skip_ws();
      }
      Scalar c = field->one();
      Mask m = 0;
      int msign = 1;
      bool has_mono = false;
      if (monomial_ahead()) {
        auto [mm, s] = parse_monomial();
        m = mm;
        msign = s;
        has_mono = true;
      } else {
        c = parse_coeff();
        skip_ws();
        if (monomial_ahead()) {
          auto [mm, s] = parse_monomial();
          m = mm;
          msign = s;
          has_mono = true;
        }
      }
      if (sign * msign < 0) c = -c;
      int deg = std::popcount(m);
      if (!have) {
        acc = KForm::zero(field, dim, deg);
        have = true;
      } else if (deg != acc.degree()) {
        throw ScalarParseError(pos, "mixed degrees in form expression");
      }
      acc.set_term(m, acc.coeff(m) + c);
      (void)has_mono;
      expect_term = false;
    }
    return acc;
  }
};

}  // namespace

KForm parse_form(const FieldPtr& f, int dim, const std::vector<std::string>& names,
                 std::string_view text) {
  FormParser p{f, dim, names, text, 0};
  return p.parse();
}

}  // namespace lefschetz
