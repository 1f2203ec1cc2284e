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

#include "lefschetz/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // avoid overflow on LLONG_MIN
  unsigned long long m =
      v > 0 ? static_cast<unsigned long long>(v)
            : ~static_cast<unsigned long long>(v) + 1ull;
  while (m != 0) {
    mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffull));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
bool BigInt::is_neg_one() const { return sign_ == -1 && mag_.size() == 1 && mag_[0] == 1; }
bool BigInt::even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
    carry = s >> 32;
  }
  if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (s < 0) {
      s += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<std::uint32_t>(s));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>* q,
                        std::vector<std::uint32_t>* r) {
  q->clear();
  r->clear();
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    *r = a;
    return;
  }
  if (b.size() == 1) {
    std::uint64_t d = b[0];
    std::uint64_t rem = 0;
    q->assign(a.size(), 0);
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      (*q)[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q->empty() && q->back() == 0) q->pop_back();
    if (rem != 0) r->push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  // normalize so the divisor's top limb has its high bit set
  int shift = 0;
  for (std::uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
  auto shl = [&](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out(v.size() + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(v[i]) << shift) & 0xffffffffull);
      out[i + 1] |= shift == 0 ? 0u : static_cast<std::uint32_t>(v[i] >> (32 - shift));
    }
    return out;
  };
  std::vector<std::uint32_t> u = shl(a);
  std::vector<std::uint32_t> v = shl(b);
  while (!v.empty() && v.back() == 0) v.pop_back();
  std::size_t n = v.size();
  std::size_t m = u.size() - n - 1;
  q->assign(m + 1, 0);

  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qh = num / v[n - 1];
    std::uint64_t rh = num % v[n - 1];
    while (qh >= kBase ||
           qh * v[n - 2] > ((rh << 32) | u[j + n - 2])) {
      --qh;
      rh += v[n - 1];
      if (rh >= kBase) break;
    }
    // multiply-subtract
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qh * v[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                       static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
      if (t < 0) {
        t += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                     static_cast<std::int64_t>(carry) - borrow;
    if (t < 0) {
      // qh was one too large; add divisor back
      t += static_cast<std::int64_t>(kBase);
      --qh;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffull);
        c2 = s >> 32;
      }
      t += static_cast<std::int64_t>(c2);
      t &= static_cast<std::int64_t>(0xffffffffll);
    }
    u[j + n] = static_cast<std::uint32_t>(t);
    (*q)[j] = static_cast<std::uint32_t>(qh);
  }

  while (!q->empty() && q->back() == 0) q->pop_back();
  // denormalize remainder
  u.resize(n);
  if (shift != 0) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t hi = (i + 1 < n) ? u[i + 1] : 0;
      u[i] = static_cast<std::uint32_t>((u[i] >> shift) |
                                        (static_cast<std::uint64_t>(hi) << (32 - shift)));
    }
  }
  while (!u.empty() && u.back() == 0) u.pop_back();
  *r = u;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == o.sign_) {
    r.sign_ = sign_;
    r.mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = sign_;
      r.mag_ = sub_mag(mag_, o.mag_);
    } else {
      r.sign_ = o.sign_;
      r.mag_ = sub_mag(o.mag_, mag_);
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (sign_ == 0 || o.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = sign_ * o.sign_;
  r.mag_ = mul_mag(mag_, o.mag_);
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt* q, BigInt* r) {
  BigInt qq, rr;
  divmod_mag(a.mag_, b.mag_, &qq.mag_, &rr.mag_);
  qq.sign_ = qq.mag_.empty() ? 0 : a.sign_ * b.sign_;
  rr.sign_ = rr.mag_.empty() ? 0 : a.sign_;
  if (q != nullptr) *q = qq;
  if (r != nullptr) *r = rr;
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q;
  divmod(*this, o, &q, nullptr);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt r;
  divmod(*this, o, nullptr, &r);
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  return sign_ == o.sign_ && mag_ == o.mag_;
}

int BigInt::cmp(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  int c = cmp_mag(mag_, o.mag_);
  return sign_ >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt g = gcd(a, b);
  return (a / g * b).abs();
}

BigInt BigInt::pow(unsigned long long e) const {
  BigInt base = *this;
  BigInt r = 1;
  while (e != 0) {
    if (e & 1ull) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool BigInt::fits_longlong() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  std::uint64_t v = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return v <= 0x7fffffffffffffffull;
  return v <= 0x8000000000000000ull;
}

long long BigInt::to_longlong() const {
  if (!fits_longlong()) throw std::overflow_error("BigInt: does not fit long long");
  std::uint64_t v = 0;
  if (mag_.size() > 0) v |= mag_[0];
  if (mag_.size() > 1) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
  if (sign_ >= 0) return static_cast<long long>(v);
  return -static_cast<long long>(v - 1) - 1;
}

BigInt BigInt::from_string(std::string_view s) {
  std::size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit in numeral");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> chunks;  // base 10^9, little endian
  std::vector<std::uint32_t> cur = mag_;
  while (!cur.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = cur.size(); i-- > 0;) {
      std::uint64_t v = (rem << 32) | cur[i];
      cur[i] = static_cast<std::uint32_t>(v / 1000000000ull);
      rem = v % 1000000000ull;
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
    chunks.push_back(static_cast<std::uint32_t>(rem));
  }
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::optional<BigInt> BigInt::sqrt_exact(const BigInt& a) {
  if (a.sign() < 0) return std::nullopt;
  if (a.is_zero()) return BigInt(0);
  // Newton iteration on integers, seeded above the root.
  BigInt x = a;
  BigInt prev;
  BigInt two = 2;
  while (true) {
    BigInt y = (x + a / x) / two;
    if (y >= x) break;
    x = y;
  }
  if (x * x == a) return x;
  return std::nullopt;
}

}  // namespace lefschetz
