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

#ifndef LEFSCHETZ_BIGINT_HPP
#define LEFSCHETZ_BIGINT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

// Arbitrary-precision signed integer, sign + little-endian 32-bit limbs.
// Division truncates toward zero, like built-in integer division.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals

  static BigInt from_string(std::string_view s);  // throws std::invalid_argument
  std::string str() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  bool is_neg_one() const;
  bool even() const;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator/(const BigInt& o) const;  // throws on zero divisor
  BigInt operator%(const BigInt& o) const;

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  static void divmod(const BigInt& a, const BigInt& b, BigInt* q, BigInt* r);

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return cmp(o) < 0; }
  bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
  bool operator>(const BigInt& o) const { return cmp(o) > 0; }
  bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }
  int cmp(const BigInt& o) const;

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative
  static BigInt lcm(const BigInt& a, const BigInt& b);
  BigInt pow(unsigned long long e) const;

  bool fits_longlong() const;
  long long to_longlong() const;  // throws if out of range

  // Integer square root when the value is a perfect square, nullopt otherwise.
  static std::optional<BigInt> sqrt_exact(const BigInt& a);

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;  // little endian, no trailing zero limbs

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>* q,
                         std::vector<std::uint32_t>* r);
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_BIGINT_HPP
