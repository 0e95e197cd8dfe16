// Copyright 2026 The lrss Authors
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


#include "lrss/field.hpp"

#include <array>
#include <charconv>

#include "lrss/error.hpp"

namespace lrss::algebra {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  // These witnesses are sufficient for all n < 3.3e24.
  constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus >= (std::uint64_t{1} << 63)) {
    throw DomainError("modulus " + std::to_string(modulus) + " exceeds 2^63");
  }
  if (!is_prime(modulus)) {
    throw DomainError("modulus " + std::to_string(modulus) + " is not prime");
  }
}

Element PrimeField::make_signed(std::int64_t raw) const noexcept {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = raw % m;
  if (r < 0) r += m;
  return Element{static_cast<std::uint64_t>(r)};
}

Element PrimeField::parse(const std::string& decimal) const {
  std::uint64_t v = 0;
  const char* first = decimal.data();
  const char* last = first + decimal.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (decimal.empty() || ec != std::errc{} || ptr != last) {
    throw DomainError("not a decimal field element: '" + decimal + "'");
  }
  if (v >= modulus_) {
    throw DomainError("value " + decimal + " is not reduced modulo " + std::to_string(modulus_));
  }
  return Element{v};
}

Element PrimeField::pow(Element base, std::uint64_t exponent) const noexcept {
  return Element{powmod(base.value, exponent, modulus_)};
}

Element PrimeField::inv(Element a) const {
  if (a.value % modulus_ == 0) throw DomainError("zero has no multiplicative inverse");
  // Extended Euclid on signed 128-bit to stay exact for 63-bit moduli.
  __int128 t = 0, new_t = 1;
  __int128 r = modulus_, new_r = a.value;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += modulus_;
  return Element{static_cast<std::uint64_t>(t)};
}

std::string to_string(Element e) { return std::to_string(e.value); }

}  // namespace lrss::algebra
