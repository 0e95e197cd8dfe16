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


#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lrss::algebra {

/// A residue modulo the field's prime. Always stored reduced; only
/// PrimeField produces values from arbitrary integers.
struct Element {
  std::uint64_t value = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint64_t v) : value(v) {}

  constexpr auto operator<=>(const Element&) const = default;
};

static_assert(sizeof(Element) == sizeof(std::uint64_t));

inline constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t candidate) noexcept;

/// Prime field GF(p) with p < 2^63 so that sums never wrap.
///
/// Construction rejects composite moduli with DomainError. The field is a
/// small value type; copy it freely.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] bool is_mersenne31() const noexcept { return modulus_ == kMersenne31; }

  [[nodiscard]] Element make(std::uint64_t raw) const noexcept { return Element{raw % modulus_}; }
  [[nodiscard]] Element make_signed(std::int64_t raw) const noexcept;
  /// Parses a decimal string; rejects non-digits and values >= modulus.
  [[nodiscard]] Element parse(const std::string& decimal) const;

  [[nodiscard]] Element zero() const noexcept { return Element{0}; }
  [[nodiscard]] Element one() const noexcept { return Element{1}; }

  [[nodiscard]] Element add(Element a, Element b) const noexcept {
    std::uint64_t s = a.value + b.value;
    return Element{s >= modulus_ ? s - modulus_ : s};
  }
  [[nodiscard]] Element sub(Element a, Element b) const noexcept {
    return Element{a.value >= b.value ? a.value - b.value : a.value + modulus_ - b.value};
  }
  [[nodiscard]] Element neg(Element a) const noexcept {
    return Element{a.value == 0 ? 0 : modulus_ - a.value};
  }
  [[nodiscard]] Element mul(Element a, Element b) const noexcept {
    return Element{static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.value) * b.value) % modulus_)};
  }
  [[nodiscard]] Element pow(Element base, std::uint64_t exponent) const noexcept;

  /// Multiplicative inverse; DomainError on zero.
  [[nodiscard]] Element inv(Element a) const;

  [[nodiscard]] bool contains(Element a) const noexcept { return a.value < modulus_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t modulus_;
};

[[nodiscard]] std::string to_string(Element e);

}  // namespace lrss::algebra
