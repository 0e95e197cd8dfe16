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

#include <span>
#include <vector>

#include "lrss/field.hpp"
#include "lrss/polynomial.hpp"
#include "lrss/rng.hpp"

namespace lrss::shamir {

using algebra::Element;
using algebra::PrimeField;

/// A point on a sharing polynomial. x is public and never zero (x = 0 is
/// the secret's position); y is private.
struct Share {
  Element x;
  Element y;

  friend bool operator==(const Share&, const Share&) = default;
};

/// (k, n) threshold parameters with the public x-coordinate of every share.
struct SharingParams {
  std::size_t k = 0;
  std::vector<Element> x_assignment;

  [[nodiscard]] std::size_t n() const noexcept { return x_assignment.size(); }

  /// x_i = i for i = 1..n.
  static SharingParams sequential(std::size_t k, std::size_t n);
};

/// Throws DomainError unless 1 <= k <= n and the x's are distinct, nonzero
/// and reduced.
void validate(const PrimeField& field, const SharingParams& params);

/// Shares of an explicit polynomial, in x_assignment order.
[[nodiscard]] std::vector<Share> deal(const PrimeField& field, const algebra::Polynomial& f,
                                      const SharingParams& params);

/// Random degree-(k-1) polynomial with f(0) = secret, evaluated at every x.
[[nodiscard]] std::vector<Share> split(const PrimeField& field, Element secret, const SharingParams& params,
                                       RandomStream& rng);

/// Interpolates the lexicographically-first k shares (by x) at zero. Extra
/// shares are checked against that polynomial; a mismatch throws
/// CorruptionError. Fewer than k shares throws InsufficientSharesError.
[[nodiscard]] Element recover(const PrimeField& field, std::span<const Share> shares, std::size_t k);

/// The unique degree <= k-1 polynomial through the first k shares by x.
[[nodiscard]] algebra::Polynomial reconstruct_polynomial(const PrimeField& field, std::span<const Share> shares,
                                                         std::size_t k);

[[nodiscard]] std::vector<algebra::Point> to_points(std::span<const Share> shares);

}  // namespace lrss::shamir
