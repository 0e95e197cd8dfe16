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
#include <utility>
#include <vector>

#include "lrss/field.hpp"
#include "lrss/rng.hpp"

namespace lrss::algebra {

/// Polynomial over a prime field, constant term first.
///
/// Trailing zero coefficients are trimmed on construction and the zero
/// polynomial is always [0], so coefficient-list equality is polynomial
/// equality.
class Polynomial {
 public:
  Polynomial() : coefficients_{Element{0}} {}
  explicit Polynomial(std::vector<Element> coefficients);

  [[nodiscard]] std::span<const Element> coefficients() const noexcept { return coefficients_; }
  [[nodiscard]] std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coefficients_.size() == 1 && coefficients_[0].value == 0; }
  [[nodiscard]] Element operator[](std::size_t i) const noexcept {
    return i < coefficients_.size() ? coefficients_[i] : Element{0};
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Element> coefficients_;
};

struct Point {
  Element x;
  Element y;

  friend bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] Element poly_eval(const PrimeField& field, const Polynomial& f, Element x);

/// Evaluates f at every point using the dispatched kernel.
[[nodiscard]] std::vector<Element> poly_eval_many(const PrimeField& field, const Polynomial& f,
                                                  std::span<const Element> xs);

/// Lagrange interpolation, O(d^2). DomainError on duplicate x or empty input.
[[nodiscard]] Polynomial poly_interpolate(const PrimeField& field, std::span<const Point> points);

/// Value at `at` of the interpolant through `points`, without building the
/// coefficient list.
[[nodiscard]] Element interpolate_at(const PrimeField& field, std::span<const Point> points, Element at);

/// Uniform polynomial of degree <= `degree` through every constraint point.
/// With c constraints the remaining degree+1-c degrees of freedom are
/// drawn from `rng`; fully constrained input consumes no randomness.
[[nodiscard]] Polynomial poly_random(const PrimeField& field, std::size_t degree, std::span<const Point> constraints,
                                     RandomStream& rng);

/// Uniform element of the field.
[[nodiscard]] Element random_element(const PrimeField& field, RandomStream& rng);

}  // namespace lrss::algebra
