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


#include "lrss/polynomial.hpp"

#include <algorithm>
#include <string>

#include "lrss/error.hpp"
#include "lrss/kernels.hpp"

namespace lrss::algebra {

namespace {

void trim(std::vector<Element>& c) {
  while (c.size() > 1 && c.back().value == 0) c.pop_back();
  if (c.empty()) c.push_back(Element{0});
}

void require_distinct_x(std::span<const Point> points) {
  std::vector<std::uint64_t> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.x.value);
  std::sort(xs.begin(), xs.end());
  auto dup = std::adjacent_find(xs.begin(), xs.end());
  if (dup != xs.end()) throw DomainError("duplicate x-coordinate " + std::to_string(*dup));
}

// Coefficients of prod (x - x_i), constant term first; size = points + 1.
std::vector<Element> vanishing(const PrimeField& field, std::span<const Point> points) {
  std::vector<Element> m{field.one()};
  for (const auto& p : points) {
    std::vector<Element> next(m.size() + 1, field.zero());
    const Element neg_x = field.neg(p.x);
    for (std::size_t j = 0; j < m.size(); ++j) {
      next[j + 1] = field.add(next[j + 1], m[j]);
      next[j] = field.add(next[j], field.mul(m[j], neg_x));
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace

Polynomial::Polynomial(std::vector<Element> coefficients) : coefficients_(std::move(coefficients)) {
  trim(coefficients_);
}

Element poly_eval(const PrimeField& field, const Polynomial& f, Element x) {
  Element acc = field.zero();
  const auto c = f.coefficients();
  for (std::size_t j = c.size(); j-- > 0;) acc = field.add(field.mul(acc, x), c[j]);
  return acc;
}

std::vector<Element> poly_eval_many(const PrimeField& field, const Polynomial& f, std::span<const Element> xs) {
  std::vector<Element> out(xs.size());
  kernels::eval_many(field, f.coefficients(), xs, out);
  return out;
}

Polynomial poly_interpolate(const PrimeField& field, std::span<const Point> points) {
  if (points.empty()) throw DomainError("interpolation needs at least one point");
  require_distinct_x(points);

  const std::size_t count = points.size();
  const std::vector<Element> master = vanishing(field, points);
  std::vector<Element> result(count, field.zero());
  std::vector<Element> quotient(count);

  for (const auto& p : points) {
    // quotient = master / (x - p.x) by synthetic division.
    quotient[count - 1] = master[count];
    for (std::size_t j = count - 1; j > 0; --j) {
      quotient[j - 1] = field.add(master[j], field.mul(p.x, quotient[j]));
    }
    Element denom = field.zero();
    for (std::size_t j = count; j-- > 0;) denom = field.add(field.mul(denom, p.x), quotient[j]);
    const Element weight = field.mul(p.y, field.inv(denom));
    kernels::mul_add(field, weight, quotient, result);
  }
  return Polynomial(std::move(result));
}

Element interpolate_at(const PrimeField& field, std::span<const Point> points, Element at) {
  if (points.empty()) throw DomainError("interpolation needs at least one point");
  require_distinct_x(points);
  Element total = field.zero();
  for (std::size_t i = 0; i < points.size(); ++i) {
    Element num = field.one();
    Element den = field.one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      num = field.mul(num, field.sub(at, points[j].x));
      den = field.mul(den, field.sub(points[i].x, points[j].x));
    }
    total = field.add(total, field.mul(points[i].y, field.mul(num, field.inv(den))));
  }
  return total;
}

Element random_element(const PrimeField& field, RandomStream& rng) {
  return Element{rng.uniform_below(field.modulus())};
}

Polynomial poly_random(const PrimeField& field, std::size_t degree, std::span<const Point> constraints,
                       RandomStream& rng) {
  if (constraints.size() > degree + 1) {
    throw DomainError(std::to_string(constraints.size()) + " constraints over-determine a degree-" +
                      std::to_string(degree) + " polynomial");
  }
  require_distinct_x(constraints);

  // f = L + Z * R: L interpolates the constraints, Z vanishes on them and
  // R is uniform of degree <= degree - c. R -> f is a bijection onto the
  // polynomials through the constraints, so f is uniform among them.
  std::vector<Element> f(degree + 1, field.zero());
  if (!constraints.empty()) {
    const Polynomial base = poly_interpolate(field, constraints);
    std::copy(base.coefficients().begin(), base.coefficients().end(), f.begin());
  }
  const std::size_t free = degree + 1 - constraints.size();
  if (free > 0) {
    const std::vector<Element> zero_on = vanishing(field, constraints);
    for (std::size_t r = 0; r < free; ++r) {
      const Element coeff = random_element(field, rng);
      std::span<Element> window(f.data() + r, zero_on.size());
      kernels::mul_add(field, coeff, zero_on, window);
    }
  }
  return Polynomial(std::move(f));
}

}  // namespace lrss::algebra
