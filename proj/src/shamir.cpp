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


#include "lrss/shamir.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lrss/error.hpp"

namespace lrss::shamir {

namespace {

struct Selection {
  std::vector<algebra::Point> basis;  // first k by x
  std::vector<algebra::Point> extra;
};

Selection select(std::span<const Share> shares, std::size_t k) {
  if (k == 0) throw DomainError("threshold must be at least 1");
  std::vector<algebra::Point> points = to_points(shares);
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  if (auto dup = std::adjacent_find(points.begin(), points.end(),
                                    [](const auto& a, const auto& b) { return a.x == b.x; });
      dup != points.end()) {
    throw DomainError("duplicate share x-coordinate " + algebra::to_string(dup->x));
  }
  if (points.size() < k) {
    throw InsufficientSharesError("need " + std::to_string(k) + " shares, have " + std::to_string(points.size()));
  }
  Selection s;
  s.basis.assign(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(k));
  s.extra.assign(points.begin() + static_cast<std::ptrdiff_t>(k), points.end());
  return s;
}

void cross_check(const PrimeField& field, const algebra::Polynomial& f, std::span<const algebra::Point> extra) {
  for (const auto& p : extra) {
    if (algebra::poly_eval(field, f, p.x) != p.y) {
      throw CorruptionError("share at x=" + algebra::to_string(p.x) + " is inconsistent with the others");
    }
  }
}

}  // namespace

SharingParams SharingParams::sequential(std::size_t k, std::size_t n) {
  SharingParams p;
  p.k = k;
  p.x_assignment.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) p.x_assignment.emplace_back(i);
  return p;
}

void validate(const PrimeField& field, const SharingParams& params) {
  if (params.k < 1 || params.k > params.n()) {
    throw DomainError("threshold k=" + std::to_string(params.k) + " must satisfy 1 <= k <= n=" +
                      std::to_string(params.n()));
  }
  std::set<std::uint64_t> seen;
  for (Element x : params.x_assignment) {
    if (!field.contains(x) || x.value == 0) {
      throw DomainError("share x-coordinate " + algebra::to_string(x) + " must be a nonzero field element");
    }
    if (!seen.insert(x.value).second) throw DomainError("duplicate share x-coordinate " + algebra::to_string(x));
  }
}

std::vector<Share> deal(const PrimeField& field, const algebra::Polynomial& f, const SharingParams& params) {
  validate(field, params);
  const std::vector<Element> ys = algebra::poly_eval_many(field, f, params.x_assignment);
  std::vector<Share> shares;
  shares.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) shares.push_back({params.x_assignment[i], ys[i]});
  return shares;
}

std::vector<Share> split(const PrimeField& field, Element secret, const SharingParams& params, RandomStream& rng) {
  validate(field, params);
  if (!field.contains(secret)) throw DomainError("secret is not a reduced field element");
  const algebra::Point at_zero{Element{0}, secret};
  const algebra::Polynomial f = algebra::poly_random(field, params.k - 1, std::span(&at_zero, 1), rng);
  return deal(field, f, params);
}

Element recover(const PrimeField& field, std::span<const Share> shares, std::size_t k) {
  Selection s = select(shares, k);
  if (s.extra.empty()) return algebra::interpolate_at(field, s.basis, Element{0});
  const algebra::Polynomial f = algebra::poly_interpolate(field, s.basis);
  cross_check(field, f, s.extra);
  return f[0];
}

algebra::Polynomial reconstruct_polynomial(const PrimeField& field, std::span<const Share> shares, std::size_t k) {
  Selection s = select(shares, k);
  algebra::Polynomial f = algebra::poly_interpolate(field, s.basis);
  cross_check(field, f, s.extra);
  return f;
}

std::vector<algebra::Point> to_points(std::span<const Share> shares) {
  std::vector<algebra::Point> points;
  points.reserve(shares.size());
  for (const auto& s : shares) points.push_back({s.x, s.y});
  return points;
}

}  // namespace lrss::shamir
