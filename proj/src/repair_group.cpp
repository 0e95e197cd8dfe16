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


#include "lrss/repair_group.hpp"

#include <algorithm>
#include <string>

#include "lrss/error.hpp"

namespace lrss::repair {

namespace {

std::vector<std::uint64_t> forbidden_abscissae(const PrimeField& field, std::span<const Element> excluded) {
  std::vector<std::uint64_t> forbidden{0};
  for (Element e : excluded) forbidden.push_back(e.value % field.modulus());
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  return forbidden;
}

}  // namespace

std::vector<GroupSpec> partition(std::size_t n, std::size_t m) {
  if (m == 0 || n == 0) throw ConfigurationError("n and m must be positive");
  if (n % m != 0) {
    throw ConfigurationError("m=" + std::to_string(m) + " does not divide n=" + std::to_string(n) +
                             "; groups must have equal size");
  }
  const std::size_t gamma = n / m;
  if (gamma < 2) throw ConfigurationError("groups need at least 2 members, got " + std::to_string(gamma));
  std::vector<GroupSpec> groups(m);
  for (std::size_t g = 0; g < m; ++g) {
    groups[g].id = g + 1;
    for (std::size_t j = 0; j < gamma; ++j) groups[g].members.push_back(g * gamma + j + 1);
  }
  return groups;
}

StrongRedundancy build_repair_function(const PrimeField& field, std::span<const Share> group_shares) {
  const auto points = shamir::to_points(group_shares);
  return {algebra::poly_interpolate(field, points)};
}

WeakRedundancy make_weak_redundancy(const PrimeField& field, const StrongRedundancy& f,
                                    std::span<const Element> excluded, RandomStream& rng) {
  const std::vector<std::uint64_t> forbidden = forbidden_abscissae(field, excluded);
  if (forbidden.size() >= field.modulus()) throw DomainError("no admissible x_lambda left in the field");
  // Draw a rank among admissible values, then step over forbidden ones.
  std::uint64_t x = rng.uniform_below(field.modulus() - forbidden.size());
  for (std::uint64_t f_value : forbidden) {
    if (x >= f_value) ++x;
  }
  return weak_redundancy_at(field, f, Element{x}, excluded);
}

WeakRedundancy weak_redundancy_at(const PrimeField& field, const StrongRedundancy& f, Element x_lambda,
                                  std::span<const Element> excluded) {
  if (!field.contains(x_lambda) || x_lambda.value == 0 ||
      std::find(excluded.begin(), excluded.end(), x_lambda) != excluded.end()) {
    throw DomainError("x_lambda=" + algebra::to_string(x_lambda) + " collides with a reserved abscissa");
  }
  return {x_lambda, algebra::poly_eval(field, f.function, x_lambda)};
}

shamir::SharingParams sss_params(std::size_t gamma) { return shamir::SharingParams::sequential(gamma, gamma + 1); }

std::vector<Share> setup_sss(const PrimeField& field, Element y_lambda, std::size_t gamma, RandomStream& rng) {
  if (gamma < 2) throw DomainError("group size must be at least 2");
  return shamir::split(field, y_lambda, sss_params(gamma), rng);
}

Element repair_share(const PrimeField& field, std::size_t gamma, std::span<const Share> surviving,
                     const WeakRedundancy& redundancy, Element failed_x) {
  std::vector<Share> points(surviving.begin(), surviving.end());
  points.push_back({redundancy.x_lambda, redundancy.y_lambda});
  if (points.size() < gamma) {
    throw InsufficientPointsError("repair needs " + std::to_string(gamma) + " points on the repairing function, have " +
                                  std::to_string(points.size()) + " (more than one failure in the group?)");
  }
  const algebra::Polynomial f = shamir::reconstruct_polynomial(field, points, gamma);
  return algebra::poly_eval(field, f, failed_x);
}

Share restore_subshare(const PrimeField& field, std::size_t gamma, std::span<const Share> available,
                       Element failed_sss_x) {
  if (available.size() < gamma) {
    throw InsufficientPointsError("sub-share restore needs " + std::to_string(gamma) + " sub-shares, have " +
                                  std::to_string(available.size()));
  }
  const algebra::Polynomial f = shamir::reconstruct_polynomial(field, available, gamma);
  return {failed_sss_x, algebra::poly_eval(field, f, failed_sss_x)};
}

GroupState build_group(const PrimeField& field, const GroupSpec& spec, std::span<const Share> member_shares,
                       RandomStream& lambda_rng, RandomStream& sss_rng) {
  if (member_shares.size() != spec.gamma()) throw DomainError("member share count does not match group size");
  const StrongRedundancy f = build_repair_function(field, member_shares);
  std::vector<Element> member_x;
  for (const auto& s : member_shares) member_x.push_back(s.x);
  const WeakRedundancy weak = make_weak_redundancy(field, f, member_x, lambda_rng);

  GroupState state;
  state.spec = spec;
  state.x_lambda = weak.x_lambda;
  state.sss_threshold = spec.gamma();
  state.sss_shares = setup_sss(field, weak.y_lambda, spec.gamma(), sss_rng);
  return state;
}

}  // namespace lrss::repair
