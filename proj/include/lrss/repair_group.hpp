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

#include "lrss/polynomial.hpp"
#include "lrss/shamir.hpp"

// Grouping, repairing functions and the second sharing of the group's
// weak redundancy.
//
// A group of gamma participants owns a repairing polynomial of degree
// gamma-1 through its members' share points. One extra random point on it,
// (x_lambda, y_lambda), is the weak redundancy: together with any gamma-1
// surviving member points it pins the polynomial down again, so a single
// lost share can be recomputed exactly. y_lambda itself is Shamir-shared
// (gamma, gamma+1) among the members plus one external holder.
namespace lrss::repair {

using algebra::Element;
using algebra::PrimeField;
using shamir::Share;

struct GroupSpec {
  std::size_t id = 0;                // 1-based
  std::vector<std::size_t> members;  // 1-based participant indices, ascending

  [[nodiscard]] std::size_t gamma() const noexcept { return members.size(); }
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Full repairing polynomial. Determines every member share on its own.
struct StrongRedundancy {
  algebra::Polynomial function;
};

/// One extra point on the repairing polynomial; x is public, y is the
/// group's sub-secret.
struct WeakRedundancy {
  Element x_lambda;
  Element y_lambda;

  friend bool operator==(const WeakRedundancy&, const WeakRedundancy&) = default;
};

/// Dealer-side output of setting up one group.
struct GroupState {
  GroupSpec spec;
  Element x_lambda;
  std::vector<Share> sss_shares;  // gamma+1; the last is the external one
  std::size_t sss_threshold = 0;  // == gamma

  [[nodiscard]] const Share& external_subshare() const { return sss_shares.back(); }
};

/// m groups of n/m consecutive participants. ConfigurationError when m
/// does not divide n or a group would have fewer than 2 members.
[[nodiscard]] std::vector<GroupSpec> partition(std::size_t n, std::size_t m);

[[nodiscard]] StrongRedundancy build_repair_function(const PrimeField& field, std::span<const Share> group_shares);

/// x_lambda uniform over GF(p) minus {0} and `excluded`.
[[nodiscard]] WeakRedundancy make_weak_redundancy(const PrimeField& field, const StrongRedundancy& f,
                                                  std::span<const Element> excluded, RandomStream& rng);

/// Weak redundancy at a chosen abscissa; DomainError if it is 0 or excluded.
[[nodiscard]] WeakRedundancy weak_redundancy_at(const PrimeField& field, const StrongRedundancy& f, Element x_lambda,
                                                std::span<const Element> excluded);

/// x-coordinates of the second sharing: 1..gamma+1, the last one external.
[[nodiscard]] shamir::SharingParams sss_params(std::size_t gamma);

/// (gamma, gamma+1) sharing of y_lambda.
[[nodiscard]] std::vector<Share> setup_sss(const PrimeField& field, Element y_lambda, std::size_t gamma,
                                           RandomStream& rng);

/// Recomputes the share at failed_x from gamma-1 surviving member points and
/// the weak redundancy. InsufficientPointsError with fewer than gamma points.
[[nodiscard]] Element repair_share(const PrimeField& field, std::size_t gamma, std::span<const Share> surviving,
                                   const WeakRedundancy& redundancy, Element failed_x);

/// Rebuilds the sub-share at failed_sss_x from gamma available sub-shares.
[[nodiscard]] Share restore_subshare(const PrimeField& field, std::size_t gamma, std::span<const Share> available,
                                     Element failed_sss_x);

/// Steps 2-4 of group setup: repairing function, weak redundancy, second
/// sharing. `member_shares` are in spec.members order.
[[nodiscard]] GroupState build_group(const PrimeField& field, const GroupSpec& spec,
                                     std::span<const Share> member_shares, RandomStream& lambda_rng,
                                     RandomStream& sss_rng);

}  // namespace lrss::repair
