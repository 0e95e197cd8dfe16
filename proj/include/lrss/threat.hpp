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

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "lrss/protocol.hpp"

namespace lrss::threat {

using algebra::Element;
using protocol::NodeId;

/// Probability that an attacker compromising each server independently
/// with probability q obtains all 4 shares of a group with no redundancy
/// server: q^4. DomainError outside [0, 1].
[[nodiscard]] double p1_exact(double q);

/// Same with a 5th redundancy server where any 4 of 5 suffice:
/// C(5,4) q^4 (1-q) + q^5 = q^4 (5 - 4q).
[[nodiscard]] double p2_exact(double q);

enum class Scheme { kBaseline4, kSss5 };

[[nodiscard]] std::string_view scheme_name(Scheme s) noexcept;

struct CompromiseModel {
  double q = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Fraction of trials in which the attacker gets the whole group. Each
/// trial's draws are a pure function of (seed, trial, server), so the
/// estimate does not depend on evaluation order.
[[nodiscard]] double mc_group_compromise(const CompromiseModel& model, Scheme scheme);

/// What an attacker can derive from the private data of a compromised node
/// set plus the public registry.
struct AttackerKnowledge {
  std::set<NodeId> compromised;
  std::map<NodeId, Element> known_primary;  // participant -> y, direct or derived
  std::size_t direct_primary = 0;
  std::vector<std::map<std::uint64_t, Element>> known_subshares;  // per group: sss x -> y
  std::vector<std::optional<Element>> derived_subsecrets;         // per group y_lambda
  std::optional<Element> secret;

  [[nodiscard]] bool secret_recovered() const noexcept { return secret.has_value(); }
  [[nodiscard]] bool any_subsecret() const noexcept;
  /// True when every component of `other` is also present here.
  [[nodiscard]] bool includes(const AttackerKnowledge& other) const;

  friend bool operator==(const AttackerKnowledge&, const AttackerKnowledge&) = default;
};

/// Raw knowledge: data on the compromised nodes, nothing derived yet.
[[nodiscard]] AttackerKnowledge initial_knowledge(const protocol::SystemState& state,
                                                  std::span<const NodeId> compromised);

/// One pass of the derivation rules:
///   R1  >= gamma sub-shares of a group  => its y_lambda
///   R2  >= gamma points on a group's repairing function (member shares
///       plus the lambda point) => every member share
///   R3  >= k primary shares => the secret
/// Returns whether anything new was derived.
bool closure_step(const protocol::SystemState& state, AttackerKnowledge& knowledge);

/// initial_knowledge iterated with closure_step to a fixpoint.
[[nodiscard]] AttackerKnowledge attacker_closure(const protocol::SystemState& state,
                                                 std::span<const NodeId> compromised);

struct EnumerationResult {
  std::size_t min_compromise_size = 0;
  std::vector<NodeId> witness;
  std::size_t closures_evaluated = 0;
};

inline constexpr std::size_t kMaxEnumerationNodes = 16;

/// Smallest compromised set whose closure recovers the secret, searching
/// subsets by ascending size and stopping at the first hit.
/// EnumerationRefusedError when n > kMaxEnumerationNodes.
[[nodiscard]] EnumerationResult min_compromise_size(const protocol::SystemState& state);

/// Placement where groups 1 and 2 host each other's external sub-share on
/// their first members; any further group goes to group 1's first member.
[[nodiscard]] std::vector<NodeId> reciprocal_holders(std::size_t n, std::size_t m);

struct PlacementSweep {
  std::size_t placements_checked = 0;
  std::size_t min_over_placements = 0;
  std::size_t max_over_placements = 0;
  std::vector<NodeId> worst_holders;  // a placement attaining the minimum
  std::vector<NodeId> witness;        // its minimal compromised set
};

inline constexpr std::size_t kMaxSweepPlacements = 100000;

/// Runs min_compromise_size for every fixed placement admissible under
/// `anti_reciprocal`. `base` supplies k, n, m, modulus, secret and seed.
[[nodiscard]] PlacementSweep sweep_placements(const protocol::SetupParams& base, bool anti_reciprocal);

}  // namespace lrss::threat
