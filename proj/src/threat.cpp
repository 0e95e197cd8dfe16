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


#include "lrss/threat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lrss/error.hpp"
#include "lrss/rng.hpp"

namespace lrss::threat {

using protocol::SystemState;
using shamir::Share;

namespace {

void check_probability(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("compromise probability must lie in [0, 1]");
}

// Counter-based uniform draw in [0, 1).
double trial_uniform(std::uint64_t seed_key, std::uint64_t trial, std::uint64_t server) {
  const std::uint64_t bits = mix64(seed_key ^ mix64(trial * 8 + server));
  return static_cast<double>(bits >> 11U) * 0x1.0p-53;
}

// Calls visit(subset) for each size-`size` subset of 1..n in lexicographic
// order until visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  if (size > n) return false;
  std::vector<NodeId> subset(size);
  std::iota(subset.begin(), subset.end(), NodeId{1});
  while (true) {
    if (visit(std::span<const NodeId>(subset))) return true;
    std::size_t i = size;
    while (i > 0 && subset[i - 1] == n - size + i) --i;
    if (i == 0) return false;
    ++subset[i - 1];
    for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

double p1_exact(double q) {
  check_probability(q);
  const double q2 = q * q;
  return q2 * q2;
}

double p2_exact(double q) {
  check_probability(q);
  const double q2 = q * q;
  return q2 * q2 * (5.0 - 4.0 * q);
}

std::string_view scheme_name(Scheme s) noexcept { return s == Scheme::kBaseline4 ? "baseline4" : "sss5"; }

double mc_group_compromise(const CompromiseModel& model, Scheme scheme) {
  check_probability(model.q);
  if (model.trials == 0) throw DomainError("Monte Carlo needs at least one trial");
  const std::size_t servers = scheme == Scheme::kBaseline4 ? 4 : 5;
  const std::size_t needed = 4;
  const std::uint64_t key = mix64(model.seed ^ 0x6d6f6e7465636172ULL);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < model.trials; ++t) {
    std::size_t taken = 0;
    for (std::size_t s = 0; s < servers; ++s) {
      if (trial_uniform(key, t, s) < model.q) ++taken;
    }
    if (taken >= needed) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(model.trials);
}

bool AttackerKnowledge::any_subsecret() const noexcept {
  return std::any_of(derived_subsecrets.begin(), derived_subsecrets.end(), [](const auto& v) { return v.has_value(); });
}

bool AttackerKnowledge::includes(const AttackerKnowledge& other) const {
  auto map_includes = [](const auto& big, const auto& small) {
    return std::all_of(small.begin(), small.end(), [&](const auto& kv) {
      auto it = big.find(kv.first);
      return it != big.end() && it->second == kv.second;
    });
  };
  if (!std::includes(compromised.begin(), compromised.end(), other.compromised.begin(), other.compromised.end())) {
    return false;
  }
  if (!map_includes(known_primary, other.known_primary)) return false;
  if (known_subshares.size() != other.known_subshares.size()) return false;
  for (std::size_t g = 0; g < known_subshares.size(); ++g) {
    if (!map_includes(known_subshares[g], other.known_subshares[g])) return false;
    if (other.derived_subsecrets[g] && derived_subsecrets[g] != other.derived_subsecrets[g]) return false;
  }
  if (other.secret && secret != other.secret) return false;
  return true;
}

AttackerKnowledge initial_knowledge(const SystemState& state, std::span<const NodeId> compromised) {
  const auto& registry = state.registry();
  AttackerKnowledge k;
  k.known_subshares.resize(registry.groups.size());
  k.derived_subsecrets.resize(registry.groups.size());
  for (NodeId id : compromised) {
    const protocol::NodeStore& node = state.node(id);
    k.compromised.insert(id);
    if (node.primary) k.known_primary.emplace(id, node.primary->y);
    if (node.subshare) k.known_subshares[state.group_index_of(id)].emplace(node.subshare->x.value, node.subshare->y);
    // Hosted records are attributable through the public digests.
    for (const auto& rec : node.hosted) {
      for (std::size_t g = 0; g < registry.groups.size(); ++g) {
        if (registry.groups[g].digest == rec.digest) {
          k.known_subshares[g].emplace(rec.subshare.x.value, rec.subshare.y);
        }
      }
    }
  }
  k.direct_primary = k.known_primary.size();
  return k;
}

bool closure_step(const SystemState& state, AttackerKnowledge& k) {
  const auto& field = state.field();
  const auto& registry = state.registry();
  bool changed = false;

  for (std::size_t g = 0; g < registry.groups.size(); ++g) {
    const protocol::GroupRecord& group = registry.groups[g];
    const std::size_t gamma = group.gamma();

    // R1
    if (!k.derived_subsecrets[g] && k.known_subshares[g].size() >= gamma) {
      std::vector<Share> subs;
      for (const auto& [x, y] : k.known_subshares[g]) subs.push_back({Element{x}, y});
      k.derived_subsecrets[g] = shamir::recover(field, subs, gamma);
      changed = true;
    }

    // R2
    if (k.derived_subsecrets[g]) {
      std::vector<Share> points{{group.x_lambda, *k.derived_subsecrets[g]}};
      std::vector<NodeId> missing;
      for (NodeId id : group.members) {
        auto it = k.known_primary.find(id);
        if (it != k.known_primary.end()) {
          points.push_back({registry.participants[id - 1].x, it->second});
        } else {
          missing.push_back(id);
        }
      }
      if (!missing.empty() && points.size() >= gamma) {
        const algebra::Polynomial f = shamir::reconstruct_polynomial(field, points, gamma);
        for (NodeId id : missing) k.known_primary.emplace(id, algebra::poly_eval(field, f, registry.participants[id - 1].x));
        changed = true;
      }
    }
  }

  // R3
  if (!k.secret && k.known_primary.size() >= registry.k) {
    std::vector<Share> shares;
    for (const auto& [id, y] : k.known_primary) shares.push_back({registry.participants[id - 1].x, y});
    k.secret = shamir::recover(field, shares, registry.k);
    changed = true;
  }
  return changed;
}

AttackerKnowledge attacker_closure(const SystemState& state, std::span<const NodeId> compromised) {
  AttackerKnowledge k = initial_knowledge(state, compromised);
  while (closure_step(state, k)) {
  }
  return k;
}

EnumerationResult min_compromise_size(const SystemState& state) {
  const std::size_t n = state.registry().n;
  if (n > kMaxEnumerationNodes) {
    throw EnumerationRefusedError("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationNodes) +
                                  " nodes, system has " + std::to_string(n));
  }
  EnumerationResult result;
  for (std::size_t size = 0; size <= n; ++size) {
    const bool found = for_each_subset(n, size, [&](std::span<const NodeId> subset) {
      ++result.closures_evaluated;
      if (attacker_closure(state, subset).secret_recovered()) {
        result.witness.assign(subset.begin(), subset.end());
        return true;
      }
      return false;
    });
    if (found) {
      result.min_compromise_size = size;
      return result;
    }
  }
  // Unreachable for a well-formed system: all n nodes hold n >= k shares.
  throw IntegrityError("no compromised set recovers the secret");
}

std::vector<NodeId> reciprocal_holders(std::size_t n, std::size_t m) {
  const std::vector<repair::GroupSpec> groups = repair::partition(n, m);
  if (m < 2) throw ConfigurationError("a reciprocal placement needs at least 2 groups");
  std::vector<NodeId> holders(m, groups[0].members.front());
  holders[0] = groups[1].members.front();
  return holders;
}

PlacementSweep sweep_placements(const protocol::SetupParams& base, bool anti_reciprocal) {
  const std::vector<repair::GroupSpec> groups = repair::partition(base.n, base.m);
  const std::size_t outside = base.n - groups.front().gamma();
  std::size_t total = 1;
  for (std::size_t g = 0; g < base.m; ++g) {
    if (total > kMaxSweepPlacements / outside) {
      throw EnumerationRefusedError("too many placements to sweep exhaustively");
    }
    total *= outside;
  }

  // Candidate holders for each group, in ascending node order.
  std::vector<std::vector<NodeId>> candidates(base.m);
  for (std::size_t g = 0; g < base.m; ++g) {
    for (NodeId id = 1; id <= base.n; ++id) {
      if (std::find(groups[g].members.begin(), groups[g].members.end(), id) == groups[g].members.end()) {
        candidates[g].push_back(id);
      }
    }
  }

  PlacementSweep sweep;
  for (std::size_t index = 0; index < total; ++index) {
    std::size_t rest = index;
    protocol::SetupParams params = base;
    params.placement = protocol::Placement::kFixed;
    params.anti_reciprocal = anti_reciprocal;
    params.fixed_holders.assign(base.m, 0);
    for (std::size_t g = base.m; g-- > 0;) {
      params.fixed_holders[g] = candidates[g][rest % outside];
      rest /= outside;
    }
    std::optional<SystemState> state;
    try {
      state.emplace(protocol::system_setup(params));
    } catch (const PlacementError&) {
      continue;
    }
    const EnumerationResult r = min_compromise_size(*state);
    if (sweep.placements_checked == 0 || r.min_compromise_size < sweep.min_over_placements) {
      sweep.min_over_placements = r.min_compromise_size;
      sweep.worst_holders = params.fixed_holders;
      sweep.witness = r.witness;
    }
    sweep.max_over_placements = std::max(sweep.max_over_placements, r.min_compromise_size);
    ++sweep.placements_checked;
  }
  if (sweep.placements_checked == 0) throw PlacementError("no admissible placement exists");
  return sweep;
}

}  // namespace lrss::threat
