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


#include "lrss/protocol.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "lrss/error.hpp"
#include "lrss/rng.hpp"

namespace lrss::protocol {

namespace {

constexpr std::uint64_t kHwMask = (std::uint64_t{1} << 48) - 1;

std::string redacted_share(const char* what, Element x) {
  return std::string(what) + " x=" + algebra::to_string(x) + " y=<redacted>";
}

algebra::PrimeField checked_field(std::uint64_t modulus) {
  try {
    return algebra::PrimeField(modulus);
  } catch (const DomainError& e) {
    throw ConfigurationError(e.what());
  }
}

std::vector<HwId> draw_hw_ids(std::size_t n, std::uint64_t seed) {
  RandomStream rng = RandomStream::derive(seed, "hw");
  std::set<std::uint64_t> used;
  std::vector<HwId> ids;
  while (ids.size() < n) {
    // Locally administered, unicast.
    const std::uint64_t v = ((rng.next_u64() & kHwMask) & ~(std::uint64_t{0x01} << 40)) | (std::uint64_t{0x02} << 40);
    if (used.insert(v).second) ids.push_back(HwId{v});
  }
  return ids;
}

// Group index whose record a node hosts, resolved through the registry.
std::optional<std::size_t> hosted_group(const PublicRegistry& registry, const HostedRecord& rec) {
  for (std::size_t g = 0; g < registry.groups.size(); ++g) {
    if (registry.groups[g].digest == rec.digest) return g;
  }
  return std::nullopt;
}

}  // namespace

std::string format_hw_id(HwId id) {
  char buf[18];
  std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x", static_cast<unsigned>((id.value >> 40U) & 0xffU),
                static_cast<unsigned>((id.value >> 32U) & 0xffU), static_cast<unsigned>((id.value >> 24U) & 0xffU),
                static_cast<unsigned>((id.value >> 16U) & 0xffU), static_cast<unsigned>((id.value >> 8U) & 0xffU),
                static_cast<unsigned>(id.value & 0xffU));
  return buf;
}

HwId parse_hw_id(const std::string& text) {
  unsigned b[6];
  char tail = 0;
  if (text.size() != 17 ||
      std::sscanf(text.c_str(), "%2x:%2x:%2x:%2x:%2x:%2x%c", &b[0], &b[1], &b[2], &b[3], &b[4], &b[5], &tail) != 6) {
    throw DomainError("malformed hardware id '" + text + "'");
  }
  std::uint64_t v = 0;
  for (unsigned byte : b) v = (v << 8U) | byte;
  return HwId{v};
}

std::string to_hex(const Digest& d) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(d.size() * 2);
  for (std::uint8_t b : d) {
    out.push_back(kHex[b >> 4U]);
    out.push_back(kHex[b & 0x0fU]);
  }
  return out;
}

Digest digest_from_hex(const std::string& hex) {
  if (hex.size() != 64) throw DomainError("digest must be 64 hex characters");
  auto nibble = [&](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    throw DomainError("digest must be lowercase hex: '" + hex + "'");
  };
  Digest d{};
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4U) | nibble(hex[2 * i + 1]));
  }
  return d;
}

Digest hash_identity(std::span<const HwId> member_hw_ids) {
  std::vector<HwId> sorted(member_hw_ids.begin(), member_hw_ids.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint8_t> encoded;
  encoded.reserve(sorted.size() * 6);
  for (HwId id : sorted) {
    for (int shift = 40; shift >= 0; shift -= 8) encoded.push_back(static_cast<std::uint8_t>(id.value >> shift));
  }
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(encoded.data(), encoded.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size()) {
    throw IntegrityError("SHA-256 computation failed");
  }
  return out;
}

std::size_t NodeStore::private_element_count() const noexcept {
  return (primary ? 1U : 0U) + (subshare ? 1U : 0U) + hosted.size();
}

SystemState::SystemState(PublicRegistry registry, std::vector<NodeStore> nodes)
    : registry_(std::move(registry)),
      field_(checked_field(registry_.modulus)),
      nodes_(std::move(nodes)),
      refuse_ack_(nodes_.size(), false) {
  if (nodes_.size() != registry_.n || registry_.participants.size() != registry_.n) {
    throw ConfigurationError("node count does not match registry n");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].identity.node_id != i + 1 || registry_.participants[i].id != i + 1) {
      throw ConfigurationError("nodes must be numbered 1..n in order");
    }
  }
}

const NodeStore& SystemState::node(NodeId id) const {
  if (id < 1 || id > nodes_.size()) throw ConfigurationError("unknown node P" + std::to_string(id));
  return nodes_[id - 1];
}

NodeStore& SystemState::node(NodeId id) {
  return const_cast<NodeStore&>(static_cast<const SystemState&>(*this).node(id));
}

std::size_t SystemState::group_index_of(NodeId id) const {
  for (std::size_t g = 0; g < registry_.groups.size(); ++g) {
    const auto& members = registry_.groups[g].members;
    if (std::find(members.begin(), members.end(), id) != members.end()) return g;
  }
  throw ConfigurationError("node P" + std::to_string(id) + " belongs to no group");
}

void SystemState::set_ack_refusal(NodeId id, bool refuse) {
  (void)node(id);
  refuse_ack_[id - 1] = refuse;
}

bool SystemState::refuses_ack(NodeId id) const {
  (void)node(id);
  return refuse_ack_[id - 1];
}

std::vector<NodeId> admissible_holders(const SystemState& state, std::size_t group_index, bool anti_reciprocal) {
  const auto& registry = state.registry();
  const GroupRecord& group = registry.groups.at(group_index);

  // Groups whose external sub-share is hosted inside this group.
  std::set<std::size_t> hosted_here;
  if (anti_reciprocal) {
    for (NodeId member : group.members) {
      for (const auto& rec : state.node(member).hosted) {
        if (auto g = hosted_group(registry, rec)) hosted_here.insert(*g);
      }
    }
  }

  std::vector<NodeId> out;
  for (const auto& node : state.nodes()) {
    const NodeId id = node.identity.node_id;
    if (node.failed) continue;
    const std::size_t g = state.group_index_of(id);
    if (g == group_index) continue;
    if (hosted_here.contains(g)) continue;
    out.push_back(id);
  }
  return out;
}

NodeId place_external(SystemState& state, std::size_t group_index, const Share& subshare, RandomStream& rng,
                      bool anti_reciprocal) {
  const std::vector<NodeId> candidates = admissible_holders(state, group_index, anti_reciprocal);
  if (candidates.empty()) {
    throw PlacementError("no admissible holder for group G" + std::to_string(group_index + 1) + "'s sub-share");
  }
  const NodeId holder = candidates[rng.uniform_below(candidates.size())];
  state.node(holder).hosted.push_back({state.registry().groups[group_index].digest, subshare});
  return holder;
}

NodeId place_external_at(SystemState& state, std::size_t group_index, const Share& subshare, NodeId holder,
                         bool anti_reciprocal) {
  const std::vector<NodeId> candidates = admissible_holders(state, group_index, anti_reciprocal);
  if (std::find(candidates.begin(), candidates.end(), holder) == candidates.end()) {
    throw PlacementError("P" + std::to_string(holder) + " may not host group G" + std::to_string(group_index + 1) +
                         "'s sub-share");
  }
  state.node(holder).hosted.push_back({state.registry().groups[group_index].digest, subshare});
  return holder;
}

namespace {

// Holders for every group at once, uniform over the admissible joint
// placements. Placing groups one by one under the anti-reciprocal rule can
// strand a later group, so whole placements are drawn and rejected instead.
std::vector<NodeId> draw_joint_placement(const SystemState& state, bool anti_reciprocal, RandomStream& rng) {
  constexpr int kMaxAttempts = 10000;
  const std::size_t m = state.registry().groups.size();
  std::vector<std::vector<NodeId>> outside(m);
  for (std::size_t g = 0; g < m; ++g) {
    for (const auto& node : state.nodes()) {
      if (!node.failed && state.group_index_of(node.identity.node_id) != g) outside[g].push_back(node.identity.node_id);
    }
    if (outside[g].empty()) {
      throw PlacementError("no admissible holder for group G" + std::to_string(g + 1) + "'s sub-share");
    }
  }
  // With two groups every placement is mutual.
  if (anti_reciprocal && m == 2) throw PlacementError("two groups cannot avoid hosting each other's sub-share");

  std::vector<NodeId> holders(m);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::size_t> host_group(m);
    for (std::size_t g = 0; g < m; ++g) {
      holders[g] = outside[g][rng.uniform_below(outside[g].size())];
      host_group[g] = state.group_index_of(holders[g]);
    }
    bool mutual = false;
    for (std::size_t g = 0; anti_reciprocal && g < m && !mutual; ++g) mutual = host_group[host_group[g]] == g;
    if (!mutual) return holders;
  }
  throw PlacementError("no anti-reciprocal placement found");
}

}  // namespace

SystemState system_setup(const SetupParams& params) {
  const algebra::PrimeField field = checked_field(params.modulus);
  if (params.k < 1 || params.k > params.n) {
    throw ConfigurationError("k=" + std::to_string(params.k) + " must satisfy 1 <= k <= n=" + std::to_string(params.n));
  }
  const std::vector<repair::GroupSpec> specs = repair::partition(params.n, params.m);
  if (params.modulus <= params.n + params.m + 2) {
    throw ConfigurationError("modulus " + std::to_string(params.modulus) + " is too small for n=" +
                             std::to_string(params.n) + ", m=" + std::to_string(params.m));
  }
  if (params.secret >= params.modulus) throw ConfigurationError("secret must be below the modulus");
  if (params.placement == Placement::kFixed && params.fixed_holders.size() != params.m) {
    throw ConfigurationError("fixed placement needs one holder per group");
  }

  const std::vector<HwId> hw = draw_hw_ids(params.n, params.seed);
  RandomStream sharing_rng = RandomStream::derive(params.seed, "sharing");
  const shamir::SharingParams global = shamir::SharingParams::sequential(params.k, params.n);
  const std::vector<Share> shares = shamir::split(field, Element{params.secret}, global, sharing_rng);

  PublicRegistry registry;
  registry.modulus = params.modulus;
  registry.k = params.k;
  registry.n = params.n;
  registry.m = params.m;
  std::vector<NodeStore> nodes(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    registry.participants.push_back({i + 1, shares[i].x, hw[i]});
    nodes[i].identity = {i + 1, hw[i]};
    nodes[i].primary = shares[i];
  }

  std::vector<repair::GroupState> groups;
  for (const auto& spec : specs) {
    std::vector<Share> member_shares;
    std::vector<HwId> member_hw;
    for (NodeId id : spec.members) {
      member_shares.push_back(shares[id - 1]);
      member_hw.push_back(hw[id - 1]);
    }
    RandomStream lambda_rng = RandomStream::derive(params.seed, "lambda", spec.id);
    RandomStream sss_rng = RandomStream::derive(params.seed, "sss", spec.id);
    repair::GroupState g = repair::build_group(field, spec, member_shares, lambda_rng, sss_rng);

    GroupRecord rec;
    rec.id = spec.id;
    rec.members = spec.members;
    rec.x_lambda = g.x_lambda;
    for (const auto& s : g.sss_shares) rec.sss_x.push_back(s.x);
    rec.digest = hash_identity(member_hw);
    registry.groups.push_back(std::move(rec));

    for (std::size_t j = 0; j < spec.gamma(); ++j) nodes[spec.members[j] - 1].subshare = g.sss_shares[j];
    groups.push_back(std::move(g));
  }

  SystemState state(std::move(registry), std::move(nodes));

  RandomStream placement_rng = RandomStream::derive(params.seed, "placement");
  std::vector<NodeId> holders;
  switch (params.placement) {
    case Placement::kRandom:
      holders = draw_joint_placement(state, params.anti_reciprocal, placement_rng);
      break;
    case Placement::kFixed:
      holders = params.fixed_holders;
      break;
    case Placement::kNone:
      break;
  }
  for (std::size_t g = 0; g < holders.size(); ++g) {
    place_external_at(state, g, groups[g].external_subshare(), holders[g], params.anti_reciprocal);
  }
  return state;
}

HolderResponse lookup_holder(const SystemState& state, const Digest& digest) {
  std::vector<HolderResponse> responses;
  for (const auto& node : state.nodes()) {
    if (node.failed) continue;
    for (const auto& rec : node.hosted) {
      if (rec.digest == digest) responses.push_back({node.identity.node_id, rec.subshare});
    }
  }
  if (responses.empty()) throw HolderLostError("no node holds a sub-share for digest " + to_hex(digest));
  if (responses.size() > 1) {
    throw IntegrityError(std::to_string(responses.size()) + " nodes answered digest " + to_hex(digest));
  }
  return responses.front();
}

std::string_view event_name(EventType t) noexcept {
  switch (t) {
    case EventType::kRequest:
      return "request";
    case EventType::kAck:
      return "ack";
    case EventType::kBroadcast:
      return "broadcast";
    case EventType::kHolderResponse:
      return "holder-response";
    case EventType::kContribution:
      return "contribution";
    case EventType::kInterpolate:
      return "interpolate";
    case EventType::kDelivery:
      return "delivery";
    case EventType::kRestore:
      return "restore";
  }
  return "unknown";
}

std::string RepairTrace::to_text() const {
  std::ostringstream out;
  for (const auto& e : events) {
    out << e.seq << " | " << event_name(e.type) << " | " << e.from << " | " << e.to << " | " << e.summary << '\n';
  }
  return out.str();
}

std::string node_label(NodeId id) { return "P" + std::to_string(id); }

void fail_node(SystemState& state, NodeId id) {
  NodeStore& node = state.node(id);
  if (node.failed) throw ConfigurationError(node_label(id) + " has already failed");
  node.primary.reset();
  node.subshare.reset();
  node.hosted.clear();
  node.failed = true;
}

RepairResult request_repair(SystemState& state, const NodeIdentity& proposer, NodeId failed) {
  const auto& field = state.field();
  NodeStore& target = state.node(failed);
  if (!target.failed) throw ConfigurationError(node_label(failed) + " has not failed; nothing to repair");
  if (proposer.node_id != failed || proposer.hw_id != state.registry().participants[failed - 1].hw_id) {
    throw AuthorizationError("proposer " + format_hw_id(proposer.hw_id) + " is not the registered identity of " +
                             node_label(failed));
  }

  const std::size_t g = state.group_index_of(failed);
  const GroupRecord& group = state.registry().groups[g];
  const std::size_t gamma = group.gamma();
  std::vector<NodeId> survivors;
  for (NodeId id : group.members) {
    if (id == failed) continue;
    if (state.node(id).failed) {
      throw InsufficientPointsError("group G" + std::to_string(group.id) + " has a second failed member " +
                                    node_label(id) + "; local repair impossible, use global recovery");
    }
    survivors.push_back(id);
  }

  RepairTrace trace;
  const std::string me = node_label(failed);
  auto emit = [&](EventType type, std::string from, std::string to, std::string summary,
                  std::vector<CarriedValue> carried = {}) {
    trace.events.push_back(
        {trace.events.size() + 1, type, std::move(from), std::move(to), std::move(summary), std::move(carried)});
  };

  // Every surviving member must authorize the request.
  for (NodeId id : survivors) emit(EventType::kRequest, me, node_label(id), "repair " + me + " in G" + std::to_string(group.id));
  for (NodeId id : survivors) {
    if (state.refuses_ack(id)) {
      throw AuthorizationError(node_label(id) + " did not authorize the repair of " + me);
    }
    emit(EventType::kAck, node_label(id), me, "authorize " + me);
  }

  // Blind lookup: the holder matches only the digest.
  emit(EventType::kBroadcast, me, "*", "lookup digest=" + to_hex(group.digest));
  const HolderResponse holder = lookup_holder(state, group.digest);
  emit(EventType::kHolderResponse, node_label(holder.holder), me, redacted_share("subshare", holder.subshare.x),
       {{Carried::kSubshareY, holder.subshare.y}});

  std::vector<Share> subshares{holder.subshare};
  std::vector<Share> points;
  for (NodeId id : survivors) {
    const NodeStore& member = state.node(id);
    if (!member.primary || !member.subshare) {
      throw InsufficientPointsError(node_label(id) + " has no data to contribute");
    }
    points.push_back(*member.primary);
    subshares.push_back(*member.subshare);
    emit(EventType::kContribution, node_label(id), me,
         redacted_share("share", member.primary->x) + "; " + redacted_share("subshare", member.subshare->x),
         {{Carried::kPrimaryY, member.primary->y}, {Carried::kSubshareY, member.subshare->y}});
  }

  // Proposer-side computation.
  const Element y_lambda = shamir::recover(field, subshares, gamma);
  const repair::WeakRedundancy weak{group.x_lambda, y_lambda};
  const Element failed_x = state.registry().participants[failed - 1].x;
  const Element repaired_y = repair::repair_share(field, gamma, points, weak, failed_x);
  emit(EventType::kInterpolate, me, me,
       "sub-secret from " + std::to_string(subshares.size()) + " subshares; repairing function from " +
           std::to_string(points.size() + 1) + " points");
  emit(EventType::kDelivery, me, me, "share x=" + algebra::to_string(failed_x) + " y=" + algebra::to_string(repaired_y),
       {{Carried::kRepairedY, repaired_y}});

  const std::size_t position =
      static_cast<std::size_t>(std::find(group.members.begin(), group.members.end(), failed) - group.members.begin());
  const Share restored = repair::restore_subshare(field, gamma, subshares, group.sss_x[position]);
  emit(EventType::kRestore, me, me, redacted_share("subshare", restored.x),
       {{Carried::kRestoredSubshareY, restored.y}});

  target.primary = Share{failed_x, repaired_y};
  target.subshare = restored;
  target.failed = false;
  return {*target.primary, restored, std::move(trace)};
}

Element recover_secret(const SystemState& state, std::span<const NodeId> participants) {
  const std::set<NodeId> unique(participants.begin(), participants.end());
  std::vector<Share> shares;
  for (NodeId id : unique) {
    const NodeStore& node = state.node(id);
    if (node.failed || !node.primary) throw ConfigurationError(node_label(id) + " is not live");
    shares.push_back(*node.primary);
  }
  return shamir::recover(state.field(), shares, state.registry().k);
}

std::size_t total_private_elements(const SystemState& state) {
  std::size_t total = 0;
  for (const auto& node : state.nodes()) total += node.private_element_count();
  return total;
}

}  // namespace lrss::protocol
