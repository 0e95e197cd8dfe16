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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrss/field.hpp"
#include "lrss/repair_group.hpp"
#include "lrss/shamir.hpp"

// Deterministic simulation of the storage network: setup, blind placement
// of each group's external sub-share, digest-broadcast lookup, authorized
// single-failure repair and threshold recovery.
//
// Nodes are plain records driven by one single-threaded loop; a broadcast
// is an iteration over nodes. Every randomized step draws from a named
// sub-stream of the master seed.
namespace lrss::protocol {

using algebra::Element;
using shamir::Share;

using NodeId = std::size_t;  // 1-based participant index

/// 48-bit hardware identifier (MAC-like).
struct HwId {
  std::uint64_t value = 0;
  friend auto operator<=>(const HwId&, const HwId&) = default;
};

[[nodiscard]] std::string format_hw_id(HwId id);  // "02:1a:..:ff"
[[nodiscard]] HwId parse_hw_id(const std::string& text);

using Digest = std::array<std::uint8_t, 32>;

[[nodiscard]] std::string to_hex(const Digest& d);
[[nodiscard]] Digest digest_from_hex(const std::string& hex);

/// SHA-256 over the member hw_ids sorted ascending, each as 6 big-endian
/// bytes. Order-insensitive.
[[nodiscard]] Digest hash_identity(std::span<const HwId> member_hw_ids);

struct NodeIdentity {
  NodeId node_id = 0;
  HwId hw_id;
  friend bool operator==(const NodeIdentity&, const NodeIdentity&) = default;
};

struct ParticipantRecord {
  NodeId id = 0;
  Element x;
  HwId hw_id;
  friend bool operator==(const ParticipantRecord&, const ParticipantRecord&) = default;
};

struct GroupRecord {
  std::size_t id = 0;
  std::vector<NodeId> members;
  Element x_lambda;
  std::vector<Element> sss_x;  // gamma+1 entries; the last is the external position
  Digest digest{};

  [[nodiscard]] std::size_t gamma() const noexcept { return members.size(); }
  friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

/// Everything that is public. Holds no y-values, no sub-shares and no
/// holder locations.
struct PublicRegistry {
  std::uint64_t modulus = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<ParticipantRecord> participants;
  std::vector<GroupRecord> groups;

  friend bool operator==(const PublicRegistry&, const PublicRegistry&) = default;
};

/// An external sub-share hosted for some group, known only by its digest.
struct HostedRecord {
  Digest digest{};
  Share subshare;
  friend bool operator==(const HostedRecord&, const HostedRecord&) = default;
};

struct NodeStore {
  NodeIdentity identity;
  std::optional<Share> primary;
  std::optional<Share> subshare;  // own group's sub-share
  std::vector<HostedRecord> hosted;
  bool failed = false;

  /// Private field elements held: primary y, own sub-share y, hosted y's.
  [[nodiscard]] std::size_t private_element_count() const noexcept;
  friend bool operator==(const NodeStore&, const NodeStore&) = default;
};

class SystemState {
 public:
  SystemState(PublicRegistry registry, std::vector<NodeStore> nodes);

  [[nodiscard]] const PublicRegistry& registry() const noexcept { return registry_; }
  [[nodiscard]] const algebra::PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] std::span<const NodeStore> nodes() const noexcept { return nodes_; }

  /// Throws ConfigurationError for an unknown id.
  [[nodiscard]] const NodeStore& node(NodeId id) const;
  [[nodiscard]] NodeStore& node(NodeId id);

  /// 0-based index into registry().groups of the group containing `id`.
  [[nodiscard]] std::size_t group_index_of(NodeId id) const;
  [[nodiscard]] const GroupRecord& group_of(NodeId id) const { return registry_.groups[group_index_of(id)]; }

  /// Simulates a member refusing to authorize repairs. Runtime only; not
  /// persisted.
  void set_ack_refusal(NodeId id, bool refuse);
  [[nodiscard]] bool refuses_ack(NodeId id) const;

  friend bool operator==(const SystemState& a, const SystemState& b) {
    return a.registry_ == b.registry_ && a.nodes_ == b.nodes_;
  }

 private:
  PublicRegistry registry_;
  algebra::PrimeField field_;
  std::vector<NodeStore> nodes_;
  std::vector<bool> refuse_ack_;
};

enum class Placement {
  kRandom,  // uniform over admissible holders
  kFixed,   // SetupParams::fixed_holders, validated
  kNone,    // external sub-shares are not placed anywhere
};

struct SetupParams {
  std::size_t k = 8;
  std::size_t n = 12;
  std::size_t m = 3;
  std::uint64_t modulus = algebra::kMersenne31;
  std::uint64_t secret = 0;
  std::uint64_t seed = 0;
  bool anti_reciprocal = false;
  Placement placement = Placement::kRandom;
  std::vector<NodeId> fixed_holders;  // one per group, for Placement::kFixed
};

/// Global sharing, grouping, per-group repairing function, weak redundancy,
/// second sharing and external placement. Deterministic in the seed.
[[nodiscard]] SystemState system_setup(const SetupParams& params);

/// Nodes that may host `group_index`'s external sub-share: every live node
/// outside the group, minus (with anti_reciprocal) members of any group
/// whose own external sub-share already sits inside this group.
[[nodiscard]] std::vector<NodeId> admissible_holders(const SystemState& state, std::size_t group_index,
                                                     bool anti_reciprocal);

/// Draws a holder uniformly from admissible_holders and stores the record
/// there. The group keeps no reference to the holder. PlacementError if
/// none is admissible.
NodeId place_external(SystemState& state, std::size_t group_index, const Share& subshare, RandomStream& rng,
                      bool anti_reciprocal);

/// As place_external with a chosen holder; PlacementError if inadmissible.
NodeId place_external_at(SystemState& state, std::size_t group_index, const Share& subshare, NodeId holder,
                         bool anti_reciprocal);

struct HolderResponse {
  NodeId holder = 0;
  Share subshare;
};

/// Every live node compares the digest against its hosted records.
/// HolderLostError with no responder, IntegrityError with several.
[[nodiscard]] HolderResponse lookup_holder(const SystemState& state, const Digest& digest);

enum class EventType { kRequest, kAck, kBroadcast, kHolderResponse, kContribution, kInterpolate, kDelivery, kRestore };

[[nodiscard]] std::string_view event_name(EventType t) noexcept;

/// What private value a message physically carries.
enum class Carried { kPrimaryY, kSubshareY, kRepairedY, kRestoredSubshareY };

struct CarriedValue {
  Carried kind;
  Element value;
};

struct TraceEvent {
  std::size_t seq = 0;
  EventType type = EventType::kRequest;
  std::string from;
  std::string to;  // "P<id>", or "*" for a broadcast
  std::string summary;
  std::vector<CarriedValue> carried;
};

struct RepairTrace {
  std::vector<TraceEvent> events;

  /// `seq | type | from | to | payload-summary`, one event per line. y-values
  /// appear only on delivery lines.
  [[nodiscard]] std::string to_text() const;
};

struct RepairResult {
  Share repaired;
  Share restored_subshare;
  RepairTrace trace;
};

/// Erases all private data of a node; its identity stays registered.
void fail_node(SystemState& state, NodeId id);

/// Repairs `failed` on behalf of `proposer`, the replacement server holding
/// the failed node's hw_id.
///
/// Errors: AuthorizationError on hw_id mismatch or a withheld member ack;
/// InsufficientPointsError on a second failure in the group;
/// HolderLostError / IntegrityError from the digest lookup;
/// ConfigurationError if `failed` has not failed.
RepairResult request_repair(SystemState& state, const NodeIdentity& proposer, NodeId failed);

/// Shamir recovery over the listed live participants' primary shares.
[[nodiscard]] Element recover_secret(const SystemState& state, std::span<const NodeId> participants);

[[nodiscard]] std::size_t total_private_elements(const SystemState& state);

/// Node label used in traces.
[[nodiscard]] std::string node_label(NodeId id);

}  // namespace lrss::protocol
