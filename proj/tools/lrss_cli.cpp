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


// lrss: operator CLI for grouped, locally repairable secret sharing.
//
// Exit codes: 0 success, 2 usage/config, 3 IO, 4 protocol or math error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrss/error.hpp"
#include "lrss/protocol.hpp"
#include "lrss/state_io.hpp"
#include "lrss/threat.hpp"

namespace {

using nlohmann::json;
using namespace lrss;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitProtocol = 4;

struct RunConfig {
  std::string state_dir = "lrss-state";
  std::string format = "text";
  std::size_t k = 8;
  std::size_t n = 12;
  std::size_t m = 3;
  std::uint64_t modulus = algebra::kMersenne31;
  std::uint64_t secret = 0;
  std::optional<std::uint64_t> seed;
  bool anti_reciprocal = false;
  std::string placement = "random";
  std::string node;
  std::vector<std::string> participants;
  std::string mode = "analytic";
  std::vector<double> q_list{0.3, 0.5, 0.7};
  std::size_t trials = 100000;
  std::string fixture = "state";

  [[nodiscard]] bool structured() const { return format == "json"; }
};

std::string fmt_double(double v) { return json(v).dump(); }

void emit(const RunConfig& cfg, const json& record, const std::string& text) {
  if (cfg.structured()) {
    std::cout << record.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
}

protocol::NodeId parse_node(const std::string& raw) {
  std::string s = raw;
  if (!s.empty() && (s[0] == 'P' || s[0] == 'p')) s.erase(0, 1);
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used == s.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw ConfigurationError("bad node id '" + raw + "'");
}

std::uint64_t require_seed(const RunConfig& cfg, const char* what) {
  if (!cfg.seed) throw ConfigurationError(std::string(what) + " is randomized; --seed is required");
  return *cfg.seed;
}

// Enumeration fixtures are combinatorial: their result does not depend on
// the seed, so it defaults to 0 there.
protocol::SetupParams setup_params(const RunConfig& cfg, bool seed_optional = false) {
  protocol::SetupParams p;
  p.k = cfg.k;
  p.n = cfg.n;
  p.m = cfg.m;
  p.modulus = cfg.modulus;
  p.secret = cfg.secret;
  p.seed = seed_optional ? cfg.seed.value_or(0) : require_seed(cfg, "setup");
  p.anti_reciprocal = cfg.anti_reciprocal;
  if (cfg.placement == "random") {
    p.placement = protocol::Placement::kRandom;
  } else if (cfg.placement == "reciprocal") {
    p.placement = protocol::Placement::kFixed;
    p.fixed_holders = threat::reciprocal_holders(cfg.n, cfg.m);
  } else if (cfg.placement == "none") {
    p.placement = protocol::Placement::kNone;
  } else {
    throw ConfigurationError("unknown placement '" + cfg.placement + "'");
  }
  return p;
}

std::string join_ids(const std::vector<protocol::NodeId>& ids) {
  std::string out;
  for (auto id : ids) {
    if (!out.empty()) out += ',';
    out += protocol::node_label(id);
  }
  return out;
}

int cmd_setup(const RunConfig& cfg) {
  const protocol::SystemState state = protocol::system_setup(setup_params(cfg));
  protocol::save_state(cfg.state_dir, state);
  const auto& reg = state.registry();
  json groups = json::array();
  std::string text = "setup: k=" + std::to_string(reg.k) + " n=" + std::to_string(reg.n) + " m=" +
                     std::to_string(reg.m) + " modulus=" + std::to_string(reg.modulus) + " state=" + cfg.state_dir;
  for (const auto& g : reg.groups) {
    groups.push_back({{"id", g.id}, {"members", g.members}, {"digest_hex", protocol::to_hex(g.digest)}});
    text += "\n  G" + std::to_string(g.id) + " members=" + join_ids(g.members) + " digest=" + protocol::to_hex(g.digest);
  }
  emit(cfg,
       {{"record", "setup"}, {"k", reg.k}, {"n", reg.n}, {"m", reg.m}, {"modulus", reg.modulus},
        {"state_dir", cfg.state_dir}, {"groups", groups}},
       text);
  return kExitOk;
}

int cmd_fail(const RunConfig& cfg) {
  protocol::SystemState state = protocol::load_state(cfg.state_dir);
  const protocol::NodeId id = parse_node(cfg.node);
  protocol::fail_node(state, id);
  protocol::save_state(cfg.state_dir, state);
  emit(cfg, {{"record", "fail"}, {"node", id}}, "failed " + protocol::node_label(id));
  return kExitOk;
}

int cmd_repair(const RunConfig& cfg) {
  protocol::SystemState state = protocol::load_state(cfg.state_dir);
  const protocol::NodeId id = parse_node(cfg.node);
  // The replacement server presents the failed node's hardware identity.
  const protocol::NodeIdentity proposer = state.node(id).identity;
  const protocol::RepairResult result = protocol::request_repair(state, proposer, id);
  protocol::save_state(cfg.state_dir, state);
  if (cfg.structured()) {
    for (const auto& e : result.trace.events) {
      std::cout << json{{"record", "trace"},
                        {"seq", e.seq},
                        {"type", protocol::event_name(e.type)},
                        {"from", e.from},
                        {"to", e.to},
                        {"summary", e.summary}}
                       .dump()
                << '\n';
    }
    std::cout << json{{"record", "repair"}, {"node", id}, {"events", result.trace.events.size()}}.dump() << '\n';
  } else {
    std::cout << result.trace.to_text();
    std::cout << "repaired " << protocol::node_label(id) << '\n';
  }
  return kExitOk;
}

int cmd_recover(const RunConfig& cfg) {
  const protocol::SystemState state = protocol::load_state(cfg.state_dir);
  std::vector<protocol::NodeId> ids;
  for (const auto& p : cfg.participants) ids.push_back(parse_node(p));
  const algebra::Element secret = protocol::recover_secret(state, ids);
  emit(cfg, {{"record", "recover"}, {"secret", algebra::to_string(secret)}}, algebra::to_string(secret));
  return kExitOk;
}

int attack_analytic(const RunConfig& cfg) {
  for (double q : cfg.q_list) {
    const double p1 = threat::p1_exact(q);
    const double p2 = threat::p2_exact(q);
    emit(cfg,
         {{"q", q}, {"p1_exact", p1}, {"p2_exact", p2}, {"p_empirical", nullptr}, {"trials", 0}, {"seed", nullptr}},
         "q=" + fmt_double(q) + " p1=" + fmt_double(p1) + " p2=" + fmt_double(p2));
  }
  return kExitOk;
}

int attack_mc(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg, "Monte Carlo");
  for (double q : cfg.q_list) {
    for (threat::Scheme scheme : {threat::Scheme::kBaseline4, threat::Scheme::kSss5}) {
      const double p = threat::mc_group_compromise({q, cfg.trials, seed}, scheme);
      const double p1 = threat::p1_exact(q);
      const double p2 = threat::p2_exact(q);
      emit(cfg,
           {{"q", q},
            {"scheme", threat::scheme_name(scheme)},
            {"p1_exact", p1},
            {"p2_exact", p2},
            {"p_empirical", p},
            {"trials", cfg.trials},
            {"seed", seed}},
           "q=" + fmt_double(q) + " scheme=" + std::string(threat::scheme_name(scheme)) + " p_empirical=" +
               fmt_double(p) + " p1=" + fmt_double(p1) + " p2=" + fmt_double(p2) + " trials=" +
               std::to_string(cfg.trials) + " seed=" + std::to_string(seed));
    }
  }
  return kExitOk;
}

int attack_enum(const RunConfig& cfg) {
  if (cfg.fixture == "state" && cfg.anti_reciprocal) {
    // Sweep every anti-reciprocal placement of the configured system.
    protocol::SetupParams base = setup_params(cfg, true);
    if (base.n > threat::kMaxEnumerationNodes) throw EnumerationRefusedError("system too large to enumerate");
    const threat::PlacementSweep sweep = threat::sweep_placements(base, true);
    std::vector<protocol::NodeId> witness = sweep.witness;
    emit(cfg,
         {{"placement_mode", "anti-reciprocal-sweep"},
          {"min_compromise_size", sweep.min_over_placements},
          {"witness_subset", witness},
          {"placements_checked", sweep.placements_checked},
          {"max_over_placements", sweep.max_over_placements},
          {"worst_holders", sweep.worst_holders}},
         "placement_mode=anti-reciprocal-sweep min_compromise_size=" + std::to_string(sweep.min_over_placements) +
             " witness=" + join_ids(witness) + " placements=" + std::to_string(sweep.placements_checked) +
             " max=" + std::to_string(sweep.max_over_placements));
    return kExitOk;
  }

  std::optional<protocol::SystemState> state;
  std::string mode = cfg.fixture;
  if (cfg.fixture == "state") {
    state.emplace(protocol::load_state(cfg.state_dir));
  } else {
    RunConfig fixture_cfg = cfg;
    fixture_cfg.placement = cfg.fixture;
    state.emplace(protocol::system_setup(setup_params(fixture_cfg, cfg.fixture != "random")));
  }
  const threat::EnumerationResult r = threat::min_compromise_size(*state);
  emit(cfg, {{"placement_mode", mode}, {"min_compromise_size", r.min_compromise_size}, {"witness_subset", r.witness}},
       "placement_mode=" + mode + " min_compromise_size=" + std::to_string(r.min_compromise_size) +
           " witness=" + join_ids(r.witness));
  return kExitOk;
}

int cmd_attack(const RunConfig& cfg) {
  if (cfg.mode == "analytic") return attack_analytic(cfg);
  if (cfg.mode == "mc") return attack_mc(cfg);
  if (cfg.mode == "enum") return attack_enum(cfg);
  throw ConfigurationError("unknown attack mode '" + cfg.mode + "'");
}

int report(const Error& e, int code) {
  std::cerr << e.name() << ": " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grouped threshold secret sharing with local share repair"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  if (const char* env = std::getenv("LRSS_STATE_DIR")) cfg.state_dir = env;

  app.add_option("--state", cfg.state_dir, "State directory (env LRSS_STATE_DIR)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_system_flags = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Recovery threshold");
    sub->add_option("--n", cfg.n, "Number of participants");
    sub->add_option("--m", cfg.m, "Number of groups");
    sub->add_option("--modulus", cfg.modulus, "Prime modulus");
    sub->add_option("--secret", cfg.secret, "Secret as a field element");
    sub->add_option("--seed", cfg.seed, "Master seed");
    sub->add_flag("--anti-reciprocal", cfg.anti_reciprocal, "Never let two groups host each other's sub-share");
  };

  CLI::App* setup = app.add_subcommand("setup", "Build a system and write its state files");
  add_system_flags(setup);
  setup->add_option("--placement", cfg.placement, "External sub-share placement")
      ->check(CLI::IsMember({"random", "reciprocal", "none"}));

  CLI::App* fail = app.add_subcommand("fail", "Erase a node's private data");
  fail->add_option("--node", cfg.node, "Node id (e.g. 3 or P3)")->required();

  CLI::App* repair = app.add_subcommand("repair", "Repair a failed node and print the trace");
  repair->add_option("--node", cfg.node, "Node id (e.g. 3 or P3)")->required();

  CLI::App* recover = app.add_subcommand("recover", "Recover the secret from live participants");
  recover->add_option("--participants", cfg.participants, "Participant ids")->delimiter(',')->required();

  CLI::App* attack = app.add_subcommand("attack", "Threat analyses");
  add_system_flags(attack);
  attack->add_option("--mode", cfg.mode, "analytic | mc | enum")->check(CLI::IsMember({"analytic", "mc", "enum"}));
  attack->add_option("--q", cfg.q_list, "Compromise probabilities")->delimiter(',');
  attack->add_option("--trials", cfg.trials, "Monte Carlo trials");
  attack->add_option("--fixture", cfg.fixture, "enum source: state | reciprocal | none | random")
      ->check(CLI::IsMember({"state", "reciprocal", "none", "random"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*setup) return cmd_setup(cfg);
    if (*fail) return cmd_fail(cfg);
    if (*repair) return cmd_repair(cfg);
    if (*recover) return cmd_recover(cfg);
    if (*attack) return cmd_attack(cfg);
  } catch (const ConfigurationError& e) {
    return report(e, kExitUsage);
  } catch (const EnumerationRefusedError& e) {
    return report(e, kExitUsage);
  } catch (const IoError& e) {
    return report(e, kExitIo);
  } catch (const Error& e) {
    return report(e, kExitProtocol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  }
  return kExitUsage;
}
