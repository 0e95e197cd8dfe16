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


#include "lrss/state_io.hpp"

#include <fstream>
#include <sstream>

#include "lrss/error.hpp"

namespace lrss::protocol {

using nlohmann::json;

namespace {

std::string dec(Element e) { return algebra::to_string(e); }

Element element_from(const json& j, const algebra::PrimeField& field) {
  return field.parse(j.get<std::string>());
}

json share_to_json(const Share& s) { return json{{"x", dec(s.x)}, {"y", dec(s.y)}}; }

Share share_from_json(const json& j, const algebra::PrimeField& field) {
  return {element_from(j.at("x"), field), element_from(j.at("y"), field)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("short write to " + path.string());
}

json parse_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigurationError("malformed " + path.string() + ": " + e.what());
  }
}

}  // namespace

json registry_to_json(const PublicRegistry& registry) {
  json participants = json::array();
  for (const auto& p : registry.participants) {
    participants.push_back({{"id", p.id}, {"x", dec(p.x)}, {"hw_id", format_hw_id(p.hw_id)}});
  }
  json groups = json::array();
  for (const auto& g : registry.groups) {
    json sss_x = json::array();
    for (Element x : g.sss_x) sss_x.push_back(dec(x));
    groups.push_back({{"id", g.id},
                      {"members", g.members},
                      {"x_lambda", dec(g.x_lambda)},
                      {"sss_x", sss_x},
                      {"digest_hex", to_hex(g.digest)}});
  }
  return json{{"modulus", registry.modulus}, {"k", registry.k},       {"n", registry.n},
              {"m", registry.m},             {"participants", participants}, {"groups", groups}};
}

PublicRegistry registry_from_json(const json& j) {
  try {
    PublicRegistry r;
    r.modulus = j.at("modulus").get<std::uint64_t>();
    r.k = j.at("k").get<std::size_t>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    const algebra::PrimeField field(r.modulus);
    for (const auto& p : j.at("participants")) {
      r.participants.push_back(
          {p.at("id").get<NodeId>(), element_from(p.at("x"), field), parse_hw_id(p.at("hw_id").get<std::string>())});
    }
    for (const auto& g : j.at("groups")) {
      GroupRecord rec;
      rec.id = g.at("id").get<std::size_t>();
      rec.members = g.at("members").get<std::vector<NodeId>>();
      rec.x_lambda = element_from(g.at("x_lambda"), field);
      for (const auto& x : g.at("sss_x")) rec.sss_x.push_back(element_from(x, field));
      rec.digest = digest_from_hex(g.at("digest_hex").get<std::string>());
      r.groups.push_back(std::move(rec));
    }
    return r;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("malformed registry: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigurationError(std::string("malformed registry: ") + e.what());
  }
}

json node_to_json(const NodeStore& node) {
  json hosted = json::array();
  for (const auto& h : node.hosted) {
    hosted.push_back({{"digest_hex", to_hex(h.digest)}, {"subshare", share_to_json(h.subshare)}});
  }
  return json{{"id", node.identity.node_id},
              {"y", node.primary ? json(dec(node.primary->y)) : json(nullptr)},
              {"sss_subshare", node.subshare ? share_to_json(*node.subshare) : json(nullptr)},
              {"hosted", hosted},
              {"failed", node.failed}};
}

NodeStore node_from_json(const json& j, const PublicRegistry& registry) {
  try {
    const algebra::PrimeField field(registry.modulus);
    NodeStore node;
    const NodeId id = j.at("id").get<NodeId>();
    if (id < 1 || id > registry.participants.size()) throw ConfigurationError("node id out of range");
    const auto& rec = registry.participants[id - 1];
    node.identity = {id, rec.hw_id};
    if (!j.at("y").is_null()) node.primary = Share{rec.x, element_from(j.at("y"), field)};
    if (!j.at("sss_subshare").is_null()) node.subshare = share_from_json(j.at("sss_subshare"), field);
    for (const auto& h : j.at("hosted")) {
      node.hosted.push_back(
          {digest_from_hex(h.at("digest_hex").get<std::string>()), share_from_json(h.at("subshare"), field)});
    }
    node.failed = j.value("failed", false);
    return node;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("malformed node store: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigurationError(std::string("malformed node store: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::filesystem::path registry_path(const std::filesystem::path& dir) { return dir / "registry.json"; }

std::filesystem::path node_path(const std::filesystem::path& dir, NodeId id) {
  return dir / "nodes" / (node_label(id) + ".json");
}

void save_state(const std::filesystem::path& dir, const SystemState& state) {
  std::error_code ec;
  std::filesystem::create_directories(dir / "nodes", ec);
  if (ec) throw IoError("cannot create " + (dir / "nodes").string() + ": " + ec.message());
  write_file(registry_path(dir), dump(registry_to_json(state.registry())));
  for (const auto& node : state.nodes()) write_file(node_path(dir, node.identity.node_id), dump(node_to_json(node)));
}

SystemState load_state(const std::filesystem::path& dir) {
  if (!std::filesystem::exists(registry_path(dir))) throw IoError("no registry at " + registry_path(dir).string());
  PublicRegistry registry = registry_from_json(parse_file(registry_path(dir)));
  std::vector<NodeStore> nodes;
  for (NodeId id = 1; id <= registry.n; ++id) nodes.push_back(node_from_json(parse_file(node_path(dir, id)), registry));
  return SystemState(std::move(registry), std::move(nodes));
}

}  // namespace lrss::protocol
