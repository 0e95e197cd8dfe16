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

#include <filesystem>
#include <string>

#include "json.hpp"

#include "lrss/protocol.hpp"

// Flat-file persistence of a SystemState.
//
//   <dir>/registry.json      public registry
//   <dir>/nodes/P<id>.json   one private store per node
//
// Field elements are decimal strings, digests lowercase hex. Output is
// byte-stable for equal states.
namespace lrss::protocol {

[[nodiscard]] nlohmann::json registry_to_json(const PublicRegistry& registry);
[[nodiscard]] PublicRegistry registry_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json node_to_json(const NodeStore& node);
[[nodiscard]] NodeStore node_from_json(const nlohmann::json& j, const PublicRegistry& registry);

[[nodiscard]] std::string dump(const nlohmann::json& j);

/// IoError on filesystem failures; ConfigurationError on malformed files.
void save_state(const std::filesystem::path& dir, const SystemState& state);
[[nodiscard]] SystemState load_state(const std::filesystem::path& dir);

[[nodiscard]] std::filesystem::path registry_path(const std::filesystem::path& dir);
[[nodiscard]] std::filesystem::path node_path(const std::filesystem::path& dir, NodeId id);

}  // namespace lrss::protocol
