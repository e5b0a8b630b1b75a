#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace df {

// Every JSON document the toolkit emits starts from this header so a run
// can be reproduced: tool version, the seed, and a content hash per input.
nlohmann::json make_provenance(
    uint64_t seed,
    const std::vector<std::pair<std::string, std::filesystem::path>>& inputs);

// Canonical serialization used for all emitted JSON (2-space indent,
// sorted keys via nlohmann's ordered object, trailing newline).
void write_json(const nlohmann::json& j, const std::filesystem::path& path);

std::string dump_json(const nlohmann::json& j);

}  // namespace df
