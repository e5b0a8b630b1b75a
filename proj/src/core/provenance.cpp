#include "core/provenance.hpp"

#include <fstream>

#include "core/error.hpp"
#include "core/hash.hpp"
#include "core/version.hpp"

namespace df {

nlohmann::json make_provenance(
    uint64_t seed,
    const std::vector<std::pair<std::string, std::filesystem::path>>& inputs) {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["seed"] = seed;
  nlohmann::json hashes = nlohmann::json::object();
  for (const auto& [name, path] : inputs) hashes[name] = hash_file(path);
  j["input_hashes"] = hashes;
  return j;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_json(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot write JSON file: " + path.string());
  out << dump_json(j);
  if (!out) fail(ErrorCode::Io, "failed writing JSON file: " + path.string());
}

}  // namespace df
