#include "core/manifest.hpp"

#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "core/error.hpp"

namespace df {

using nlohmann::json;

const char* domain_name(Domain d) {
  return d == Domain::Source ? "source" : "target";
}

const ManifestEntry& DatasetManifest::find(const std::string& image_id) const {
  for (const auto& e : entries) {
    if (e.image_id == image_id) return e;
  }
  fail(ErrorCode::Validation, "image_id not in manifest: " + image_id);
}

namespace {

std::string get_path_field(const json& e, const char* key) {
  if (!e.contains(key) || e[key].is_null()) return {};
  if (!e[key].is_string())
    fail(ErrorCode::Format, std::string("manifest entry field '") + key +
                                "' must be a string path");
  return e[key].get<std::string>();
}

void check_resolvable(const DatasetManifest& m, const std::string& id,
                      const char* kind, const std::string& rel) {
  if (rel.empty()) return;
  auto p = m.resolve(rel);
  if (!std::filesystem::exists(p))
    fail(ErrorCode::Validation, "entry '" + id + "': " + kind + " file not found: " +
                                    p.string());
}

}  // namespace

DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open manifest: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::Format, "manifest is not valid JSON (" + path.string() +
                                "): " + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::Format, "manifest root must be an object");

  DatasetManifest m;
  m.base_dir = path.has_parent_path() ? path.parent_path()
                                      : std::filesystem::path(".");
  if (!j.contains("num_classes") || !j["num_classes"].is_number_unsigned())
    fail(ErrorCode::Format, "manifest requires unsigned 'num_classes'");
  uint64_t nc = j["num_classes"].get<uint64_t>();
  if (nc < 1 || nc > 255)
    fail(ErrorCode::Validation, "num_classes must be in [1, 255]");
  m.num_classes = static_cast<uint16_t>(nc);

  m.ignore_index = 255;
  if (j.contains("ignore_index")) {
    if (!j["ignore_index"].is_number_unsigned())
      fail(ErrorCode::Format, "'ignore_index' must be unsigned");
    uint64_t ig = j["ignore_index"].get<uint64_t>();
    if (ig > 255) fail(ErrorCode::Validation, "ignore_index must fit in 8 bits");
    m.ignore_index = static_cast<uint16_t>(ig);
  }
  if (m.ignore_index < m.num_classes)
    fail(ErrorCode::Validation,
         "ignore_index must not collide with a class index");

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      fail(ErrorCode::Format, "'seed' must be unsigned");
    m.seed = j["seed"].get<uint64_t>();
  }

  if (!j.contains("entries") || !j["entries"].is_array())
    fail(ErrorCode::Format, "manifest requires an 'entries' array");

  std::unordered_set<std::string> seen;
  for (const auto& e : j["entries"]) {
    if (!e.is_object()) fail(ErrorCode::Format, "manifest entries must be objects");
    ManifestEntry entry;
    if (!e.contains("image_id") || !e["image_id"].is_string() ||
        e["image_id"].get<std::string>().empty())
      fail(ErrorCode::Format, "manifest entry requires non-empty 'image_id'");
    entry.image_id = e["image_id"].get<std::string>();
    if (!seen.insert(entry.image_id).second)
      fail(ErrorCode::Validation, "duplicate image_id: " + entry.image_id);

    std::string dom = e.contains("domain") && e["domain"].is_string()
                          ? e["domain"].get<std::string>()
                          : "target";
    if (dom == "source") {
      entry.domain = Domain::Source;
    } else if (dom == "target") {
      entry.domain = Domain::Target;
    } else {
      fail(ErrorCode::Validation, "entry '" + entry.image_id +
                                      "': domain must be 'source' or 'target'");
    }
    entry.labeled = e.contains("labeled") && e["labeled"].is_boolean()
                        ? e["labeled"].get<bool>()
                        : false;
    entry.image = get_path_field(e, "image");
    entry.disparity = get_path_field(e, "disparity");
    entry.label = get_path_field(e, "label");
    entry.prob = get_path_field(e, "prob");
    entry.feature = get_path_field(e, "feature");

    if (entry.labeled && entry.label.empty())
      fail(ErrorCode::Validation,
           "entry '" + entry.image_id + "': labeled entry requires a label path");
    m.entries.push_back(std::move(entry));
  }

  for (const auto& entry : m.entries) {
    check_resolvable(m, entry.image_id, "image", entry.image);
    check_resolvable(m, entry.image_id, "disparity", entry.disparity);
    check_resolvable(m, entry.image_id, "label", entry.label);
    check_resolvable(m, entry.image_id, "prob", entry.prob);
    check_resolvable(m, entry.image_id, "feature", entry.feature);
  }
  return m;
}

}  // namespace df
