#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace df {

enum class Domain { Source, Target };

const char* domain_name(Domain d);

struct ManifestEntry {
  std::string image_id;
  Domain domain = Domain::Target;
  bool labeled = false;
  // Paths relative to the manifest file; empty = not provided.
  std::string image;
  std::string disparity;
  std::string label;
  std::string prob;
  std::string feature;
};

struct DatasetManifest {
  uint16_t num_classes = 0;
  uint16_t ignore_index = 255;
  std::optional<uint64_t> seed;  // seed recorded by the tool that wrote it
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;  // directory of the manifest file

  std::filesystem::path resolve(const std::string& rel) const {
    return base_dir / rel;
  }
  const ManifestEntry& find(const std::string& image_id) const;
};

// Parses and fully validates a manifest: unique ids, valid domain tags,
// label paths on labeled entries, every referenced file resolvable.
DatasetManifest load_manifest(const std::filesystem::path& path);

}  // namespace df
