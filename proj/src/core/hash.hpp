#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace df {

uint64_t fnv1a64(const void* data, size_t size);

// 16-hex-digit content hash of a file, used for output provenance.
std::string hash_file(const std::filesystem::path& path);

std::string hash_to_hex(uint64_t h);

}  // namespace df
