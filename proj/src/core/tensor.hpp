#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace df {

// Dense row-major tensor. Arithmetic runs in double; the on-disk "DFT1"
// format stores float32 little-endian:
//   magic "DFT1" | u32 rank | u32 dims[rank] | f32 payload (row-major)
struct Tensor {
  std::vector<uint32_t> dims;
  std::vector<double> data;

  static Tensor create(std::vector<uint32_t> dims, std::vector<double> data);
  static Tensor zeros(std::vector<uint32_t> dims);

  uint32_t rank() const { return static_cast<uint32_t>(dims.size()); }
  size_t size() const { return data.size(); }
};

Tensor read_tensor(const std::filesystem::path& path);
void write_tensor(const Tensor& t, const std::filesystem::path& path);

}  // namespace df
