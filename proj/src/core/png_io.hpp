#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "core/raster.hpp"

namespace df {

// Thin libpng wrappers covering exactly the formats this toolkit emits:
// 16-bit grayscale (disparity), 8-bit gray/RGB (images), 8-bit indexed
// (labels, masks). Readers are strict; anything else is a format error.

struct Gray16Png {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<uint16_t> data;
};

Gray16Png read_png_gray16(const std::filesystem::path& path);
void write_png_gray16(const std::filesystem::path& path, uint32_t width,
                      uint32_t height, const std::vector<uint16_t>& data);

// 8-bit image, palette expanded to RGB. channels is 1 or 3.
ImageRaster read_png_image(const std::filesystem::path& path);
void write_png_image(const ImageRaster& img, const std::filesystem::path& path);

// 8-bit single-channel indices (grayscale or palette PNG, palette kept).
struct IndexPng {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<uint8_t> data;
};

IndexPng read_png_indices(const std::filesystem::path& path);
void write_png_indexed(const std::filesystem::path& path, uint32_t width,
                       uint32_t height, const std::vector<uint8_t>& data);

// Deterministic 256-entry palette used for every indexed PNG we write.
std::array<std::array<uint8_t, 3>, 256> label_palette();

}  // namespace df
