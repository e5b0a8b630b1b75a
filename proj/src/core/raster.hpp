#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace df {

// All rasters are row-major, top-left origin, immutable after construction
// by convention (loaders and operations return fresh values).

struct ImageRaster {
  uint32_t width = 0;
  uint32_t height = 0;
  uint32_t channels = 1;  // 1 or 3
  std::vector<uint8_t> data;

  static ImageRaster create(uint32_t w, uint32_t h, uint32_t channels,
                            std::vector<uint8_t> data);
  size_t pixel_count() const { return size_t(width) * height; }
};

// Inverse depth, relative scale; larger = closer to the camera.
struct DisparityMap {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<double> data;  // non-negative, finite

  static DisparityMap create(uint32_t w, uint32_t h, std::vector<double> data);
  static DisparityMap constant(uint32_t w, uint32_t h, double value);
  size_t pixel_count() const { return size_t(width) * height; }
  double at(uint32_t x, uint32_t y) const { return data[size_t(y) * width + x]; }
};

struct SegMap {
  uint32_t width = 0;
  uint32_t height = 0;
  uint16_t num_classes = 0;
  uint16_t ignore_index = 255;
  std::vector<uint8_t> data;  // class index per pixel, or ignore_index

  static SegMap create(uint32_t w, uint32_t h, uint16_t num_classes,
                       uint16_t ignore_index, std::vector<uint8_t> data);
  size_t pixel_count() const { return size_t(width) * height; }
  uint8_t at(uint32_t x, uint32_t y) const { return data[size_t(y) * width + x]; }
};

// Per-pixel confidence of the argmax class, values in [0,1].
struct ProbMap {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<double> data;

  static ProbMap create(uint32_t w, uint32_t h, std::vector<double> data);
  static ProbMap ones(uint32_t w, uint32_t h);
  size_t pixel_count() const { return size_t(width) * height; }
};

struct MixMask {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<uint8_t> data;  // strictly 0 or 1

  static MixMask create(uint32_t w, uint32_t h, std::vector<uint8_t> data);
  size_t pixel_count() const { return size_t(width) * height; }
  size_t count_ones() const;
};

}  // namespace df
