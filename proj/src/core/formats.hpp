#pragma once

#include <filesystem>

#include "core/raster.hpp"
#include "core/tensor.hpp"

namespace df {

// File conventions:
//   disparity  16-bit grayscale PNG + sidecar "<stem>.json" {"scale": s},
//              decoded value = raw / s
//   labels     8-bit indexed PNG (fixed palette); 8-bit grayscale accepted
//   images     8-bit grayscale or RGB PNG
//   prob maps  DFT1 rank-2 (height, width)

struct DisparityFile {
  DisparityMap map;
  double scale = 0.0;
};

std::filesystem::path disparity_sidecar(const std::filesystem::path& png_path);

DisparityFile read_disparity(const std::filesystem::path& path);
void write_disparity(const DisparityMap& map, const std::filesystem::path& path,
                     double scale);

SegMap read_segmap(const std::filesystem::path& path, uint16_t num_classes,
                   uint16_t ignore_index);
void write_segmap(const SegMap& map, const std::filesystem::path& path);

ProbMap read_prob(const std::filesystem::path& path);
void write_prob(const ProbMap& prob, const std::filesystem::path& path);

ImageRaster read_image(const std::filesystem::path& path);
void write_image(const ImageRaster& img, const std::filesystem::path& path);

}  // namespace df
