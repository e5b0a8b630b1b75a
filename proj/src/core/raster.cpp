#include "core/raster.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace df {

namespace {

void check_dims(uint32_t w, uint32_t h) {
  if (w < 1 || h < 1) fail(ErrorCode::Validation, "raster dimensions must be >= 1");
}

}  // namespace

ImageRaster ImageRaster::create(uint32_t w, uint32_t h, uint32_t channels,
                                std::vector<uint8_t> data) {
  check_dims(w, h);
  if (channels != 1 && channels != 3)
    fail(ErrorCode::Validation, "image channels must be 1 or 3");
  if (data.size() != size_t(w) * h * channels)
    fail(ErrorCode::Shape, "image data length does not match width*height*channels");
  return ImageRaster{w, h, channels, std::move(data)};
}

DisparityMap DisparityMap::create(uint32_t w, uint32_t h, std::vector<double> data) {
  check_dims(w, h);
  if (data.size() != size_t(w) * h)
    fail(ErrorCode::Shape, "disparity data length does not match width*height");
  for (double v : data) {
    if (!std::isfinite(v) || v < 0.0)
      fail(ErrorCode::Validation, "disparity values must be finite and >= 0");
  }
  return DisparityMap{w, h, std::move(data)};
}

DisparityMap DisparityMap::constant(uint32_t w, uint32_t h, double value) {
  return create(w, h, std::vector<double>(size_t(w) * h, value));
}

SegMap SegMap::create(uint32_t w, uint32_t h, uint16_t num_classes,
                      uint16_t ignore_index, std::vector<uint8_t> data) {
  check_dims(w, h);
  if (num_classes < 1 || num_classes > 255)
    fail(ErrorCode::Validation, "num_classes must be in [1, 255]");
  if (ignore_index < num_classes)
    fail(ErrorCode::Validation, "ignore_index must not collide with a class index");
  if (data.size() != size_t(w) * h)
    fail(ErrorCode::Shape, "label data length does not match width*height");
  for (uint8_t v : data) {
    if (v != ignore_index && v >= num_classes)
      fail(ErrorCode::Validation,
           "label value " + std::to_string(v) + " outside [0, " +
               std::to_string(num_classes) + ") and not the ignore index");
  }
  return SegMap{w, h, num_classes, ignore_index, std::move(data)};
}

ProbMap ProbMap::create(uint32_t w, uint32_t h, std::vector<double> data) {
  check_dims(w, h);
  if (data.size() != size_t(w) * h)
    fail(ErrorCode::Shape, "probability data length does not match width*height");
  for (double v : data) {
    if (!(v >= 0.0 && v <= 1.0))
      fail(ErrorCode::Validation, "probability values must lie in [0, 1]");
  }
  return ProbMap{w, h, std::move(data)};
}

ProbMap ProbMap::ones(uint32_t w, uint32_t h) {
  return create(w, h, std::vector<double>(size_t(w) * h, 1.0));
}

MixMask MixMask::create(uint32_t w, uint32_t h, std::vector<uint8_t> data) {
  check_dims(w, h);
  if (data.size() != size_t(w) * h)
    fail(ErrorCode::Shape, "mask data length does not match width*height");
  for (uint8_t v : data) {
    if (v > 1) fail(ErrorCode::Validation, "mask values must be 0 or 1");
  }
  return MixMask{w, h, std::move(data)};
}

size_t MixMask::count_ones() const {
  return static_cast<size_t>(std::count(data.begin(), data.end(), uint8_t(1)));
}

}  // namespace df
