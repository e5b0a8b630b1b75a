#include "core/formats.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/png_io.hpp"

namespace df {

using nlohmann::json;

std::filesystem::path disparity_sidecar(const std::filesystem::path& png_path) {
  std::filesystem::path p = png_path;
  p.replace_extension(".json");
  return p;
}

DisparityFile read_disparity(const std::filesystem::path& path) {
  Gray16Png png = read_png_gray16(path);
  std::filesystem::path side = disparity_sidecar(path);
  std::ifstream in(side);
  if (!in) fail(ErrorCode::Io, "missing disparity sidecar: " + side.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::Format, "bad disparity sidecar " + side.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("scale") || !j["scale"].is_number())
    fail(ErrorCode::Format, "disparity sidecar must be {\"scale\": s}: " + side.string());
  double scale = j["scale"].get<double>();
  if (!(scale > 0.0) || !std::isfinite(scale))
    fail(ErrorCode::Validation, "disparity scale must be positive and finite: " + side.string());
  std::vector<double> data(png.data.size());
  for (size_t i = 0; i < png.data.size(); ++i) data[i] = png.data[i] / scale;
  return DisparityFile{DisparityMap::create(png.width, png.height, std::move(data)),
                       scale};
}

void write_disparity(const DisparityMap& map, const std::filesystem::path& path,
                     double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    fail(ErrorCode::Validation, "disparity scale must be positive and finite");
  std::vector<uint16_t> raw(map.data.size());
  for (size_t i = 0; i < map.data.size(); ++i) {
    double q = std::llround(map.data[i] * scale);
    if (q > 65535.0)
      fail(ErrorCode::Validation,
           "disparity value " + std::to_string(map.data[i]) +
               " exceeds the 16-bit range at scale " + std::to_string(scale));
    raw[i] = static_cast<uint16_t>(q);
  }
  write_png_gray16(path, map.width, map.height, raw);
  json j;
  j["scale"] = scale;
  std::ofstream out(disparity_sidecar(path), std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot write disparity sidecar for " + path.string());
  out << j.dump() << "\n";
}

SegMap read_segmap(const std::filesystem::path& path, uint16_t num_classes,
                   uint16_t ignore_index) {
  IndexPng png = read_png_indices(path);
  return SegMap::create(png.width, png.height, num_classes, ignore_index,
                        std::move(png.data));
}

void write_segmap(const SegMap& map, const std::filesystem::path& path) {
  write_png_indexed(path, map.width, map.height, map.data);
}

ProbMap read_prob(const std::filesystem::path& path) {
  Tensor t = read_tensor(path);
  if (t.rank() != 2)
    fail(ErrorCode::Format, "probability map must be a rank-2 tensor: " + path.string());
  return ProbMap::create(t.dims[1], t.dims[0], std::move(t.data));
}

void write_prob(const ProbMap& prob, const std::filesystem::path& path) {
  write_tensor(Tensor::create({prob.height, prob.width}, prob.data), path);
}

ImageRaster read_image(const std::filesystem::path& path) {
  return read_png_image(path);
}

void write_image(const ImageRaster& img, const std::filesystem::path& path) {
  write_png_image(img, path);
}

}  // namespace df
