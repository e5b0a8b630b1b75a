#include "core/synth.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/png_io.hpp"
#include "core/rng.hpp"

namespace df {

namespace {

void validate_spec(const SceneSpec& spec) {
  if (spec.width < 1 || spec.height < 1)
    fail(ErrorCode::Validation, "scene dimensions must be >= 1");
  if (spec.num_classes < 1 || spec.num_classes > 255)
    fail(ErrorCode::Validation, "scene num_classes must be in [1, 255]");
  if (spec.background_class >= spec.num_classes)
    fail(ErrorCode::Validation, "background class outside [0, num_classes)");
  if (!(spec.background_top >= 0.0) || !(spec.background_bottom >= 0.0))
    fail(ErrorCode::Validation, "background disparities must be >= 0");
  for (const auto& obj : spec.objects) {
    if (!(obj.disparity > 0.0))
      fail(ErrorCode::Validation, "object disparity must be > 0");
    if (obj.class_index >= spec.num_classes)
      fail(ErrorCode::Validation, "object class outside [0, num_classes)");
    if (obj.w < 1 || obj.h < 1)
      fail(ErrorCode::Validation, "object extent must be >= 1");
  }
}

bool covers(const SceneObject& obj, uint32_t px, uint32_t py) {
  if (obj.shape == ObjectShape::Rectangle) {
    return int64_t(px) >= obj.x && int64_t(px) < obj.x + int64_t(obj.w) &&
           int64_t(py) >= obj.y && int64_t(py) < obj.y + int64_t(obj.h);
  }
  double dx = (double(px) - obj.x) / obj.w;
  double dy = (double(py) - obj.y) / obj.h;
  return dx * dx + dy * dy <= 1.0;
}

}  // namespace

Scene generate_scene(const SceneSpec& spec) {
  validate_spec(spec);
  SeededRng rng(spec.seed);
  auto palette = label_palette();

  // one color jitter per surface, drawn in list order (background first)
  auto jitter = [&rng]() {
    std::array<int, 3> j;
    for (auto& v : j) v = static_cast<int>(rng.uniform_index(31)) - 15;
    return j;
  };
  std::array<int, 3> bg_jitter = jitter();
  std::vector<std::array<int, 3>> obj_jitter;
  obj_jitter.reserve(spec.objects.size());
  for (size_t i = 0; i < spec.objects.size(); ++i) obj_jitter.push_back(jitter());

  size_t n = size_t(spec.width) * spec.height;
  std::vector<uint8_t> image(n * 3);
  std::vector<double> disparity(n);
  std::vector<uint8_t> label(n);

  for (uint32_t y = 0; y < spec.height; ++y) {
    double ramp =
        spec.height == 1
            ? spec.background_top
            : spec.background_top + (spec.background_bottom - spec.background_top) *
                                        (double(y) / (spec.height - 1));
    for (uint32_t x = 0; x < spec.width; ++x) {
      double best_disp = ramp;
      uint16_t best_class = spec.background_class;
      const std::array<int, 3>* best_jitter = &bg_jitter;
      for (size_t k = 0; k < spec.objects.size(); ++k) {
        const SceneObject& obj = spec.objects[k];
        if (obj.disparity >= best_disp && covers(obj, x, y)) {
          best_disp = obj.disparity;
          best_class = obj.class_index;
          best_jitter = &obj_jitter[k];
        }
      }
      size_t p = size_t(y) * spec.width + x;
      disparity[p] = best_disp;
      label[p] = static_cast<uint8_t>(best_class);
      const auto& base = palette[best_class];
      for (int c = 0; c < 3; ++c)
        image[p * 3 + c] = static_cast<uint8_t>(
            std::clamp(int(base[c]) + (*best_jitter)[c], 0, 255));
    }
  }
  return Scene{
      ImageRaster::create(spec.width, spec.height, 3, std::move(image)),
      DisparityMap::create(spec.width, spec.height, std::move(disparity)),
      SegMap::create(spec.width, spec.height, spec.num_classes, spec.ignore_index,
                     std::move(label))};
}

SceneSpec random_scene_spec(uint32_t width, uint32_t height, uint16_t num_classes,
                            uint64_t seed) {
  SceneSpec spec;
  spec.width = width;
  spec.height = height;
  spec.num_classes = num_classes;
  spec.seed = seed;
  SeededRng rng(SeededRng::derive(seed, 0xd15c));
  size_t count = 2 + rng.uniform_index(5);
  for (size_t k = 0; k < count; ++k) {
    SceneObject obj;
    obj.shape = rng.uniform_index(2) == 0 ? ObjectShape::Rectangle
                                          : ObjectShape::Ellipse;
    obj.class_index = static_cast<uint16_t>(
        num_classes > 1 ? 1 + rng.uniform_index(num_classes - 1) : 0);
    obj.disparity = rng.uniform_real(0.25, 1.0);
    obj.w = 4 + static_cast<uint32_t>(rng.uniform_index(std::max(1u, width / 3)));
    obj.h = 4 + static_cast<uint32_t>(rng.uniform_index(std::max(1u, height / 3)));
    obj.x = static_cast<int32_t>(rng.uniform_index(width)) -
            static_cast<int32_t>(obj.w / 2);
    obj.y = static_cast<int32_t>(rng.uniform_index(height)) -
            static_cast<int32_t>(obj.h / 2);
    spec.objects.push_back(obj);
  }
  return spec;
}

}  // namespace df
