#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "core/raster.hpp"

namespace df {

// Procedural street-scene stand-in: a disparity ramp background with
// constant-disparity rectangles / ellipses painted nearest-last. Used as
// the deterministic fixture generator for the whole toolkit.

enum class ObjectShape { Rectangle, Ellipse };

struct SceneObject {
  ObjectShape shape = ObjectShape::Rectangle;
  uint16_t class_index = 0;
  double disparity = 0.5;  // constant over the object, > 0
  // rectangle: x,y top-left and w,h extent; ellipse: x,y center, w,h radii
  int32_t x = 0, y = 0;
  uint32_t w = 1, h = 1;
};

struct SceneSpec {
  uint32_t width = 64;
  uint32_t height = 64;
  uint16_t num_classes = 6;
  uint16_t ignore_index = 255;
  uint16_t background_class = 0;
  double background_top = 0.01;     // disparity at the top row (far)
  double background_bottom = 0.2;   // disparity at the bottom row (near)
  std::vector<SceneObject> objects;
  uint64_t seed = 0;
};

struct Scene {
  ImageRaster image;
  DisparityMap disparity;
  SegMap label;
};

// Deterministic rasterization: per pixel the surface with the largest
// disparity wins (background ramp included); among equal disparities the
// later object in the list wins. Image colors come from the label palette
// with one seeded jitter per object.
Scene generate_scene(const SceneSpec& spec);

// Seeded random scene for batch fixtures.
SceneSpec random_scene_spec(uint32_t width, uint32_t height, uint16_t num_classes,
                            uint64_t seed);

}  // namespace df
