#pragma once

#include "core/raster.hpp"

namespace df {

struct MixConfig {
  // Disparity slack: a pixel of i wins when disp_i > disp_j - epsilon.
  // Keeps surfaces on a shared depth plane (road, sky) from flickering
  // between sources.
  double epsilon = 0.03;
  int threads = 1;
};

// Binary mask selecting, per pixel, whether image i is at least as close
// as image j within the configured slack.
MixMask depthmix_mask(const DisparityMap& disp_i, const DisparityMap& disp_j,
                      const MixConfig& cfg);

// out = M * a_i + (1 - M) * a_j; per-pixel selection, never blending.
ImageRaster mix_images(const MixMask& mask, const ImageRaster& a_i,
                       const ImageRaster& a_j, int threads = 1);
SegMap mix_segmaps(const MixMask& mask, const SegMap& a_i, const SegMap& a_j);
ProbMap mix_probs(const MixMask& mask, const ProbMap& a_i, const ProbMap& a_j);
DisparityMap mix_disparities(const MixMask& mask, const DisparityMap& a_i,
                             const DisparityMap& a_j);

struct Sample {
  std::string image_id;
  bool labeled = false;
  ImageRaster image;
  DisparityMap disparity;
  SegMap label;   // ground truth if labeled, pseudo-label otherwise
  ProbMap prob;   // confidence of the (pseudo-)label; ignored when labeled
};

struct MixedSample {
  ImageRaster image;
  SegMap label;
  ProbMap prob;
  DisparityMap disparity;
  MixMask mask;
};

// Full compositing of a sample pair: geometry mask, then image, label,
// confidence and disparity mixed with it. A labeled sample contributes an
// all-ones confidence map.
MixedSample mix_pair(const Sample& sample_i, const Sample& sample_j,
                     const MixConfig& cfg);

}  // namespace df
