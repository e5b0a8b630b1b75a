#include "core/depthmix.hpp"

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace df {

namespace {

void check_same_shape(uint32_t wa, uint32_t ha, uint32_t wb, uint32_t hb,
                      const char* what) {
  if (wa != wb || ha != hb)
    fail(ErrorCode::Shape, std::string(what) + ": dimension mismatch (" +
                               std::to_string(wa) + "x" + std::to_string(ha) +
                               " vs " + std::to_string(wb) + "x" +
                               std::to_string(hb) + ")");
}

}  // namespace

MixMask depthmix_mask(const DisparityMap& disp_i, const DisparityMap& disp_j,
                      const MixConfig& cfg) {
  check_same_shape(disp_i.width, disp_i.height, disp_j.width, disp_j.height,
                   "depthmix_mask");
  if (!(cfg.epsilon >= 0.0))
    fail(ErrorCode::Domain, "epsilon must be >= 0");
  std::vector<uint8_t> mask(disp_i.data.size());
  parallel_for(mask.size(), cfg.threads, [&](size_t b, size_t e) {
    for (size_t p = b; p < e; ++p)
      mask[p] = disp_i.data[p] > disp_j.data[p] - cfg.epsilon ? 1 : 0;
  });
  return MixMask{disp_i.width, disp_i.height, std::move(mask)};
}

ImageRaster mix_images(const MixMask& mask, const ImageRaster& a_i,
                       const ImageRaster& a_j, int threads) {
  check_same_shape(mask.width, mask.height, a_i.width, a_i.height, "mix_images");
  check_same_shape(a_i.width, a_i.height, a_j.width, a_j.height, "mix_images");
  if (a_i.channels != a_j.channels)
    fail(ErrorCode::Shape, "mix_images: channel mismatch");
  uint32_t ch = a_i.channels;
  std::vector<uint8_t> out(a_i.data.size());
  parallel_for(mask.data.size(), threads, [&](size_t b, size_t e) {
    for (size_t p = b; p < e; ++p) {
      const uint8_t* src = mask.data[p] ? &a_i.data[p * ch] : &a_j.data[p * ch];
      for (uint32_t c = 0; c < ch; ++c) out[p * ch + c] = src[c];
    }
  });
  return ImageRaster{a_i.width, a_i.height, ch, std::move(out)};
}

SegMap mix_segmaps(const MixMask& mask, const SegMap& a_i, const SegMap& a_j) {
  check_same_shape(mask.width, mask.height, a_i.width, a_i.height, "mix_segmaps");
  check_same_shape(a_i.width, a_i.height, a_j.width, a_j.height, "mix_segmaps");
  if (a_i.num_classes != a_j.num_classes || a_i.ignore_index != a_j.ignore_index)
    fail(ErrorCode::Shape, "mix_segmaps: class layout mismatch");
  std::vector<uint8_t> out(a_i.data.size());
  for (size_t p = 0; p < out.size(); ++p)
    out[p] = mask.data[p] ? a_i.data[p] : a_j.data[p];
  return SegMap{a_i.width, a_i.height, a_i.num_classes, a_i.ignore_index,
                std::move(out)};
}

ProbMap mix_probs(const MixMask& mask, const ProbMap& a_i, const ProbMap& a_j) {
  check_same_shape(mask.width, mask.height, a_i.width, a_i.height, "mix_probs");
  check_same_shape(a_i.width, a_i.height, a_j.width, a_j.height, "mix_probs");
  std::vector<double> out(a_i.data.size());
  for (size_t p = 0; p < out.size(); ++p)
    out[p] = mask.data[p] ? a_i.data[p] : a_j.data[p];
  return ProbMap{a_i.width, a_i.height, std::move(out)};
}

DisparityMap mix_disparities(const MixMask& mask, const DisparityMap& a_i,
                             const DisparityMap& a_j) {
  check_same_shape(mask.width, mask.height, a_i.width, a_i.height,
                   "mix_disparities");
  check_same_shape(a_i.width, a_i.height, a_j.width, a_j.height,
                   "mix_disparities");
  std::vector<double> out(a_i.data.size());
  for (size_t p = 0; p < out.size(); ++p)
    out[p] = mask.data[p] ? a_i.data[p] : a_j.data[p];
  return DisparityMap{a_i.width, a_i.height, std::move(out)};
}

MixedSample mix_pair(const Sample& sample_i, const Sample& sample_j,
                     const MixConfig& cfg) {
  MixMask mask = depthmix_mask(sample_i.disparity, sample_j.disparity, cfg);
  ProbMap prob_i = sample_i.labeled
                       ? ProbMap::ones(sample_i.disparity.width,
                                       sample_i.disparity.height)
                       : sample_i.prob;
  ProbMap prob_j = sample_j.labeled
                       ? ProbMap::ones(sample_j.disparity.width,
                                       sample_j.disparity.height)
                       : sample_j.prob;
  MixedSample out{
      mix_images(mask, sample_i.image, sample_j.image, cfg.threads),
      mix_segmaps(mask, sample_i.label, sample_j.label),
      mix_probs(mask, prob_i, prob_j),
      mix_disparities(mask, sample_i.disparity, sample_j.disparity),
      std::move(mask)};
  return out;
}

}  // namespace df
