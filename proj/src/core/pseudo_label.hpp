#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/raster.hpp"
#include "core/tensor.hpp"

namespace df {

// Per-pixel per-class scores, class-major layout: data[c][y][x].
struct ClassLogitMap {
  uint32_t width = 0;
  uint32_t height = 0;
  uint16_t num_classes = 0;
  bool post_softmax = false;
  std::vector<double> data;

  // Validates per-pixel normalization (sum within 1e-5 of 1) when the map
  // is declared post-softmax.
  static ClassLogitMap create(uint32_t w, uint32_t h, uint16_t num_classes,
                              bool post_softmax, std::vector<double> data);
  static ClassLogitMap from_tensor(const Tensor& chw, bool post_softmax);

  double at(uint16_t c, uint32_t x, uint32_t y) const {
    return data[(size_t(c) * height + y) * width + x];
  }
};

// Teacher update: out = alpha * teacher + (1 - alpha) * student.
std::vector<double> ema_update(const std::vector<double>& teacher,
                               const std::vector<double>& student, double alpha);

struct PseudoLabel {
  SegMap label;
  ProbMap confidence;
};

// Argmax pseudo-label plus the softmax confidence of the winning class.
// Ties break to the lowest class index.
PseudoLabel argmax_label(const ClassLogitMap& scores);

// Fraction of pixels whose confidence strictly exceeds tau.
double quality_weight(const ProbMap& prob, double tau);

struct CrossEntropyResult {
  double value = 0.0;
  bool all_ignored = false;  // every pixel ignored; value defined as 0
};

// Mean over non-ignored pixels of -ln(pred at target class). pred must be
// declared post-softmax.
CrossEntropyResult cross_entropy(const ClassLogitMap& pred, const SegMap& target);

// L2 distance between pooled feature vectors.
double feature_distance(const std::vector<double>& f,
                        const std::vector<double>& f_ref);

struct LossConfig {
  double lambda_f = 1e-2;  // weight of the feature-distance term
  double tau = 0.968;      // confidence threshold for quality weights
};

// Scalar loss terms; absent terms contribute 0 to every aggregate.
struct LossTerms {
  std::optional<double> ce_trg, ce_src;
  std::optional<double> dx_labeled, dx_mixed;
  std::optional<double> tdm, cdm;
  std::optional<double> feat_dist;
  std::optional<double> external_sde;  // depth loss supplied by the trainer
  // quality weights applied to the corresponding mixed terms (default 1)
  std::optional<double> q_dx, q_tdm, q_cdm;
};

struct LossReport {
  LossTerms terms;
  double lambda_f = 1e-2;
  std::optional<double> dx;        // dx_labeled + q_dx * dx_mixed
  std::optional<double> ssda;      // ce_trg + ce_src + q_cdm*cdm + q_tdm*tdm + sde
  std::optional<double> pretrain;  // external_sde + lambda_f * feat_dist
  std::optional<double> mtl;       // external_sde + dx
  double total = 0.0;              // every present term once, with its weight
};

LossReport aggregate_losses(const LossTerms& terms, const LossConfig& cfg);

}  // namespace df
