#include "core/pseudo_label.hpp"

#include <cmath>

#include "core/error.hpp"

namespace df {

ClassLogitMap ClassLogitMap::create(uint32_t w, uint32_t h, uint16_t num_classes,
                                    bool post_softmax, std::vector<double> data) {
  if (w < 1 || h < 1) fail(ErrorCode::Validation, "logit map dimensions must be >= 1");
  if (num_classes < 1) fail(ErrorCode::Validation, "num_classes must be >= 1");
  if (data.size() != size_t(w) * h * num_classes)
    fail(ErrorCode::Shape, "logit map data length does not match C*H*W");
  for (double v : data) {
    if (!std::isfinite(v)) fail(ErrorCode::Validation, "logit values must be finite");
  }
  ClassLogitMap m{w, h, num_classes, post_softmax, std::move(data)};
  if (post_softmax) {
    size_t plane = size_t(w) * h;
    for (size_t p = 0; p < plane; ++p) {
      double sum = 0.0;
      for (uint16_t c = 0; c < num_classes; ++c) sum += m.data[c * plane + p];
      if (std::abs(sum - 1.0) > 1e-5)
        fail(ErrorCode::Validation,
             "post-softmax map does not sum to 1 at pixel " + std::to_string(p));
    }
  }
  return m;
}

ClassLogitMap ClassLogitMap::from_tensor(const Tensor& chw, bool post_softmax) {
  if (chw.rank() != 3)
    fail(ErrorCode::Shape, "class score tensor must be rank-3 (classes, height, width)");
  if (chw.dims[0] < 1 || chw.dims[0] > 65535)
    fail(ErrorCode::Validation, "class count out of range");
  return create(chw.dims[2], chw.dims[1], static_cast<uint16_t>(chw.dims[0]),
                post_softmax, chw.data);
}

std::vector<double> ema_update(const std::vector<double>& teacher,
                               const std::vector<double>& student, double alpha) {
  if (teacher.size() != student.size())
    fail(ErrorCode::Shape, "EMA parameter vectors differ in length");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(ErrorCode::Domain, "EMA alpha must lie in [0, 1]");
  std::vector<double> out(teacher.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = alpha * teacher[i] + (1.0 - alpha) * student[i];
  return out;
}

PseudoLabel argmax_label(const ClassLogitMap& scores) {
  if (scores.num_classes > 255)
    fail(ErrorCode::Validation, "argmax_label supports at most 255 classes");
  size_t plane = size_t(scores.width) * scores.height;
  std::vector<uint8_t> label(plane);
  std::vector<double> conf(plane);
  for (size_t p = 0; p < plane; ++p) {
    uint16_t best = 0;
    double best_v = scores.data[p];
    for (uint16_t c = 1; c < scores.num_classes; ++c) {
      double v = scores.data[c * plane + p];
      if (v > best_v) {
        best_v = v;
        best = c;
      }
    }
    label[p] = static_cast<uint8_t>(best);
    if (scores.post_softmax) {
      conf[p] = best_v;
    } else {
      // softmax confidence of the argmax class, stabilized by the max
      double denom = 0.0;
      for (uint16_t c = 0; c < scores.num_classes; ++c)
        denom += std::exp(scores.data[c * plane + p] - best_v);
      conf[p] = 1.0 / denom;
    }
  }
  return PseudoLabel{
      SegMap::create(scores.width, scores.height, scores.num_classes, 255,
                     std::move(label)),
      ProbMap::create(scores.width, scores.height, std::move(conf))};
}

double quality_weight(const ProbMap& prob, double tau) {
  if (!(tau > 0.0 && tau < 1.0))
    fail(ErrorCode::Domain, "tau must lie in (0, 1)");
  size_t above = 0;
  for (double v : prob.data) {
    if (v > tau) ++above;
  }
  return static_cast<double>(above) / static_cast<double>(prob.data.size());
}

CrossEntropyResult cross_entropy(const ClassLogitMap& pred, const SegMap& target) {
  if (pred.width != target.width || pred.height != target.height)
    fail(ErrorCode::Shape, "cross_entropy: prediction/target dimension mismatch");
  if (!pred.post_softmax)
    fail(ErrorCode::Domain, "cross_entropy requires a post-softmax prediction");
  if (target.num_classes > pred.num_classes)
    fail(ErrorCode::Shape, "cross_entropy: target classes exceed prediction classes");
  size_t plane = size_t(pred.width) * pred.height;
  double sum = 0.0;
  size_t counted = 0;
  for (size_t p = 0; p < plane; ++p) {
    uint8_t t = target.data[p];
    if (t == target.ignore_index) continue;
    sum += -std::log(pred.data[size_t(t) * plane + p]);
    ++counted;
  }
  if (counted == 0) return CrossEntropyResult{0.0, true};
  return CrossEntropyResult{sum / static_cast<double>(counted), false};
}

double feature_distance(const std::vector<double>& f,
                        const std::vector<double>& f_ref) {
  if (f.size() != f_ref.size())
    fail(ErrorCode::Shape, "feature_distance: vector length mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    double d = f[i] - f_ref[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

namespace {

double check_term(const std::optional<double>& v, const char* name) {
  if (!v) return 0.0;
  if (!std::isfinite(*v)) fail(ErrorCode::Domain, std::string(name) + " must be finite");
  if (*v < 0.0) fail(ErrorCode::Domain, std::string(name) + " must be >= 0");
  return *v;
}

double check_weight(const std::optional<double>& v, const char* name) {
  if (!v) return 1.0;
  if (!(*v >= 0.0 && *v <= 1.0))
    fail(ErrorCode::Validation, std::string(name) + " must lie in [0, 1]");
  return *v;
}

}  // namespace

LossReport aggregate_losses(const LossTerms& terms, const LossConfig& cfg) {
  if (!(cfg.lambda_f >= 0.0) || !std::isfinite(cfg.lambda_f))
    fail(ErrorCode::Domain, "lambda_f must be >= 0");
  double ce_trg = check_term(terms.ce_trg, "ce_trg");
  double ce_src = check_term(terms.ce_src, "ce_src");
  double dx_labeled = check_term(terms.dx_labeled, "dx_labeled");
  double dx_mixed = check_term(terms.dx_mixed, "dx_mixed");
  double tdm = check_term(terms.tdm, "tdm");
  double cdm = check_term(terms.cdm, "cdm");
  double feat_dist = check_term(terms.feat_dist, "feat_dist");
  double sde = check_term(terms.external_sde, "external_sde");
  double q_dx = check_weight(terms.q_dx, "q_dx");
  double q_tdm = check_weight(terms.q_tdm, "q_tdm");
  double q_cdm = check_weight(terms.q_cdm, "q_cdm");

  LossReport report;
  report.terms = terms;
  report.lambda_f = cfg.lambda_f;
  if (terms.dx_labeled || terms.dx_mixed)
    report.dx = dx_labeled + q_dx * dx_mixed;
  if (terms.ce_trg || terms.ce_src || terms.tdm || terms.cdm)
    report.ssda = ce_trg + ce_src + q_cdm * cdm + q_tdm * tdm + sde;
  if (terms.feat_dist) report.pretrain = sde + cfg.lambda_f * feat_dist;
  if (report.dx) report.mtl = sde + *report.dx;

  report.total = ce_trg + ce_src + dx_labeled + q_dx * dx_mixed + q_tdm * tdm +
                 q_cdm * cdm + cfg.lambda_f * feat_dist + sde;
  return report;
}

}  // namespace df
