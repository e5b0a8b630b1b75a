#include "core/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace df {

std::vector<double> pool_features(const Tensor& chw) {
  if (chw.rank() != 3)
    fail(ErrorCode::Shape, "feature tensor must be rank-3 (channels, H, W)");
  uint32_t channels = chw.dims[0], h = chw.dims[1], w = chw.dims[2];
  constexpr uint32_t kGridH = 4, kGridW = 8;
  if (h < kGridH || w < kGridW)
    fail(ErrorCode::Domain, "feature spatial dims must be at least 8x4");
  std::vector<double> out(size_t(channels) * kGridH * kGridW);
  for (uint32_t c = 0; c < channels; ++c) {
    const double* plane = chw.data.data() + size_t(c) * h * w;
    for (uint32_t gy = 0; gy < kGridH; ++gy) {
      uint32_t y0 = gy * h / kGridH, y1 = (gy + 1) * h / kGridH;
      for (uint32_t gx = 0; gx < kGridW; ++gx) {
        uint32_t x0 = gx * w / kGridW, x1 = (gx + 1) * w / kGridW;
        double sum = 0.0;
        for (uint32_t y = y0; y < y1; ++y)
          for (uint32_t x = x0; x < x1; ++x) sum += plane[size_t(y) * w + x];
        out[(size_t(c) * kGridH + gy) * kGridW + gx] =
            sum / (double(y1 - y0) * (x1 - x0));
      }
    }
  }
  return out;
}

FeatureStats compute_feature_stats(const std::vector<std::vector<double>>& pooled) {
  if (pooled.empty()) fail(ErrorCode::Validation, "feature dataset is empty");
  size_t dim = pooled.front().size();
  for (const auto& v : pooled) {
    if (v.size() != dim)
      fail(ErrorCode::Shape, "pooled feature vectors differ in length");
  }
  FeatureStats stats;
  stats.mean.assign(dim, 0.0);
  stats.stddev.assign(dim, 0.0);
  double n = static_cast<double>(pooled.size());
  for (const auto& v : pooled)
    for (size_t i = 0; i < dim; ++i) stats.mean[i] += v[i];
  for (size_t i = 0; i < dim; ++i) stats.mean[i] /= n;
  for (const auto& v : pooled)
    for (size_t i = 0; i < dim; ++i) {
      double d = v[i] - stats.mean[i];
      stats.stddev[i] += d * d;
    }
  for (size_t i = 0; i < dim; ++i) stats.stddev[i] = std::sqrt(stats.stddev[i] / n);
  return stats;
}

std::vector<FeatureEmbedding> preprocess_features(
    const std::vector<std::pair<std::string, Tensor>>& raw) {
  if (raw.empty()) fail(ErrorCode::Validation, "feature dataset is empty");
  std::vector<std::vector<double>> pooled;
  pooled.reserve(raw.size());
  for (const auto& [id, t] : raw) pooled.push_back(pool_features(t));
  FeatureStats stats = compute_feature_stats(pooled);
  std::vector<FeatureEmbedding> out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    std::vector<double> v(pooled[i].size());
    for (size_t k = 0; k < v.size(); ++k) {
      v[k] = stats.stddev[k] > 0.0
                 ? (pooled[i][k] - stats.mean[k]) / stats.stddev[k]
                 : 0.0;
    }
    out.push_back(FeatureEmbedding{raw[i].first, std::move(v)});
  }
  return out;
}

double uncertainty_score(const DisparityMap& student_disp,
                         const DisparityMap& teacher_disp) {
  if (student_disp.width != teacher_disp.width ||
      student_disp.height != teacher_disp.height)
    fail(ErrorCode::Shape, "uncertainty_score: dimension mismatch");
  double sum = 0.0;
  for (size_t p = 0; p < student_disp.data.size(); ++p)
    sum += std::abs(std::log1p(teacher_disp.data[p]) -
                    std::log1p(student_disp.data[p]));
  return sum / static_cast<double>(student_disp.data.size());
}

namespace {

double l2_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace

double diversity_distance(const FeatureEmbedding& candidate,
                          const std::vector<FeatureEmbedding>& selected) {
  if (selected.empty())
    fail(ErrorCode::Validation,
         "diversity_distance requires a non-empty selected set; the first pick is random");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : selected) {
    if (s.vec.size() != candidate.vec.size())
      fail(ErrorCode::Shape, "embedding length mismatch");
    best = std::min(best, l2_distance(candidate.vec, s.vec));
  }
  return best;
}

SelectionState SelectionState::initial(const std::vector<std::string>& ids) {
  SelectionState s;
  s.remaining.insert(ids.begin(), ids.end());
  if (s.remaining.size() != ids.size())
    fail(ErrorCode::Validation, "duplicate image_id in selection input");
  s.step = 1;
  return s;
}

void SelectionState::check_partition(size_t total) const {
  if (selected.size() + remaining.size() != total)
    fail(ErrorCode::Internal, "selection partition broken: sizes do not add up");
  for (const auto& id : selected) {
    if (remaining.count(id))
      fail(ErrorCode::Internal, "selection partition broken: " + id + " on both sides");
  }
}

SelectionState select_step(SelectionState state,
                           const std::vector<FeatureEmbedding>& embeddings,
                           const SelectionConfig& cfg, const PickObserver& on_pick) {
  if (cfg.schedule.empty())
    fail(ErrorCode::Validation, "selection schedule must be non-empty");
  for (size_t i = 1; i < cfg.schedule.size(); ++i) {
    if (cfg.schedule[i] <= cfg.schedule[i - 1])
      fail(ErrorCode::Validation, "selection schedule must be strictly increasing");
  }
  if (state.step < 1 || state.step > cfg.schedule.size())
    fail(ErrorCode::Domain, "selection state is past the end of the schedule");
  size_t target = cfg.schedule[state.step - 1];
  if (state.selected.size() >= target)
    fail(ErrorCode::Domain, "selection state already at the step target");
  if (!(cfg.lambda_e >= 0.0))
    fail(ErrorCode::Domain, "lambda_e must be >= 0");

  size_t total = state.selected.size() + state.remaining.size();
  if (target > total)
    fail(ErrorCode::Validation, "schedule exceeds the dataset size");

  // index embeddings by id, ids sorted for deterministic addressing
  std::unordered_map<std::string, size_t> index;
  index.reserve(embeddings.size());
  for (size_t i = 0; i < embeddings.size(); ++i)
    index.emplace(embeddings[i].image_id, i);
  auto embedding_of = [&](const std::string& id) -> const FeatureEmbedding& {
    auto it = index.find(id);
    if (it == index.end())
      fail(ErrorCode::Validation, "no embedding for image_id: " + id);
    return embeddings[it->second];
  };

  bool use_uncertainty = state.step >= 2;
  if (use_uncertainty) {
    for (const auto& id : state.remaining) {
      if (!state.uncertainty.count(id))
        fail(ErrorCode::Validation,
             "uncertainty score missing for '" + id +
                 "' at step >= 2; run the depth student between steps");
    }
  }

  // candidates in sorted id order; min distance to the selected set cached
  std::vector<std::string> cand(state.remaining.begin(), state.remaining.end());
  std::vector<double> min_dist(cand.size(),
                               std::numeric_limits<double>::infinity());
  auto update_dists = [&](const std::string& picked_id) {
    const FeatureEmbedding& picked = embedding_of(picked_id);
    parallel_for(cand.size(), cfg.threads, [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) {
        double d = l2_distance(embedding_of(cand[i]).vec, picked.vec);
        if (d < min_dist[i]) min_dist[i] = d;
      }
    });
  };
  for (const auto& id : state.selected) update_dists(id);

  auto take = [&](size_t pos) {
    std::string id = cand[pos];
    cand.erase(cand.begin() + static_cast<ptrdiff_t>(pos));
    min_dist.erase(min_dist.begin() + static_cast<ptrdiff_t>(pos));
    state.remaining.erase(id);
    state.selected.push_back(id);
    update_dists(id);
    if (on_pick) on_pick(state);
  };

  if (state.selected.empty()) {
    // Very first pick of the whole run: uniform over the sorted ids.
    SeededRng rng(cfg.seed);
    take(static_cast<size_t>(rng.uniform_index(cand.size())));
  }

  while (state.selected.size() < target) {
    if (cand.empty()) fail(ErrorCode::Internal, "ran out of candidates");
    size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < cand.size(); ++i) {
      double score = min_dist[i];
      if (use_uncertainty) score += cfg.lambda_e * state.uncertainty.at(cand[i]);
      if (score > best_score) {  // ties keep the lowest id (sorted order)
        best_score = score;
        best = i;
      }
    }
    take(best);
  }
  state.step += 1;
  return state;
}

SelectionRun run_selection(
    const std::vector<FeatureEmbedding>& embeddings, const SelectionConfig& cfg,
    const UncertaintyProvider& provider,
    const std::function<void(size_t, const std::vector<std::string>&)>&
        on_step_complete) {
  std::vector<std::string> ids;
  ids.reserve(embeddings.size());
  for (const auto& e : embeddings) ids.push_back(e.image_id);
  SelectionState state = SelectionState::initial(ids);
  if (cfg.schedule.empty())
    fail(ErrorCode::Validation, "selection schedule must be non-empty");
  if (cfg.schedule.back() > ids.size())
    fail(ErrorCode::Validation, "schedule end exceeds the dataset size");

  SelectionRun run;
  for (size_t t = 1; t <= cfg.schedule.size(); ++t) {
    if (t >= 2) {
      if (!provider)
        fail(ErrorCode::Validation,
             "uncertainty provider required for schedules with more than one step");
      state.uncertainty = provider(t, state.remaining);
    }
    state = select_step(std::move(state), embeddings, cfg);
    run.per_step.push_back(state.selected);
    if (on_step_complete) on_step_complete(t, state.selected);
  }
  run.final_state = std::move(state);
  return run;
}

ClassFrequencyReport class_frequency_report(const std::vector<SegMap>& selected,
                                            const std::vector<SegMap>& full) {
  if (full.empty()) fail(ErrorCode::Validation, "full dataset is empty");
  uint16_t num_classes = full.front().num_classes;
  for (const auto* set : {&selected, &full}) {
    for (const auto& m : *set) {
      if (m.num_classes != num_classes)
        fail(ErrorCode::Validation, "class_frequency_report: num_classes differ");
    }
  }
  ClassFrequencyReport report;
  report.selected_pixels.assign(num_classes, 0);
  report.full_pixels.assign(num_classes, 0);
  auto count = [&](const std::vector<SegMap>& maps, std::vector<uint64_t>& out) {
    for (const auto& m : maps) {
      for (uint8_t v : m.data) {
        if (v != m.ignore_index) out[v] += 1;
      }
    }
  };
  count(selected, report.selected_pixels);
  count(full, report.full_pixels);
  report.ratio.resize(num_classes);
  for (uint16_t c = 0; c < num_classes; ++c) {
    if (report.full_pixels[c] == 0) {
      report.ratio[c] = std::nullopt;
    } else {
      report.ratio[c] = static_cast<double>(report.selected_pixels[c]) /
                        static_cast<double>(report.full_pixels[c]);
    }
  }
  return report;
}

}  // namespace df
