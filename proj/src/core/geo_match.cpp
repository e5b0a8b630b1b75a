#include "core/geo_match.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace df {

namespace {

struct CropRows {
  uint32_t begin, end;
};

CropRows effective_crop(uint32_t height, const GeoMatchConfig& cfg) {
  uint64_t top = cfg.top_margin, bottom = cfg.bottom_margin;
  if (!cfg.absolute_margins) {
    // margins are declared for 512-tall rasters and scale with height
    top = (top * height + 256) / 512;
    bottom = (bottom * height + 256) / 512;
  }
  if (top + bottom >= height)
    fail(ErrorCode::Domain, "margins exhaust the image: top " +
                                std::to_string(top) + " + bottom " +
                                std::to_string(bottom) + " >= height " +
                                std::to_string(height));
  return CropRows{static_cast<uint32_t>(top),
                  static_cast<uint32_t>(height - bottom)};
}

}  // namespace

double geometric_difference(const DisparityMap& disp_i, const DisparityMap& disp_j,
                            const GeoMatchConfig& cfg) {
  if (disp_i.width != disp_j.width || disp_i.height != disp_j.height)
    fail(ErrorCode::Shape, "geometric_difference: dimension mismatch");
  CropRows rows = effective_crop(disp_i.height, cfg);
  double sum = 0.0;
  for (uint32_t y = rows.begin; y < rows.end; ++y) {
    const double* a = disp_i.data.data() + size_t(y) * disp_i.width;
    const double* b = disp_j.data.data() + size_t(y) * disp_j.width;
    for (uint32_t x = 0; x < disp_i.width; ++x)
      sum += std::abs(std::log1p(a[x]) - std::log1p(b[x]));
  }
  return sum / (double(rows.end - rows.begin) * disp_i.width);
}

GeoMatchResult match_geometry(const DisparityMap& target_disp,
                              const std::vector<GeoCandidate>& candidates,
                              const GeoMatchConfig& cfg) {
  if (candidates.empty())
    fail(ErrorCode::Validation, "match_geometry requires at least one candidate");
  std::vector<double> scores(candidates.size());
  parallel_for(candidates.size(), cfg.threads, [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i)
      scores[i] = geometric_difference(target_disp, *candidates[i].disparity, cfg);
  });
  size_t best = 0;
  for (size_t i = 1; i < candidates.size(); ++i) {
    if (scores[i] < scores[best] ||
        (scores[i] == scores[best] && candidates[i].id < candidates[best].id))
      best = i;
  }
  GeoMatchResult result;
  result.chosen_id = candidates[best].id;
  result.difference = scores[best];
  result.scored.reserve(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i)
    result.scored.emplace_back(candidates[i].id, scores[i]);
  return result;
}

const char* mix_plan_kind_name(MixPlanKind k) {
  switch (k) {
    case MixPlanKind::TDM: return "tdm";
    case MixPlanKind::CDM: return "cdm";
    case MixPlanKind::CleanSource: return "clean_src";
    case MixPlanKind::CleanTarget: return "clean_trg";
  }
  return "?";
}

namespace {

std::vector<size_t> entries_where(const DatasetManifest& m,
                                  const std::function<bool(const ManifestEntry&)>& pred) {
  std::vector<size_t> out;
  for (size_t i = 0; i < m.entries.size(); ++i) {
    if (pred(m.entries[i])) out.push_back(i);
  }
  return out;
}

size_t draw(SeededRng& rng, const std::vector<size_t>& pool) {
  return pool[rng.uniform_index(pool.size())];
}

// k distinct draws via partial Fisher-Yates; order is the draw order.
std::vector<size_t> draw_distinct(SeededRng& rng, std::vector<size_t> pool,
                                  size_t k) {
  k = std::min(k, pool.size());
  std::vector<size_t> out;
  out.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + rng.uniform_index(pool.size() - i);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

}  // namespace

std::vector<MixPlan> plan_ssda_batch(const DatasetManifest& manifest,
                                     const SsdaPlanConfig& cfg, SeededRng& rng,
                                     const DisparityLoader& load_disparity,
                                     size_t batch_index) {
  auto sources = entries_where(manifest, [](const ManifestEntry& e) {
    return e.domain == Domain::Source;
  });
  auto targets = entries_where(manifest, [](const ManifestEntry& e) {
    return e.domain == Domain::Target;
  });
  auto labeled_sources = entries_where(manifest, [](const ManifestEntry& e) {
    return e.domain == Domain::Source && e.labeled;
  });
  auto labeled_targets = entries_where(manifest, [](const ManifestEntry& e) {
    return e.domain == Domain::Target && e.labeled;
  });
  if (sources.empty() || targets.empty())
    fail(ErrorCode::Validation,
         "SSDA planning requires both source and target entries");
  if (labeled_sources.empty())
    fail(ErrorCode::Validation, "SSDA planning requires a labeled source entry");
  if (labeled_targets.empty())
    fail(ErrorCode::Validation, "SSDA planning requires a labeled target entry");
  if (cfg.geo.num_candidates < 1)
    fail(ErrorCode::Validation, "num_candidates must be >= 1");

  const auto& entries = manifest.entries;
  std::vector<MixPlan> plans;
  plans.reserve(4);

  auto base_plan = [&](MixPlanKind kind) {
    MixPlan p;
    p.kind = kind;
    p.batch = batch_index;
    p.epsilon = cfg.epsilon;
    p.seed = cfg.seed;
    return p;
  };

  {  // clean labeled source
    MixPlan p = base_plan(MixPlanKind::CleanSource);
    const auto& e = entries[draw(rng, labeled_sources)];
    p.sample_i = e.image_id;
    p.i_labeled = true;
    plans.push_back(std::move(p));
  }
  {  // clean labeled target
    MixPlan p = base_plan(MixPlanKind::CleanTarget);
    const auto& e = entries[draw(rng, labeled_targets)];
    p.sample_i = e.image_id;
    p.i_labeled = true;
    plans.push_back(std::move(p));
  }
  {  // target-domain DepthMix: two target samples
    MixPlan p = base_plan(MixPlanKind::TDM);
    size_t i = draw(rng, targets);
    size_t j = i;
    if (targets.size() > 1) {
      std::vector<size_t> others;
      others.reserve(targets.size() - 1);
      for (size_t t : targets) {
        if (t != i) others.push_back(t);
      }
      j = draw(rng, others);
    }
    p.sample_i = entries[i].image_id;
    p.sample_j = entries[j].image_id;
    p.i_labeled = entries[i].labeled;
    p.j_labeled = entries[j].labeled;
    plans.push_back(std::move(p));
  }
  {  // cross-domain DepthMix: target anchor, geometry-matched source
    MixPlan p = base_plan(MixPlanKind::CDM);
    size_t anchor = draw(rng, targets);
    std::vector<size_t> cand_idx =
        draw_distinct(rng, sources, cfg.geo.num_candidates);
    const ManifestEntry& anchor_entry = entries[anchor];
    DisparityMap anchor_disp = load_disparity(anchor_entry);
    std::vector<DisparityMap> cand_disp;
    cand_disp.reserve(cand_idx.size());
    for (size_t c : cand_idx) cand_disp.push_back(load_disparity(entries[c]));
    std::vector<GeoCandidate> cands;
    cands.reserve(cand_idx.size());
    for (size_t c = 0; c < cand_idx.size(); ++c)
      cands.push_back(GeoCandidate{entries[cand_idx[c]].image_id, &cand_disp[c]});
    GeoMatchResult match = match_geometry(anchor_disp, cands, cfg.geo);
    p.sample_i = anchor_entry.image_id;
    p.sample_j = match.chosen_id;
    p.i_labeled = anchor_entry.labeled;
    p.j_labeled = manifest.find(match.chosen_id).labeled;
    p.geometric_difference = match.difference;
    std::vector<std::string> cand_ids;
    cand_ids.reserve(cands.size());
    for (const auto& c : cands) cand_ids.push_back(c.id);
    p.candidates = std::move(cand_ids);
    plans.push_back(std::move(p));
  }
  return plans;
}

}  // namespace df
