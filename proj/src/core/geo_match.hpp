#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/manifest.hpp"
#include "core/raster.hpp"
#include "core/rng.hpp"

namespace df {

struct GeoMatchConfig {
  // Crop margins masking SDE artifacts (sky, ego-car hood). Stated for
  // 512-tall images; unless absolute_margins is set they scale
  // proportionally with the input height.
  uint32_t top_margin = 80;
  uint32_t bottom_margin = 100;
  bool absolute_margins = false;
  uint32_t num_candidates = 5;
  int threads = 1;
};

// Mean per-pixel |ln(1+disp_i) - ln(1+disp_j)| over the rows left after
// cropping the margins.
double geometric_difference(const DisparityMap& disp_i, const DisparityMap& disp_j,
                            const GeoMatchConfig& cfg);

// Candidate with the smallest geometric difference; ties to lowest id.
struct GeoCandidate {
  std::string id;
  const DisparityMap* disparity;
};

struct GeoMatchResult {
  std::string chosen_id;
  double difference = 0.0;
  std::vector<std::pair<std::string, double>> scored;  // every candidate
};

GeoMatchResult match_geometry(const DisparityMap& target_disp,
                              const std::vector<GeoCandidate>& candidates,
                              const GeoMatchConfig& cfg);

enum class MixPlanKind { TDM, CDM, CleanSource, CleanTarget };

const char* mix_plan_kind_name(MixPlanKind k);

// Declarative record of one planned mixing event. quality_weight is only
// known once the mix is executed, so it stays unset here.
struct MixPlan {
  MixPlanKind kind;
  size_t batch = 0;
  std::string sample_i;                 // pasted-from sample (target for CDM)
  std::optional<std::string> sample_j;  // absent for clean plans
  bool i_labeled = false;
  bool j_labeled = false;
  double epsilon = 0.03;
  std::optional<double> quality_weight;
  std::optional<double> geometric_difference;  // CDM winner's G
  std::optional<std::vector<std::string>> candidates;  // CDM candidate ids
  uint64_t seed = 0;
};

struct SsdaPlanConfig {
  GeoMatchConfig geo;
  double epsilon = 0.03;
  uint64_t seed = 0;
};

// Loads a disparity raster for a manifest entry on demand.
using DisparityLoader = std::function<DisparityMap(const ManifestEntry&)>;

// Plans one SSDA training batch: clean labeled source, clean labeled
// target, one TDM pair (two target samples) and one CDM pair (target
// anchor drawn first, then geometry-matched source winner). All draws
// come from the supplied RNG stream, one stream per run.
std::vector<MixPlan> plan_ssda_batch(const DatasetManifest& manifest,
                                     const SsdaPlanConfig& cfg, SeededRng& rng,
                                     const DisparityLoader& load_disparity,
                                     size_t batch_index = 0);

}  // namespace df
