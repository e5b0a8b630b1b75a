#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/raster.hpp"
#include "core/tensor.hpp"

namespace df {

struct FeatureEmbedding {
  std::string image_id;
  std::vector<double> vec;
};

// Per-component mean and standard deviation of the pooled feature vectors
// over the whole dataset. Zero-variance components normalize to 0.
struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> stddev;
};

// Average-pools a (channels, H, W) tensor onto a fixed 4x8 spatial grid
// (8 wide, 4 tall) and flattens channel-major. Uneven dimensions split
// into near-equal cells; H < 4 or W < 8 is an error.
std::vector<double> pool_features(const Tensor& chw);

FeatureStats compute_feature_stats(const std::vector<std::vector<double>>& pooled);

// Pool + z-score every raw feature tensor against dataset statistics.
// Input order is preserved; the dataset must be non-empty.
std::vector<FeatureEmbedding> preprocess_features(
    const std::vector<std::pair<std::string, Tensor>>& raw);

// Mean per-pixel |ln(1+teacher) - ln(1+student)| between disparity maps.
double uncertainty_score(const DisparityMap& student_disp,
                         const DisparityMap& teacher_disp);

// Min L2 distance from a candidate to the selected set (non-empty).
double diversity_distance(const FeatureEmbedding& candidate,
                          const std::vector<FeatureEmbedding>& selected);

struct SelectionConfig {
  std::vector<size_t> schedule = {25, 50, 100, 200, 372, 744};  // cumulative
  double lambda_e = 1000.0;
  uint64_t seed = 0;
  int threads = 1;
};

struct SelectionState {
  std::vector<std::string> selected;  // G_A in pick order
  std::set<std::string> remaining;    // G_U
  size_t step = 1;                    // next step to run, 1-based
  std::map<std::string, double> uncertainty;  // E(i) for the current step

  static SelectionState initial(const std::vector<std::string>& ids);
  void check_partition(size_t total) const;
};

using PickObserver = std::function<void(const SelectionState&)>;

// Runs one schedule step: greedily moves ids from remaining to selected
// until |selected| reaches the step's cumulative count. Step 1 uses pure
// farthest-point diversity (the very first pick is drawn uniformly from
// the seed); later steps add lambda_e * E(i) and require an uncertainty
// for every remaining id. Ties break to the lowest image_id.
SelectionState select_step(SelectionState state,
                           const std::vector<FeatureEmbedding>& embeddings,
                           const SelectionConfig& cfg,
                           const PickObserver& on_pick = nullptr);

// Supplies E(i) for every remaining id at the start of step >= 2.
using UncertaintyProvider = std::function<std::map<std::string, double>(
    size_t step, const std::set<std::string>& remaining)>;

// Per-step results of a full Alg.-1 run.
struct SelectionRun {
  std::vector<std::vector<std::string>> per_step;  // G_A snapshot after each step
  SelectionState final_state;
};

SelectionRun run_selection(const std::vector<FeatureEmbedding>& embeddings,
                           const SelectionConfig& cfg,
                           const UncertaintyProvider& provider,
                           const std::function<void(size_t step,
                                                    const std::vector<std::string>&)>&
                               on_step_complete = nullptr);

// Ratio of class pixels in the selected maps to class pixels in the full
// set. Ignore-index pixels are excluded. A class absent from the full set
// has no defined ratio.
struct ClassFrequencyReport {
  std::vector<uint64_t> selected_pixels;
  std::vector<uint64_t> full_pixels;
  std::vector<std::optional<double>> ratio;
};

ClassFrequencyReport class_frequency_report(const std::vector<SegMap>& selected,
                                            const std::vector<SegMap>& full);

}  // namespace df
