#pragma once

#include <string>

#include "sofe/harness/config.hpp"
#include "sofe/harness/metrics.hpp"

namespace sofe {

struct SeedSummary {
  uint64_t seed = 0;
  int64_t steps_trained = 0;
  double final_eval_return = 0.0;
  double final_eval_coverage = 0.0;
  bool early_stopped = false;
};

struct ExperimentResult {
  MetricsLog train_log;  // all seeds, ordered by seed
  EvalLog eval_log;
  std::vector<SeedSummary> seeds;
};

/// Trains every seed in the config (in parallel when run.parallel), writing
/// per-seed artifacts under cfg.output_dir:
///   train_seed<K>.csv, eval_seed<K>.csv, final_eval_seed<K>.csv,
///   heatmap_seed<K>.{csv,pgm}, checkpoint_seed<K>.ckpt{,.json}
/// plus manifest.json echoing the resolved config. Each seed's run is fully
/// deterministic given (config, seed).
ExperimentResult run_experiment(const ExperimentConfig& cfg, bool quiet = false);

/// Single-seed variant; artifacts go to out_dir when nonempty.
ExperimentResult run_single_seed(const ExperimentConfig& cfg, uint64_t seed,
                                 const std::string& out_dir, bool quiet = true);

/// Greedy evaluation of a checkpoint against the config's environment.
/// Returns (mean extrinsic return, mean episodic coverage).
std::pair<double, double> evaluate_checkpoint(const ExperimentConfig& cfg,
                                              const std::string& checkpoint_path, int episodes);

}  // namespace sofe
