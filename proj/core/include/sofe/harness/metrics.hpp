#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sofe {

/// One training-log row, written per completed episode.
struct MetricsRow {
  uint64_t seed = 0;
  int64_t env_step = 0;
  int64_t episode = 0;
  double extrinsic_return = 0.0;
  double intrinsic_return = 0.0;
  double episode_coverage = 0.0;
  double global_coverage = 0.0;
};

struct MetricsLog {
  std::vector<MetricsRow> rows;

  static const char* csv_header();  // column names, fixed order
  std::string to_csv() const;
  static MetricsLog from_csv(const std::string& text);
  void write_csv(const std::string& path) const;
  static MetricsLog read_csv(const std::string& path);
};

/// One evaluation-point row.
struct EvalRow {
  uint64_t seed = 0;
  int64_t env_step = 0;
  double mean_extrinsic_return = 0.0;
  double mean_episode_coverage = 0.0;
  int episodes = 0;
};

struct EvalLog {
  std::vector<EvalRow> rows;

  static const char* csv_header();
  std::string to_csv() const;
  static EvalLog from_csv(const std::string& text);
  void write_csv(const std::string& path) const;
  static EvalLog read_csv(const std::string& path);
};

/// Tracks visited cells against a fixed reachable-count denominator. The
/// episodic set resets every episode; the global set only grows.
class CoverageTracker {
 public:
  explicit CoverageTracker(int denominator);

  void begin_episode(int64_t key);
  void visit(int64_t key);

  double episodic_coverage() const;
  double global_coverage() const;
  int denominator() const { return denominator_; }
  const std::unordered_map<int64_t, int64_t>& visit_counts() const { return visit_counts_; }

 private:
  int denominator_;
  std::unordered_set<int64_t> episodic_, global_;
  std::unordered_map<int64_t, int64_t> visit_counts_;
};

/// Interquartile mean: drops the lowest and highest floor(n/4) values and
/// averages the rest. n < 4 degenerates to the plain mean. Throws on empty
/// input.
double iqm(std::vector<double> values);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Percentile bootstrap interval for the pooled IQM, resampling within each
/// seed stratum. Deterministic for a fixed rng_seed.
Interval stratified_bootstrap_ci(const std::vector<std::vector<double>>& per_seed_samples,
                                 int iters = 2000, double level = 0.95,
                                 uint64_t rng_seed = 0x5eedbeef);

}  // namespace sofe
