#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sofe {

/// Running per-dimension mean and variance of the visited states, the
/// sufficient statistic of the surprise bonus. Uses Welford's incremental
/// update; variance is the population form m2/n, floored at sigma_floor
/// when queried. Before any sample the unit-variance zero-mean prior
/// applies.
class GaussianStats {
 public:
  GaussianStats(int dim, double sigma_floor);

  int dim() const { return dim_; }
  int64_t n() const { return n_; }
  double sigma_floor() const { return sigma_floor_; }

  void update(std::span<const double> x);

  double mean(int i) const { return mean_[static_cast<size_t>(i)]; }
  double variance(int i) const;

  /// -log p(x) under the diagonal Gaussian with the current (floored)
  /// statistics. This is the surprise bonus; it must be computed before
  /// update() incorporates x.
  double neg_log_density(std::span<const double> x) const;

  void reset();

 private:
  int dim_;
  double sigma_floor_;
  std::vector<double> mean_, m2_;
  int64_t n_ = 0;
};

}  // namespace sofe
