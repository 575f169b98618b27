#include "sofe/bonus/gaussian_stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sofe {

GaussianStats::GaussianStats(int dim, double sigma_floor) : dim_(dim), sigma_floor_(sigma_floor) {
  if (dim < 1) throw std::invalid_argument("GaussianStats: dim must be >= 1");
  if (sigma_floor <= 0.0) throw std::invalid_argument("GaussianStats: sigma_floor must be > 0");
  mean_.assign(static_cast<size_t>(dim_), 0.0);
  m2_.assign(static_cast<size_t>(dim_), 0.0);
}

void GaussianStats::reset() {
  std::fill(mean_.begin(), mean_.end(), 0.0);
  std::fill(m2_.begin(), m2_.end(), 0.0);
  n_ = 0;
}

void GaussianStats::update(std::span<const double> x) {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("GaussianStats::update: dimension mismatch");
  ++n_;
  for (int i = 0; i < dim_; ++i) {
    const double delta = x[i] - mean_[static_cast<size_t>(i)];
    mean_[static_cast<size_t>(i)] += delta / static_cast<double>(n_);
    m2_[static_cast<size_t>(i)] += delta * (x[i] - mean_[static_cast<size_t>(i)]);
  }
}

double GaussianStats::variance(int i) const {
  if (n_ == 0) return 1.0;  // prior before any sample
  const double v = m2_[static_cast<size_t>(i)] / static_cast<double>(n_);
  return std::max(v, sigma_floor_);
}

double GaussianStats::neg_log_density(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("GaussianStats::neg_log_density: dimension mismatch");
  double out = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double var = variance(i);
    const double d = x[i] - mean_[static_cast<size_t>(i)];
    out += 0.5 * std::log(2.0 * std::numbers::pi * var) + d * d / (2.0 * var);
  }
  return out;
}

}  // namespace sofe
