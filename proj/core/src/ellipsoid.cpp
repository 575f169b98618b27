#include "sofe/bonus/ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace sofe {

EllipsoidState::EllipsoidState(int dim, double lambda) : dim_(dim), lambda_(lambda) {
  if (dim < 1) throw std::invalid_argument("EllipsoidState: dim must be >= 1");
  if (lambda <= 0.0) throw std::invalid_argument("EllipsoidState: lambda must be > 0");
  c_.assign(static_cast<size_t>(dim_) * dim_, 0.0);
  c_inv_.assign(static_cast<size_t>(dim_) * dim_, 0.0);
  scratch_.assign(static_cast<size_t>(dim_), 0.0);
  reset();
}

void EllipsoidState::reset() {
  std::fill(c_.begin(), c_.end(), 0.0);
  std::fill(c_inv_.begin(), c_inv_.end(), 0.0);
  for (int i = 0; i < dim_; ++i) {
    c_[static_cast<size_t>(i) * dim_ + i] = lambda_;
    c_inv_[static_cast<size_t>(i) * dim_ + i] = 1.0 / lambda_;
  }
}

double EllipsoidState::bonus(std::span<const double> psi) const {
  if (static_cast<int>(psi.size()) != dim_)
    throw std::invalid_argument("EllipsoidState::bonus: dimension mismatch");
  // scratch = C_inv * psi; result = psi . scratch
  double out = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double* row = c_inv_.data() + static_cast<size_t>(i) * dim_;
    double acc = 0.0;
    for (int j = 0; j < dim_; ++j) acc += row[j] * psi[j];
    scratch_[static_cast<size_t>(i)] = acc;
    out += psi[i] * acc;
  }
  return out;
}

void EllipsoidState::update(std::span<const double> psi) {
  if (static_cast<int>(psi.size()) != dim_)
    throw std::invalid_argument("EllipsoidState::update: dimension mismatch");
  // u = C_inv * psi (C_inv is symmetric, so this is also psi^T C_inv).
  std::vector<double> u(static_cast<size_t>(dim_));
  double quad = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double* row = c_inv_.data() + static_cast<size_t>(i) * dim_;
    double acc = 0.0;
    for (int j = 0; j < dim_; ++j) acc += row[j] * psi[j];
    u[static_cast<size_t>(i)] = acc;
    quad += psi[i] * acc;
  }
  const double denom = 1.0 + quad;
  for (int i = 0; i < dim_; ++i) {
    double* inv_row = c_inv_.data() + static_cast<size_t>(i) * dim_;
    double* c_row = c_.data() + static_cast<size_t>(i) * dim_;
    const double ui = u[static_cast<size_t>(i)];
    const double pi = psi[i];
    for (int j = 0; j < dim_; ++j) {
      inv_row[j] -= ui * u[static_cast<size_t>(j)] / denom;
      c_row[j] += pi * psi[j];
    }
  }
}

double EllipsoidState::inverse_drift() const {
  double max_err = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      double acc = 0.0;
      const double* c_row = c_.data() + static_cast<size_t>(i) * dim_;
      for (int k = 0; k < dim_; ++k) acc += c_row[k] * c_inv_[static_cast<size_t>(k) * dim_ + j];
      const double target = i == j ? 1.0 : 0.0;
      max_err = std::max(max_err, std::abs(acc - target));
    }
  }
  return max_err;
}

OneHotEquivalenceReport e3b_onehot_equivalence_check(std::span<const int> trace, int dim,
                                                     double lambda) {
  EllipsoidState ell(dim, lambda);
  std::unordered_map<int, int64_t> pre_counts;
  std::vector<double> psi(static_cast<size_t>(dim), 0.0);
  OneHotEquivalenceReport report;
  for (int s : trace) {
    if (s < 0 || s >= dim)
      throw std::invalid_argument("e3b_onehot_equivalence_check: state out of range");
    psi[static_cast<size_t>(s)] = 1.0;
    const double bonus = ell.bonus(psi);
    const double expected = 1.0 / (lambda + static_cast<double>(pre_counts[s]));
    const double abs_dev = std::abs(bonus - expected);
    report.max_abs_deviation = std::max(report.max_abs_deviation, abs_dev);
    report.max_rel_deviation = std::max(report.max_rel_deviation, abs_dev / expected);
    ++report.steps;
    ell.update(psi);
    ++pre_counts[s];
    psi[static_cast<size_t>(s)] = 0.0;
  }
  return report;
}

}  // namespace sofe
