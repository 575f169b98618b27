#pragma once

#include <span>
#include <vector>

namespace sofe {

/// Running feature covariance ellipsoid C = lambda*I + sum psi psi^T with a
/// maintained inverse, the sufficient statistic of the elliptical bonus.
/// The inverse is kept current with rank-1 (Sherman-Morrison) updates, so
/// both the bonus and the update are O(d^2).
class EllipsoidState {
 public:
  EllipsoidState(int dim, double lambda);

  int dim() const { return dim_; }
  double lambda() const { return lambda_; }

  /// psi^T C^{-1} psi with the current (pre-update) ellipsoid. Strictly
  /// positive for nonzero psi. Throws std::invalid_argument on dimension
  /// mismatch.
  double bonus(std::span<const double> psi) const;

  /// C <- C + psi psi^T; the inverse follows by the rank-1 identity
  /// C^{-1} <- C^{-1} - (C^{-1} psi)(psi^T C^{-1}) / (1 + psi^T C^{-1} psi).
  /// The denominator is positive because C is positive definite.
  void update(std::span<const double> psi);

  /// Back to the fresh C = lambda*I state (episodic scope reset).
  void reset();

  const std::vector<double>& covariance() const { return c_; }
  const std::vector<double>& inverse() const { return c_inv_; }
  double inverse_at(int i, int j) const { return c_inv_[static_cast<size_t>(i) * dim_ + j]; }

  /// max |C*C_inv - I| entry, the maintained-inverse drift.
  double inverse_drift() const;

 private:
  int dim_;
  double lambda_;
  std::vector<double> c_, c_inv_;
  mutable std::vector<double> scratch_;
};

/// Per-step report of the one-hot reduction check: with one-hot features the
/// elliptical bonus must equal 1 / (lambda + N_pre(s)) where N_pre counts
/// prior visits within the trace.
struct OneHotEquivalenceReport {
  int steps = 0;
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;
};

/// Replays `trace` (state indices in [0, dim)) through a fresh ellipsoid
/// with one-hot features and compares each pre-update bonus against the
/// inverse pre-arrival count.
OneHotEquivalenceReport e3b_onehot_equivalence_check(std::span<const int> trace, int dim,
                                                     double lambda);

}  // namespace sofe
