#pragma once

#include <cstdint>

namespace sofe {

/// Linear epsilon decay over the first `fraction` of total steps, constant
/// afterwards.
struct EpsilonSchedule {
  double initial_eps = 1.0;
  double final_eps = 0.05;
  double fraction = 0.1;
  int64_t total_steps = 1;
};

inline double epsilon_at(int64_t step, const EpsilonSchedule& s) {
  const double horizon = s.fraction * static_cast<double>(s.total_steps);
  if (horizon <= 0.0) return s.final_eps;
  const double t = static_cast<double>(step) / horizon;
  if (t >= 1.0) return s.final_eps;
  return s.initial_eps + t * (s.final_eps - s.initial_eps);
}

}  // namespace sofe
