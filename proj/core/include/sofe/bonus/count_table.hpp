#pragma once

#include <cstdint>
#include <unordered_map>

namespace sofe {

/// Per-state visitation frequencies, the sufficient statistic of the
/// count-based bonuses. Counts never decrease within a scope.
struct CountTable {
  std::unordered_map<int64_t, int64_t> counts;
  int64_t total = 0;

  void update(int64_t state_key) {
    ++counts[state_key];
    ++total;
  }

  int64_t count(int64_t state_key) const {
    auto it = counts.find(state_key);
    return it == counts.end() ? 0 : it->second;
  }

  /// Initializes the table from a prior; later updates increment on top.
  void seed(const std::unordered_map<int64_t, int64_t>& prior) {
    counts = prior;
    total = 0;
    for (const auto& [_, n] : counts) total += n;
  }

  void clear() {
    counts.clear();
    total = 0;
  }
};

/// Dense bonus beta / sqrt(N(s')). Must be queried after the arrival state
/// was counted, so the count is >= 1; a zero count is an update-ordering bug
/// and throws std::logic_error.
double count_bonus_sqrt(const CountTable& table, int64_t state_key, double beta);

/// Sparse first-visit bonus: 1 if the pre-arrival count is 0, else 0.
/// Must be queried before the arrival state is counted.
double count_bonus_salesman(const CountTable& table, int64_t state_key);

/// extrinsic + intrinsic_scale * intrinsic.
inline double combine_rewards(double extrinsic, double intrinsic, double intrinsic_scale) {
  return extrinsic + intrinsic_scale * intrinsic;
}

}  // namespace sofe
