#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "sofe/bonus/count_table.hpp"
#include "sofe/bonus/ellipsoid.hpp"
#include "sofe/bonus/feature_map.hpp"
#include "sofe/bonus/gaussian_stats.hpp"
#include "sofe/env/env.hpp"

namespace sofe {

enum class BonusKind { none, count_sqrt, count_salesman, e3b, smax };
enum class BonusScope { episodic, global };

struct BonusConfig {
  BonusKind kind = BonusKind::none;
  double beta = 1.0;        // weight of the dense count bonus
  double lambda = 0.1;      // ellipsoid ridge
  double sigma_floor = 1e-4;
  BonusScope scope = BonusScope::episodic;
  double intrinsic_scale = 1.0;

  void validate() const;
};

std::string to_string(BonusKind kind);
std::string to_string(BonusScope scope);

/// Owns the sufficient statistics of one intrinsic bonus and applies the
/// per-kind ordering contract on each transition:
///   - salesman reads the pre-arrival count, then the count updates;
///   - sqrt updates the count first, then reads the post-arrival count;
///   - e3b and smax compute the bonus with pre-update statistics, then
///     update.
/// Episodic scope resets the statistics at every episode start; global
/// scope persists them across episodes.
class BonusEngine {
 public:
  /// Builds the default feature maps for the env: one-hot grid cells for
  /// e3b, (row, col) coordinates for smax.
  BonusEngine(BonusConfig cfg, const EnvSpec& spec);
  BonusEngine(BonusConfig cfg, FeatureMap features);

  const BonusConfig& config() const { return cfg_; }

  /// Marks an episode start: resets statistics under episodic scope
  /// (reapplying any seeded count prior) and incorporates the start state
  /// without producing a bonus.
  void begin_episode(int64_t start_key, const Tensor& start_obs);

  /// Bonus for arriving at next_key, with the statistics updated per the
  /// ordering contract. Returns the unscaled intrinsic reward.
  double on_transition(int64_t next_key, const Tensor& next_obs);

  /// Installs a count prior. Under episodic scope the prior is reapplied at
  /// every episode start.
  void seed_counts(const std::unordered_map<int64_t, int64_t>& prior);

  bool has_counts() const { return cfg_.kind == BonusKind::count_sqrt || cfg_.kind == BonusKind::count_salesman; }
  const CountTable& counts() const { return table_; }
  const EllipsoidState& ellipsoid() const { return *ellipsoid_; }
  const GaussianStats& gaussian() const { return *gaussian_; }
  const FeatureMap& features() const { return *features_; }

 private:
  void reset_stats();
  void absorb(int64_t key, const Tensor& obs);

  BonusConfig cfg_;
  CountTable table_;
  std::optional<EllipsoidState> ellipsoid_;
  std::optional<GaussianStats> gaussian_;
  std::optional<FeatureMap> features_;
  std::unordered_map<int64_t, int64_t> count_prior_;
};

}  // namespace sofe
