#pragma once

#include <memory>

#include "sofe/augment/encoding.hpp"
#include "sofe/bonus/engine.hpp"
#include "sofe/env/env.hpp"

namespace sofe {

/// Base observation plus the encoded sufficient statistics of the active
/// bonus. `stats` is empty when the encoding is none.
struct AugmentedObservation {
  Tensor base;
  Tensor stats;
};

struct AugStepResult {
  AugmentedObservation obs;
  double extrinsic = 0.0;
  double intrinsic = 0.0;  // unscaled bonus
  double combined = 0.0;   // extrinsic + intrinsic_scale * intrinsic
  bool done = false;
  Cell cell;
  int step_index = 0;
};

/// Wraps an environment with a bonus engine and a statistics encoding. The
/// wrapper never alters the underlying dynamics; it only augments the
/// observation and replaces the reward with the combined learning target.
/// The engine is shared so that global-scope statistics can span several
/// wrapped instances stepped from one thread.
class AugmentedEnv {
 public:
  AugmentedEnv(std::unique_ptr<Env> env, std::shared_ptr<BonusEngine> engine, StatEncoding enc);

  AugStepResult reset(uint64_t seed);
  AugStepResult step(int action);

  Env& env() { return *env_; }
  const Env& env() const { return *env_; }
  BonusEngine& engine() { return *engine_; }
  const StatEncoding& encoding() const { return enc_; }
  int n_actions() const { return env_->n_actions(); }
  std::vector<int> obs_shape() const { return env_->obs_shape(); }
  std::vector<int> stats_shape() const {
    return encoded_stats_shape(*engine_, enc_, env_->spec());
  }

 private:
  std::unique_ptr<Env> env_;
  std::shared_ptr<BonusEngine> engine_;
  StatEncoding enc_;
};

}  // namespace sofe
