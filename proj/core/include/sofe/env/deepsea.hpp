#pragma once

#include "sofe/env/env.hpp"

namespace sofe {

/// N x N descent task. The agent starts top-left; every step moves one row
/// down while the chosen action moves the column left or right (clipped to
/// the grid). Moving right costs -0.01/N, moving left is free, and +1 is
/// granted for the final right move out of the bottom-right cell. Episodes
/// last exactly N steps. Observations are the (1, N, N) one-hot of the
/// agent position; the terminal observation (row N) is all zeros.
class DeepSeaEnv : public Env {
 public:
  enum Action { move_left = 0, move_right = 1 };

  explicit DeepSeaEnv(EnvSpec spec);
  static EnvSpec make_spec(int n);

  StepResult reset(uint64_t seed) override;
  StepResult step(int action) override;
  int n_actions() const override { return 2; }
  std::vector<int> obs_shape() const override { return {1, n_, n_}; }
  const EnvSpec& spec() const override { return spec_; }
  Cell agent_cell() const override { return {row_, col_}; }
  int64_t state_key() const override { return static_cast<int64_t>(row_) * n_ + col_; }
  std::unique_ptr<Env> clone_fresh() const override { return std::make_unique<DeepSeaEnv>(spec_); }

 private:
  Tensor observe() const;

  EnvSpec spec_;
  int n_;
  int row_ = 0, col_ = 0;
  bool done_ = true;
};

}  // namespace sofe
