#pragma once

#include "sofe/env/env.hpp"

namespace sofe {

/// Four-action gridworld over an EnvSpec. Observations are 3 boolean
/// channels (avatar, wall, goal) of shape (3, height, width). Moving into a
/// wall keeps the agent in place. Extrinsic reward is 1 exactly when the
/// goal cell is entered, which also ends the episode; otherwise the episode
/// ends after max_steps.
class MazeEnv : public Env {
 public:
  enum Action { up = 0, right = 1, down = 2, left = 3 };

  explicit MazeEnv(EnvSpec spec);

  StepResult reset(uint64_t seed) override;
  StepResult step(int action) override;
  int n_actions() const override { return 4; }
  std::vector<int> obs_shape() const override { return {3, spec_.height, spec_.width}; }
  const EnvSpec& spec() const override { return spec_; }
  Cell agent_cell() const override { return agent_; }
  int64_t state_key() const override { return spec_.cell_key(agent_); }
  std::unique_ptr<Env> clone_fresh() const override { return std::make_unique<MazeEnv>(spec_); }

 private:
  Tensor observe() const;

  EnvSpec spec_;
  Cell agent_;
  int step_index_ = 0;
  bool done_ = true;
};

}  // namespace sofe
