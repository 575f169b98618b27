#include "sofe/env/maze.hpp"

namespace sofe {

MazeEnv::MazeEnv(EnvSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  agent_ = spec_.start;
}

Tensor MazeEnv::observe() const {
  Tensor obs({3, spec_.height, spec_.width});
  obs.at(0, agent_.row, agent_.col) = 1.0;
  for (int r = 0; r < spec_.height; ++r)
    for (int c = 0; c < spec_.width; ++c)
      if (spec_.is_wall(r, c)) obs.at(1, r, c) = 1.0;
  if (spec_.goal) obs.at(2, spec_.goal->row, spec_.goal->col) = 1.0;
  return obs;
}

StepResult MazeEnv::reset(uint64_t /*seed*/) {
  agent_ = spec_.start;
  step_index_ = 0;
  done_ = false;
  return {observe(), 0.0, false, agent_, 0};
}

StepResult MazeEnv::step(int action) {
  if (done_) throw std::logic_error("MazeEnv::step on a finished episode");
  if (action < 0 || action >= 4) throw std::invalid_argument("MazeEnv::step: bad action");
  static constexpr int kDr[4] = {-1, 0, 1, 0};
  static constexpr int kDc[4] = {0, 1, 0, -1};
  Cell target{agent_.row + kDr[action], agent_.col + kDc[action]};
  const bool in_bounds = target.row >= 0 && target.row < spec_.height && target.col >= 0 &&
                         target.col < spec_.width;
  if (in_bounds && !spec_.is_wall(target.row, target.col)) agent_ = target;
  ++step_index_;

  double reward = 0.0;
  const bool goal_entered = spec_.goal.has_value() && agent_ == *spec_.goal;
  if (goal_entered) reward = 1.0;
  done_ = goal_entered || step_index_ >= spec_.max_steps;
  return {observe(), reward, done_, agent_, step_index_};
}

}  // namespace sofe
