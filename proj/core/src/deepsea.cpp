#include "sofe/env/deepsea.hpp"

namespace sofe {

EnvSpec DeepSeaEnv::make_spec(int n) {
  EnvSpec spec;
  spec.kind = EnvKind::deepsea;
  spec.width = spec.height = spec.deepsea_n = n;
  spec.walls.assign(static_cast<size_t>(n) * n, 0);
  spec.start = {0, 0};
  spec.goal = Cell{n - 1, n - 1};
  spec.max_steps = n;
  return spec;
}

DeepSeaEnv::DeepSeaEnv(EnvSpec spec) : spec_(std::move(spec)), n_(spec_.deepsea_n) {
  spec_.validate();
}

Tensor DeepSeaEnv::observe() const {
  Tensor obs({1, n_, n_});
  if (row_ < n_) obs.at(0, row_, col_) = 1.0;
  return obs;
}

StepResult DeepSeaEnv::reset(uint64_t /*seed*/) {
  row_ = 0;
  col_ = 0;
  done_ = false;
  return {observe(), 0.0, false, {row_, col_}, 0};
}

StepResult DeepSeaEnv::step(int action) {
  if (done_) throw std::logic_error("DeepSeaEnv::step on a finished episode");
  if (action != move_left && action != move_right)
    throw std::invalid_argument("DeepSeaEnv::step: bad action");

  double reward = 0.0;
  const bool at_treasure_column = row_ == n_ - 1 && col_ == n_ - 1;
  if (action == move_right) {
    reward -= 0.01 / n_;
    if (at_treasure_column) reward += 1.0;  // final right move out of the bottom-right cell
    col_ = std::min(col_ + 1, n_ - 1);
  } else {
    col_ = std::max(col_ - 1, 0);
  }
  ++row_;
  done_ = row_ >= n_;
  return {observe(), reward, done_, {row_, col_}, row_};
}

}  // namespace sofe
