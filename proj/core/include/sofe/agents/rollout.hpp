#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sofe/tensor.hpp"

namespace sofe {

struct GaeResult {
  std::vector<double> advantages;
  std::vector<double> returns;  // advantages + values
};

/// Generalized advantage estimation over one env stream.
/// `values` has length T+1: the value of each visited state plus the
/// bootstrap value of the state after the last step (callers pass 0 for
/// terminal). `dones[t]` cuts the recursion after step t.
GaeResult gae(std::span<const double> rewards, std::span<const double> values,
              std::span<const uint8_t> dones, double gamma, double lambda);

/// Fixed-horizon on-policy buffer for n_steps transitions per env.
/// Advantages must be computed before consumption.
class RolloutBuffer {
 public:
  RolloutBuffer(int num_envs, int n_steps);

  void clear();
  void push(int env, Tensor obs, Tensor stats, int action, double logprob, double value,
            double reward, bool done);
  /// Bootstrap values of the state after the final step, one per env.
  void finish(std::span<const double> last_values, double gamma, double lambda);

  bool full() const;
  int num_envs() const { return num_envs_; }
  int n_steps() const { return n_steps_; }
  int64_t size() const { return static_cast<int64_t>(num_envs_) * n_steps_; }

  struct Entry {
    const Tensor* obs;
    const Tensor* stats;
    int action;
    double logprob;
    double value;
    double reward;
    bool done;
    double advantage;
    double ret;
  };
  /// Flat view in (env-major, step-minor) order; valid after finish().
  Entry entry(int64_t flat_index) const;

 private:
  struct Step {
    Tensor obs, stats;
    int action = 0;
    double logprob = 0.0, value = 0.0, reward = 0.0;
    bool done = false;
    double advantage = 0.0, ret = 0.0;
  };
  int num_envs_, n_steps_;
  std::vector<std::vector<Step>> streams_;  // [env][step]
  bool finished_ = false;
};

}  // namespace sofe
