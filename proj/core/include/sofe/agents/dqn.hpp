#pragma once

#include <memory>
#include <optional>
#include <random>

#include "sofe/agents/config.hpp"
#include "sofe/agents/replay_buffer.hpp"
#include "sofe/agents/schedule.hpp"
#include "sofe/nn/network.hpp"
#include "sofe/nn/optimizer.hpp"

namespace sofe {

/// Deep Q-learning with a target network. The target is synchronized by a
/// hard copy (tau = 1) every target_update_interval env steps; tau < 1
/// interpolates instead. Updates run gradient_steps times every
/// train_frequency env steps once learning_starts transitions are stored.
class DqnAgent {
 public:
  DqnAgent(const AgentConfig& cfg, std::vector<int> obs_shape,
           std::optional<std::vector<int>> stats_shape, int n_actions, uint64_t seed);

  /// Epsilon-greedy action; greedy ties break toward the lowest index.
  int act(const Tensor& obs, const Tensor* stats, double epsilon);
  int act_greedy(const Tensor& obs, const Tensor* stats);

  void observe(Transition t) { buffer_.push(std::move(t)); }

  /// Drives the train_frequency / target-sync bookkeeping; `env_step` is the
  /// global environment step count. Returns the mean TD loss when an update
  /// ran.
  std::optional<double> on_env_step(int64_t env_step);

  /// One gradient step on a uniformly sampled batch; exposed for tests.
  double train_batch();

  nn::QNet& net() { return *online_; }
  nn::QNet& target_net() { return *target_; }
  void sync_target();
  int64_t buffer_size() const { return buffer_.size(); }
  std::mt19937_64& rng() { return rng_; }

  std::vector<std::pair<std::string, Tensor*>> named_parameters() {
    return online_->named_parameters();
  }

 private:
  AgentConfig cfg_;
  std::mt19937_64 rng_;
  std::unique_ptr<nn::QNet> online_, target_;
  std::unique_ptr<nn::Optimizer> opt_;
  ReplayBuffer buffer_;
};

}  // namespace sofe
