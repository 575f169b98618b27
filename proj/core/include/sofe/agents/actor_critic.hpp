#pragma once

#include <memory>
#include <optional>
#include <random>

#include "sofe/agents/config.hpp"
#include "sofe/agents/rollout.hpp"
#include "sofe/nn/network.hpp"
#include "sofe/nn/optimizer.hpp"

namespace sofe {

struct AcLosses {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
};

/// On-policy actor-critic covering both update rules:
///   - a2c: one gradient step on the whole rollout with GAE(lambda)
///     advantages, optionally RMSProp, no advantage normalization;
///   - ppo: clipped-surrogate objective over n_epochs of shuffled
///     minibatches with per-minibatch advantage normalization.
/// The total loss is policy + vf_coef * value - ent_coef * entropy.
class ActorCriticAgent {
 public:
  ActorCriticAgent(const AgentConfig& cfg, std::vector<int> obs_shape,
                   std::optional<std::vector<int>> stats_shape, int n_actions, uint64_t seed);

  struct ActResult {
    int action = 0;
    double logprob = 0.0;
    double value = 0.0;
  };
  ActResult act(const Tensor& obs, const Tensor* stats);
  int act_greedy(const Tensor& obs, const Tensor* stats);
  double value(const Tensor& obs, const Tensor* stats);

  AcLosses update(const RolloutBuffer& rollout);

  nn::ActorCriticNet& net() { return *net_; }
  std::mt19937_64& rng() { return rng_; }
  const AgentConfig& config() const { return cfg_; }
  std::vector<std::pair<std::string, Tensor*>> named_parameters() {
    return net_->named_parameters();
  }

 private:
  AcLosses train_minibatch(const RolloutBuffer& rollout, std::span<const int64_t> indices);

  AgentConfig cfg_;
  std::mt19937_64 rng_;
  std::unique_ptr<nn::ActorCriticNet> net_;
  std::unique_ptr<nn::Optimizer> opt_;
};

}  // namespace sofe
