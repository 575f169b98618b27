#pragma once

#include <cstdint>
#include <string>

namespace sofe {

enum class Algo { tabular_q, dqn, a2c, ppo };

std::string to_string(Algo algo);

struct NetConfig {
  enum class Encoder { conv, dense };
  Encoder obs_encoder = Encoder::conv;
  int conv_channels = 16;
  int conv_layers = 2;
  int hidden = 128;       // branch output width
  int trunk_hidden = 128;
};

/// Hyperparameters for all algorithms. Defaults come from the reference
/// implementation tables; named presets scale the run sizes down for
/// desk-scale experiments.
struct AgentConfig {
  Algo algo = Algo::ppo;
  double gamma = 0.99;
  double learning_rate = 3e-4;
  int num_envs = 16;
  double max_grad_norm = 0.5;
  NetConfig net;

  // dqn
  int buffer_size = 1'000'000;
  int learning_starts = 50'000;
  int batch_size = 32;
  double tau = 1.0;
  int train_frequency = 4;
  int gradient_steps = 4;
  int target_update_interval = 10'000;
  double exploration_fraction = 0.1;
  double exploration_initial_eps = 1.0;
  double exploration_final_eps = 0.05;

  // a2c / ppo
  int n_steps = 2048;
  int n_epochs = 10;
  double gae_lambda = 0.95;
  double clip_range = 0.2;
  bool normalize_advantage = true;
  double ent_coef = 0.0;
  double vf_coef = 0.5;
  double rms_prop_eps = 1e-5;
  bool use_rms_prop = true;

  // tabular_q
  double alpha = 0.1;

  static AgentConfig defaults(Algo algo);
  void validate() const;
};

}  // namespace sofe
