#include "sofe/agents/config.hpp"

#include <stdexcept>

namespace sofe {

std::string to_string(Algo algo) {
  switch (algo) {
    case Algo::tabular_q: return "tabular_q";
    case Algo::dqn: return "dqn";
    case Algo::a2c: return "a2c";
    case Algo::ppo: return "ppo";
  }
  return "?";
}

AgentConfig AgentConfig::defaults(Algo algo) {
  AgentConfig cfg;
  cfg.algo = algo;
  switch (algo) {
    case Algo::dqn:
      cfg.learning_rate = 1e-4;
      cfg.num_envs = 16;
      cfg.buffer_size = 1'000'000;
      cfg.learning_starts = 50'000;
      cfg.batch_size = 32;
      cfg.tau = 1.0;
      cfg.train_frequency = 4;
      cfg.gradient_steps = 4;
      cfg.target_update_interval = 10'000;
      cfg.exploration_fraction = 0.1;
      cfg.exploration_initial_eps = 1.0;
      cfg.exploration_final_eps = 0.05;
      cfg.max_grad_norm = 10.0;
      break;
    case Algo::ppo:
      cfg.learning_rate = 3e-4;
      cfg.num_envs = 16;
      cfg.n_steps = 2048;
      cfg.batch_size = 64;
      cfg.n_epochs = 10;
      cfg.gae_lambda = 0.95;
      cfg.clip_range = 0.2;
      cfg.normalize_advantage = true;
      cfg.ent_coef = 0.0;
      cfg.vf_coef = 0.5;
      cfg.max_grad_norm = 0.5;
      cfg.use_rms_prop = false;  // adam
      break;
    case Algo::a2c:
      cfg.learning_rate = 7e-4;
      cfg.num_envs = 16;
      cfg.n_steps = 5;
      cfg.gae_lambda = 1.0;
      cfg.ent_coef = 0.0;
      cfg.vf_coef = 0.5;
      cfg.max_grad_norm = 0.5;
      cfg.rms_prop_eps = 1e-5;
      cfg.use_rms_prop = true;
      cfg.normalize_advantage = false;
      cfg.n_epochs = 1;
      break;
    case Algo::tabular_q:
      cfg.learning_rate = 0.1;
      cfg.alpha = 0.1;
      cfg.num_envs = 1;
      cfg.exploration_fraction = 0.1;
      break;
  }
  return cfg;
}

void AgentConfig::validate() const {
  if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("AgentConfig: gamma out of [0,1]");
  if (learning_rate <= 0.0) throw std::invalid_argument("AgentConfig: learning_rate must be > 0");
  if (num_envs < 1) throw std::invalid_argument("AgentConfig: num_envs must be >= 1");
  if (gae_lambda < 0.0 || gae_lambda > 1.0)
    throw std::invalid_argument("AgentConfig: gae_lambda out of [0,1]");
  if (clip_range <= 0.0) throw std::invalid_argument("AgentConfig: clip_range must be > 0");
  if (batch_size < 1) throw std::invalid_argument("AgentConfig: batch_size must be >= 1");
  if (n_steps < 1) throw std::invalid_argument("AgentConfig: n_steps must be >= 1");
  if (exploration_fraction <= 0.0 || exploration_fraction > 1.0)
    throw std::invalid_argument("AgentConfig: exploration_fraction out of (0,1]");
}

}  // namespace sofe
