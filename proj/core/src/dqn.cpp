#include "sofe/agents/dqn.hpp"

#include <algorithm>
#include <stdexcept>

#include "sofe/agents/distributions.hpp"

namespace sofe {

namespace {

nn::EncoderSpec encoder_spec(const NetConfig& net, const std::vector<int>& shape) {
  nn::EncoderSpec spec;
  // Vector statistics cannot go through conv; fall back to dense.
  spec.kind = (net.obs_encoder == NetConfig::Encoder::conv && shape.size() == 3)
                  ? nn::EncoderSpec::Kind::conv
                  : nn::EncoderSpec::Kind::dense;
  spec.conv_channels = net.conv_channels;
  spec.conv_layers = net.conv_layers;
  spec.hidden = net.hidden;
  return spec;
}

Tensor with_batch_axis(const Tensor& t) {
  std::vector<int> shape{1};
  for (int d : t.shape()) shape.push_back(d);
  return t.reshaped(shape);
}

}  // namespace

DqnAgent::DqnAgent(const AgentConfig& cfg, std::vector<int> obs_shape,
                   std::optional<std::vector<int>> stats_shape, int n_actions, uint64_t seed)
    : cfg_(cfg), rng_(seed), buffer_(cfg.buffer_size) {
  const nn::EncoderSpec obs_spec = encoder_spec(cfg.net, obs_shape);
  const nn::EncoderSpec stats_spec =
      stats_shape ? encoder_spec(cfg.net, *stats_shape) : nn::EncoderSpec{};
  online_ = std::make_unique<nn::QNet>(obs_shape, stats_shape, obs_spec, stats_spec,
                                       cfg.net.trunk_hidden, n_actions);
  target_ = std::make_unique<nn::QNet>(obs_shape, stats_shape, obs_spec, stats_spec,
                                       cfg.net.trunk_hidden, n_actions);
  online_->init(rng_);
  target_->copy_params_from(*online_);

  nn::OptimizerConfig opt_cfg;
  opt_cfg.kind = nn::OptimizerKind::adam;
  opt_cfg.lr = cfg.learning_rate;
  opt_cfg.max_grad_norm = cfg.max_grad_norm;
  opt_ = std::make_unique<nn::Optimizer>(opt_cfg, online_->parameters(), online_->gradients());
}

int DqnAgent::act(const Tensor& obs, const Tensor* stats, double epsilon) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  if (uni(rng_) < epsilon) {
    std::uniform_int_distribution<int> pick(0, online_->n_actions() - 1);
    return pick(rng_);
  }
  return act_greedy(obs, stats);
}

int DqnAgent::act_greedy(const Tensor& obs, const Tensor* stats) {
  Tensor obs_b = with_batch_axis(obs);
  Tensor stats_b;
  const Tensor* stats_ptr = nullptr;
  if (online_->has_stats()) {
    if (!stats) throw std::invalid_argument("DqnAgent::act: stats input required");
    stats_b = with_batch_axis(*stats);
    stats_ptr = &stats_b;
  }
  Tensor q = online_->forward(obs_b, stats_ptr);
  return argmax_lowest(std::span<const double>(q.data(), static_cast<size_t>(q.numel())));
}

void DqnAgent::sync_target() {
  if (cfg_.tau >= 1.0) {
    target_->copy_params_from(*online_);
    return;
  }
  auto dst = target_->parameters();
  auto src = online_->parameters();
  for (size_t i = 0; i < dst.size(); ++i) {
    auto& d = dst[i]->vec();
    const auto& s = src[i]->vec();
    for (size_t j = 0; j < d.size(); ++j) d[j] = cfg_.tau * s[j] + (1.0 - cfg_.tau) * d[j];
  }
}

std::optional<double> DqnAgent::on_env_step(int64_t env_step) {
  if (env_step % cfg_.target_update_interval == 0) sync_target();
  if (buffer_.size() < cfg_.learning_starts) return std::nullopt;
  if (env_step % cfg_.train_frequency != 0) return std::nullopt;
  double loss = 0.0;
  for (int g = 0; g < cfg_.gradient_steps; ++g) loss += train_batch();
  return loss / cfg_.gradient_steps;
}

double DqnAgent::train_batch() {
  const int batch = std::min<int64_t>(cfg_.batch_size, buffer_.size());
  std::vector<const Transition*> samples;
  samples.reserve(static_cast<size_t>(batch));
  for (int i = 0; i < batch; ++i) samples.push_back(&buffer_.sample(rng_));

  const bool has_stats = online_->has_stats();
  auto stack = [&](auto getter) {
    const Tensor& first = getter(*samples[0]);
    std::vector<int> shape{batch};
    for (int d : first.shape()) shape.push_back(d);
    Tensor out(shape);
    const int64_t stride = first.numel();
    for (int b = 0; b < batch; ++b) {
      const Tensor& t = getter(*samples[static_cast<size_t>(b)]);
      std::copy(t.data(), t.data() + stride, out.data() + b * stride);
    }
    return out;
  };

  Tensor obs = stack([](const Transition& t) -> const Tensor& { return t.obs; });
  Tensor next_obs = stack([](const Transition& t) -> const Tensor& { return t.next_obs; });
  Tensor stats, next_stats;
  if (has_stats) {
    stats = stack([](const Transition& t) -> const Tensor& { return t.stats; });
    next_stats = stack([](const Transition& t) -> const Tensor& { return t.next_stats; });
  }

  // Targets from the frozen network.
  Tensor next_q = target_->forward(next_obs, has_stats ? &next_stats : nullptr);
  std::vector<double> targets(static_cast<size_t>(batch));
  const int n_actions = online_->n_actions();
  for (int b = 0; b < batch; ++b) {
    const Transition& t = *samples[static_cast<size_t>(b)];
    double best = next_q.at(b, 0);
    for (int a = 1; a < n_actions; ++a) best = std::max(best, next_q.at(b, a));
    targets[static_cast<size_t>(b)] = t.reward + (t.done ? 0.0 : cfg_.gamma * best);
  }

  Tensor q = online_->forward(obs, has_stats ? &stats : nullptr);
  Tensor grad_q(q.shape());
  double loss = 0.0;
  for (int b = 0; b < batch; ++b) {
    const int a = samples[static_cast<size_t>(b)]->action;
    const double diff = q.at(b, a) - targets[static_cast<size_t>(b)];
    loss += diff * diff;
    grad_q.at(b, a) = 2.0 * diff / batch;
  }
  loss /= batch;

  online_->zero_grad();
  online_->backward(grad_q);
  opt_->step();
  return loss;
}

}  // namespace sofe
