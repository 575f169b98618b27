#include "sofe/agents/actor_critic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sofe/agents/distributions.hpp"

namespace sofe {

namespace {

nn::EncoderSpec encoder_spec(const NetConfig& net, const std::vector<int>& shape) {
  nn::EncoderSpec spec;
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

ActorCriticAgent::ActorCriticAgent(const AgentConfig& cfg, std::vector<int> obs_shape,
                                   std::optional<std::vector<int>> stats_shape, int n_actions,
                                   uint64_t seed)
    : cfg_(cfg), rng_(seed) {
  const nn::EncoderSpec obs_spec = encoder_spec(cfg.net, obs_shape);
  const nn::EncoderSpec stats_spec =
      stats_shape ? encoder_spec(cfg.net, *stats_shape) : nn::EncoderSpec{};
  net_ = std::make_unique<nn::ActorCriticNet>(obs_shape, stats_shape, obs_spec, stats_spec,
                                              cfg.net.trunk_hidden, n_actions);
  net_->init(rng_);

  nn::OptimizerConfig opt_cfg;
  opt_cfg.kind = (cfg.algo == Algo::a2c && cfg.use_rms_prop) ? nn::OptimizerKind::rmsprop
                                                             : nn::OptimizerKind::adam;
  opt_cfg.lr = cfg.learning_rate;
  opt_cfg.max_grad_norm = cfg.max_grad_norm;
  opt_cfg.rms_eps = cfg.rms_prop_eps;
  opt_ = std::make_unique<nn::Optimizer>(opt_cfg, net_->parameters(), net_->gradients());
}

ActorCriticAgent::ActResult ActorCriticAgent::act(const Tensor& obs, const Tensor* stats) {
  Tensor obs_b = with_batch_axis(obs);
  Tensor stats_b;
  const Tensor* stats_ptr = nullptr;
  if (net_->has_stats()) {
    if (!stats) throw std::invalid_argument("ActorCriticAgent::act: stats input required");
    stats_b = with_batch_axis(*stats);
    stats_ptr = &stats_b;
  }
  auto out = net_->forward(obs_b, stats_ptr);
  const std::span<const double> logits(out.logits.data(),
                                       static_cast<size_t>(out.logits.numel()));
  const auto probs = softmax(logits);
  const int action = sample_categorical(probs, rng_);
  return {action, std::log(probs[static_cast<size_t>(action)]), out.value[0]};
}

int ActorCriticAgent::act_greedy(const Tensor& obs, const Tensor* stats) {
  Tensor obs_b = with_batch_axis(obs);
  Tensor stats_b;
  const Tensor* stats_ptr = nullptr;
  if (net_->has_stats()) {
    if (!stats) throw std::invalid_argument("ActorCriticAgent::act_greedy: stats input required");
    stats_b = with_batch_axis(*stats);
    stats_ptr = &stats_b;
  }
  auto out = net_->forward(obs_b, stats_ptr);
  return argmax_lowest(
      std::span<const double>(out.logits.data(), static_cast<size_t>(out.logits.numel())));
}

double ActorCriticAgent::value(const Tensor& obs, const Tensor* stats) {
  Tensor obs_b = with_batch_axis(obs);
  Tensor stats_b;
  const Tensor* stats_ptr = nullptr;
  if (net_->has_stats()) {
    stats_b = with_batch_axis(*stats);
    stats_ptr = &stats_b;
  }
  return net_->forward(obs_b, stats_ptr).value[0];
}

AcLosses ActorCriticAgent::train_minibatch(const RolloutBuffer& rollout,
                                           std::span<const int64_t> indices) {
  const int batch = static_cast<int>(indices.size());
  const bool has_stats = net_->has_stats();

  const auto first = rollout.entry(indices[0]);
  auto stack = [&](auto getter) {
    const Tensor& proto = *getter(first);
    std::vector<int> shape{batch};
    for (int d : proto.shape()) shape.push_back(d);
    Tensor out(shape);
    const int64_t stride = proto.numel();
    for (int b = 0; b < batch; ++b) {
      const Tensor& t = *getter(rollout.entry(indices[static_cast<size_t>(b)]));
      std::copy(t.data(), t.data() + stride, out.data() + b * stride);
    }
    return out;
  };

  Tensor obs = stack([](const RolloutBuffer::Entry& e) { return e.obs; });
  Tensor stats;
  if (has_stats) stats = stack([](const RolloutBuffer::Entry& e) { return e.stats; });

  std::vector<double> advantages(static_cast<size_t>(batch));
  for (int b = 0; b < batch; ++b)
    advantages[static_cast<size_t>(b)] = rollout.entry(indices[static_cast<size_t>(b)]).advantage;
  if (cfg_.normalize_advantage && batch > 1) {
    double mean = std::accumulate(advantages.begin(), advantages.end(), 0.0) / batch;
    double var = 0.0;
    for (double a : advantages) var += (a - mean) * (a - mean);
    const double stddev = std::sqrt(var / batch);
    for (double& a : advantages) a = (a - mean) / (stddev + 1e-8);
  }

  auto out = net_->forward(obs, has_stats ? &stats : nullptr);
  const int n_actions = net_->n_actions();
  Tensor grad_logits(out.logits.shape());
  Tensor grad_value(out.value.shape());

  AcLosses losses;
  const bool clipped = cfg_.algo == Algo::ppo;
  for (int b = 0; b < batch; ++b) {
    const auto e = rollout.entry(indices[static_cast<size_t>(b)]);
    const double adv = advantages[static_cast<size_t>(b)];
    const std::span<const double> logits(out.logits.data() + static_cast<int64_t>(b) * n_actions,
                                         static_cast<size_t>(n_actions));
    const auto probs = softmax(logits);
    const double logp = std::log(std::max(probs[static_cast<size_t>(e.action)], 1e-300));

    // Policy objective gradient w.r.t. the new log-probability.
    double dlogp;
    if (clipped) {
      const double ratio = std::exp(logp - e.logprob);
      const double lo = 1.0 - cfg_.clip_range, hi = 1.0 + cfg_.clip_range;
      const double surrogate = std::min(ratio * adv, std::clamp(ratio, lo, hi) * adv);
      losses.policy_loss -= surrogate / batch;
      const bool active = adv >= 0.0 ? ratio <= hi : ratio >= lo;
      dlogp = active ? -adv * ratio / batch : 0.0;
    } else {
      losses.policy_loss -= logp * adv / batch;
      dlogp = -adv / batch;
    }
    const double h = entropy(probs);
    losses.entropy += h / batch;
    for (int a = 0; a < n_actions; ++a) {
      const double p = probs[static_cast<size_t>(a)];
      const double indicator = a == e.action ? 1.0 : 0.0;
      double g = dlogp * (indicator - p);
      if (cfg_.ent_coef != 0.0 && p > 0.0)
        g += cfg_.ent_coef * p * (std::log(p) + h) / batch;
      grad_logits.at(b, a) = g;
    }

    const double v = out.value.at(b, 0);
    const double diff = v - e.ret;
    losses.value_loss += diff * diff / batch;
    grad_value.at(b, 0) = cfg_.vf_coef * 2.0 * diff / batch;
  }

  net_->zero_grad();
  net_->backward(grad_logits, grad_value);
  opt_->step();
  return losses;
}

AcLosses ActorCriticAgent::update(const RolloutBuffer& rollout) {
  std::vector<int64_t> indices(static_cast<size_t>(rollout.size()));
  std::iota(indices.begin(), indices.end(), 0);

  if (cfg_.algo == Algo::a2c) return train_minibatch(rollout, indices);

  AcLosses total;
  int updates = 0;
  for (int epoch = 0; epoch < cfg_.n_epochs; ++epoch) {
    std::shuffle(indices.begin(), indices.end(), rng_);
    for (size_t start = 0; start < indices.size(); start += static_cast<size_t>(cfg_.batch_size)) {
      const size_t len = std::min(static_cast<size_t>(cfg_.batch_size), indices.size() - start);
      AcLosses l = train_minibatch(rollout, {indices.data() + start, len});
      total.policy_loss += l.policy_loss;
      total.value_loss += l.value_loss;
      total.entropy += l.entropy;
      ++updates;
    }
  }
  if (updates > 0) {
    total.policy_loss /= updates;
    total.value_loss /= updates;
    total.entropy /= updates;
  }
  return total;
}

}  // namespace sofe
