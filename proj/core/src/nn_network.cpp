#include "sofe/nn/network.hpp"

#include <cmath>
#include <stdexcept>

namespace sofe::nn {

namespace {

// Input tensors arrive without a batch axis having any channel guarantees:
// grids are (C,H,W) and vectors are (d) or (d,d). Normalize to what the
// branch expects once batched.
std::vector<int> batched(const std::vector<int>& shape, int batch) {
  std::vector<int> s{batch};
  s.insert(s.end(), shape.begin(), shape.end());
  return s;
}

}  // namespace

int build_branch(Sequential& seq, const std::vector<int>& input_shape, const EncoderSpec& spec) {
  if (spec.kind == EncoderSpec::Kind::conv) {
    if (input_shape.size() != 3)
      throw std::invalid_argument("conv encoder requires (C,H,W) input, got rank " +
                                  std::to_string(input_shape.size()));
    int ch = input_shape[0], h = input_shape[1], w = input_shape[2];
    for (int i = 0; i < spec.conv_layers; ++i) {
      seq.add(std::make_unique<Conv2d>(ch, spec.conv_channels, 3, 2, 1));
      seq.add(std::make_unique<ReLU>());
      ch = spec.conv_channels;
      h = Conv2d::out_extent(h, 3, 2, 1);
      w = Conv2d::out_extent(w, 3, 2, 1);
    }
    seq.add(std::make_unique<Flatten>());
    const int flat = ch * h * w;
    seq.add(std::make_unique<Dense>(flat, spec.hidden, std::sqrt(2.0)));
    seq.add(std::make_unique<ReLU>());
  } else {
    const int flat = static_cast<int>(shape_numel(input_shape));
    seq.add(std::make_unique<Flatten>());
    seq.add(std::make_unique<Dense>(flat, spec.hidden, std::sqrt(2.0)));
    seq.add(std::make_unique<ReLU>());
  }
  return spec.hidden;
}

DualEncoder::DualEncoder(std::vector<int> obs_shape, std::optional<std::vector<int>> stats_shape,
                         const EncoderSpec& obs_spec, const EncoderSpec& stats_spec,
                         int trunk_hidden) {
  obs_feat_ = build_branch(obs_branch_, obs_shape, obs_spec);
  if (stats_shape.has_value() && !stats_shape->empty()) {
    has_stats_ = true;
    stats_feat_ = build_branch(stats_branch_, *stats_shape, stats_spec);
  }
  trunk_.add(std::make_unique<Dense>(obs_feat_ + stats_feat_, trunk_hidden, std::sqrt(2.0)));
  trunk_.add(std::make_unique<ReLU>());
  feature_dim_ = trunk_hidden;
}

Tensor DualEncoder::forward(const Tensor& obs, const Tensor* stats) {
  if (has_stats_ != (stats != nullptr))
    throw std::invalid_argument("DualEncoder::forward: stats input presence mismatch");
  Tensor obs_out = obs_branch_.forward(obs);
  const int batch = obs_out.dim(0);
  if (!has_stats_) return trunk_.forward(std::move(obs_out));

  Tensor stats_out = stats_branch_.forward(*stats);
  Tensor joined({batch, obs_feat_ + stats_feat_});
  for (int b = 0; b < batch; ++b) {
    for (int i = 0; i < obs_feat_; ++i) joined.at(b, i) = obs_out.at(b, i);
    for (int i = 0; i < stats_feat_; ++i) joined.at(b, obs_feat_ + i) = stats_out.at(b, i);
  }
  return trunk_.forward(std::move(joined));
}

std::pair<Tensor, Tensor> DualEncoder::backward(const Tensor& grad_features) {
  Tensor grad_joined = trunk_.backward(grad_features);
  if (!has_stats_) return {obs_branch_.backward(std::move(grad_joined)), Tensor{}};

  const int batch = grad_joined.dim(0);
  Tensor g_obs({batch, obs_feat_}), g_stats({batch, stats_feat_});
  for (int b = 0; b < batch; ++b) {
    for (int i = 0; i < obs_feat_; ++i) g_obs.at(b, i) = grad_joined.at(b, i);
    for (int i = 0; i < stats_feat_; ++i) g_stats.at(b, i) = grad_joined.at(b, obs_feat_ + i);
  }
  return {obs_branch_.backward(std::move(g_obs)), stats_branch_.backward(std::move(g_stats))};
}

std::vector<Tensor*> DualEncoder::parameters() {
  auto out = obs_branch_.parameters();
  for (Tensor* p : stats_branch_.parameters()) out.push_back(p);
  for (Tensor* p : trunk_.parameters()) out.push_back(p);
  return out;
}

std::vector<Tensor*> DualEncoder::gradients() {
  auto out = obs_branch_.gradients();
  for (Tensor* g : stats_branch_.gradients()) out.push_back(g);
  for (Tensor* g : trunk_.gradients()) out.push_back(g);
  return out;
}

std::vector<std::pair<std::string, Tensor*>> DualEncoder::named_parameters() {
  std::vector<std::pair<std::string, Tensor*>> out;
  auto add = [&out](const std::string& prefix, Sequential& seq) {
    int param_idx = 0;
    for (size_t i = 0; i < seq.size(); ++i)
      for (Tensor* p : seq.layer(i).parameters())
        out.emplace_back(prefix + "." + std::to_string(param_idx++), p);
  };
  add("enc.obs", obs_branch_);
  add("enc.stats", stats_branch_);
  add("enc.trunk", trunk_);
  return out;
}

void DualEncoder::init(std::mt19937_64& rng) {
  obs_branch_.init(rng);
  stats_branch_.init(rng);
  trunk_.init(rng);
}

// ---------------------------------------------------------------- ActorCriticNet

ActorCriticNet::ActorCriticNet(std::vector<int> obs_shape, std::optional<std::vector<int>> stats_shape,
                               const EncoderSpec& obs_spec, const EncoderSpec& stats_spec,
                               int trunk_hidden, int n_actions)
    : enc_(std::move(obs_shape), std::move(stats_shape), obs_spec, stats_spec, trunk_hidden),
      pi_(trunk_hidden, n_actions, 0.01),
      v_(trunk_hidden, 1, 1.0),
      n_actions_(n_actions) {}

ActorCriticNet::Output ActorCriticNet::forward(const Tensor& obs, const Tensor* stats) {
  Tensor features = enc_.forward(obs, stats);
  return {pi_.forward(features), v_.forward(features)};
}

void ActorCriticNet::backward(const Tensor& grad_logits, const Tensor& grad_value) {
  Tensor g_feat = pi_.backward(grad_logits);
  Tensor g_feat_v = v_.backward(grad_value);
  for (int64_t i = 0; i < g_feat.numel(); ++i) g_feat[i] += g_feat_v[i];
  enc_.backward(g_feat);
}

std::vector<Tensor*> ActorCriticNet::parameters() {
  auto out = enc_.parameters();
  for (Tensor* p : pi_.parameters()) out.push_back(p);
  for (Tensor* p : v_.parameters()) out.push_back(p);
  return out;
}

std::vector<Tensor*> ActorCriticNet::gradients() {
  auto out = enc_.gradients();
  for (Tensor* g : pi_.gradients()) out.push_back(g);
  for (Tensor* g : v_.gradients()) out.push_back(g);
  return out;
}

std::vector<std::pair<std::string, Tensor*>> ActorCriticNet::named_parameters() {
  auto out = enc_.named_parameters();
  int i = 0;
  for (Tensor* p : pi_.parameters()) out.emplace_back("pi." + std::to_string(i++), p);
  i = 0;
  for (Tensor* p : v_.parameters()) out.emplace_back("v." + std::to_string(i++), p);
  return out;
}

void ActorCriticNet::init(std::mt19937_64& rng) {
  enc_.init(rng);
  pi_.init(rng);
  v_.init(rng);
}

void ActorCriticNet::copy_params_from(ActorCriticNet& other) {
  auto dst = parameters();
  auto src = other.parameters();
  if (dst.size() != src.size()) throw std::invalid_argument("copy_params_from: arch mismatch");
  for (size_t i = 0; i < dst.size(); ++i) *dst[i] = *src[i];
}

// ---------------------------------------------------------------- QNet

QNet::QNet(std::vector<int> obs_shape, std::optional<std::vector<int>> stats_shape,
           const EncoderSpec& obs_spec, const EncoderSpec& stats_spec, int trunk_hidden,
           int n_actions)
    : enc_(std::move(obs_shape), std::move(stats_shape), obs_spec, stats_spec, trunk_hidden),
      q_(trunk_hidden, n_actions, 1.0),
      n_actions_(n_actions) {}

Tensor QNet::forward(const Tensor& obs, const Tensor* stats) {
  return q_.forward(enc_.forward(obs, stats));
}

void QNet::backward(const Tensor& grad_q) { enc_.backward(q_.backward(grad_q)); }

std::vector<Tensor*> QNet::parameters() {
  auto out = enc_.parameters();
  for (Tensor* p : q_.parameters()) out.push_back(p);
  return out;
}

std::vector<Tensor*> QNet::gradients() {
  auto out = enc_.gradients();
  for (Tensor* g : q_.gradients()) out.push_back(g);
  return out;
}

std::vector<std::pair<std::string, Tensor*>> QNet::named_parameters() {
  auto out = enc_.named_parameters();
  int i = 0;
  for (Tensor* p : q_.parameters()) out.emplace_back("q." + std::to_string(i++), p);
  return out;
}

void QNet::init(std::mt19937_64& rng) {
  enc_.init(rng);
  q_.init(rng);
}

void QNet::copy_params_from(QNet& other) {
  auto dst = parameters();
  auto src = other.parameters();
  if (dst.size() != src.size()) throw std::invalid_argument("copy_params_from: arch mismatch");
  for (size_t i = 0; i < dst.size(); ++i) *dst[i] = *src[i];
}

}  // namespace sofe::nn
