#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sofe/nn/layers.hpp"
#include "sofe/tensor.hpp"

namespace sofe::nn {

/// Architecture of one encoder branch.
struct EncoderSpec {
  enum class Kind { conv, dense };
  Kind kind = Kind::conv;
  int conv_channels = 16;
  int conv_layers = 2;   // conv(k=3, stride=2, pad=1) + relu blocks
  int hidden = 128;      // branch output width
};

/// Two-branch feature extractor: one branch encodes the base observation,
/// an optional second branch encodes the bonus statistics. Branch outputs
/// are concatenated and passed through a dense trunk. With no stats branch
/// this degenerates to a plain single-encoder network.
class DualEncoder {
 public:
  DualEncoder(std::vector<int> obs_shape, std::optional<std::vector<int>> stats_shape,
              const EncoderSpec& obs_spec, const EncoderSpec& stats_spec, int trunk_hidden);

  /// `stats` must be non-null iff the encoder was built with a stats branch.
  Tensor forward(const Tensor& obs, const Tensor* stats);
  /// Returns (grad_obs, grad_stats); grad_stats is empty without a stats branch.
  std::pair<Tensor, Tensor> backward(const Tensor& grad_features);

  bool has_stats() const { return has_stats_; }
  int feature_dim() const { return feature_dim_; }
  std::vector<Tensor*> parameters();
  std::vector<Tensor*> gradients();
  std::vector<std::pair<std::string, Tensor*>> named_parameters();
  void init(std::mt19937_64& rng);

 private:
  Sequential obs_branch_, stats_branch_, trunk_;
  bool has_stats_ = false;
  int obs_feat_ = 0, stats_feat_ = 0, feature_dim_ = 0;
};

/// Builds a branch per spec; returns the branch output width.
int build_branch(Sequential& seq, const std::vector<int>& input_shape, const EncoderSpec& spec);

/// Policy + value network over the dual encoder.
class ActorCriticNet {
 public:
  ActorCriticNet(std::vector<int> obs_shape, std::optional<std::vector<int>> stats_shape,
                 const EncoderSpec& obs_spec, const EncoderSpec& stats_spec, int trunk_hidden,
                 int n_actions);

  struct Output {
    Tensor logits;  // (B, A)
    Tensor value;   // (B, 1)
  };
  Output forward(const Tensor& obs, const Tensor* stats);
  void backward(const Tensor& grad_logits, const Tensor& grad_value);

  bool has_stats() const { return enc_.has_stats(); }
  int n_actions() const { return n_actions_; }
  std::vector<Tensor*> parameters();
  std::vector<Tensor*> gradients();
  std::vector<std::pair<std::string, Tensor*>> named_parameters();
  void zero_grad() { zero_all(gradients()); }
  void init(std::mt19937_64& rng);
  void copy_params_from(ActorCriticNet& other);

 private:
  DualEncoder enc_;
  Dense pi_, v_;
  int n_actions_;
};

/// Action-value network over the dual encoder.
class QNet {
 public:
  QNet(std::vector<int> obs_shape, std::optional<std::vector<int>> stats_shape,
       const EncoderSpec& obs_spec, const EncoderSpec& stats_spec, int trunk_hidden,
       int n_actions);

  Tensor forward(const Tensor& obs, const Tensor* stats);  // (B, A)
  void backward(const Tensor& grad_q);

  bool has_stats() const { return enc_.has_stats(); }
  int n_actions() const { return n_actions_; }
  std::vector<Tensor*> parameters();
  std::vector<Tensor*> gradients();
  std::vector<std::pair<std::string, Tensor*>> named_parameters();
  void zero_grad() { zero_all(gradients()); }
  void init(std::mt19937_64& rng);
  void copy_params_from(QNet& other);

 private:
  DualEncoder enc_;
  Dense q_;
  int n_actions_;
};

}  // namespace sofe::nn
