#pragma once

#include <cstdint>
#include <vector>

#include "sofe/tensor.hpp"

namespace sofe::nn {

enum class OptimizerKind { sgd, rmsprop, adam };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::sgd;
  double lr = 1e-3;
  double max_grad_norm = 0.0;  // 0 disables clipping
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double rms_alpha = 0.99;
  double rms_eps = 1e-5;
};

/// Updates a fixed set of parameter tensors in place from their paired
/// gradient buffers. Gradients are global-norm clipped before the update
/// when max_grad_norm > 0. Gradient buffers are not zeroed here.
class Optimizer {
 public:
  Optimizer(OptimizerConfig cfg, std::vector<Tensor*> params, std::vector<Tensor*> grads);

  /// Scales all gradients so their global L2 norm is at most max_grad_norm.
  /// Returns the pre-clip norm.
  double clip_global_norm();
  void step();

  const OptimizerConfig& config() const { return cfg_; }

 private:
  OptimizerConfig cfg_;
  std::vector<Tensor*> params_, grads_;
  std::vector<Tensor> m_, v_;  // first/second moment (adam) or square avg (rmsprop)
  int64_t t_ = 0;
};

}  // namespace sofe::nn
