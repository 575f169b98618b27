#include "sofe/nn/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace sofe::nn {

Optimizer::Optimizer(OptimizerConfig cfg, std::vector<Tensor*> params, std::vector<Tensor*> grads)
    : cfg_(cfg), params_(std::move(params)), grads_(std::move(grads)) {
  if (params_.size() != grads_.size())
    throw std::invalid_argument("Optimizer: params/grads size mismatch");
  for (size_t i = 0; i < params_.size(); ++i) {
    if (!params_[i]->same_shape(*grads_[i]))
      throw std::invalid_argument("Optimizer: param/grad shape mismatch");
  }
  if (cfg_.kind != OptimizerKind::sgd) {
    for (Tensor* p : params_) {
      m_.emplace_back(p->shape());
      if (cfg_.kind == OptimizerKind::adam) v_.emplace_back(p->shape());
    }
  }
}

double Optimizer::clip_global_norm() {
  double sq = 0.0;
  for (Tensor* g : grads_)
    for (double x : g->vec()) sq += x * x;
  const double norm = std::sqrt(sq);
  if (cfg_.max_grad_norm > 0.0 && norm > cfg_.max_grad_norm) {
    const double scale = cfg_.max_grad_norm / norm;
    for (Tensor* g : grads_)
      for (double& x : g->vec()) x *= scale;
  }
  return norm;
}

void Optimizer::step() {
  clip_global_norm();
  ++t_;
  switch (cfg_.kind) {
    case OptimizerKind::sgd:
      for (size_t i = 0; i < params_.size(); ++i) {
        auto& p = params_[i]->vec();
        const auto& g = grads_[i]->vec();
        for (size_t j = 0; j < p.size(); ++j) p[j] -= cfg_.lr * g[j];
      }
      break;
    case OptimizerKind::rmsprop:
      for (size_t i = 0; i < params_.size(); ++i) {
        auto& p = params_[i]->vec();
        const auto& g = grads_[i]->vec();
        auto& sq = m_[i].vec();
        for (size_t j = 0; j < p.size(); ++j) {
          sq[j] = cfg_.rms_alpha * sq[j] + (1.0 - cfg_.rms_alpha) * g[j] * g[j];
          p[j] -= cfg_.lr * g[j] / (std::sqrt(sq[j]) + cfg_.rms_eps);
        }
      }
      break;
    case OptimizerKind::adam: {
      const double bc1 = 1.0 - std::pow(cfg_.adam_beta1, static_cast<double>(t_));
      const double bc2 = 1.0 - std::pow(cfg_.adam_beta2, static_cast<double>(t_));
      for (size_t i = 0; i < params_.size(); ++i) {
        auto& p = params_[i]->vec();
        const auto& g = grads_[i]->vec();
        auto& m = m_[i].vec();
        auto& v = v_[i].vec();
        for (size_t j = 0; j < p.size(); ++j) {
          m[j] = cfg_.adam_beta1 * m[j] + (1.0 - cfg_.adam_beta1) * g[j];
          v[j] = cfg_.adam_beta2 * v[j] + (1.0 - cfg_.adam_beta2) * g[j] * g[j];
          const double mhat = m[j] / bc1;
          const double vhat = v[j] / bc2;
          p[j] -= cfg_.lr * mhat / (std::sqrt(vhat) + cfg_.adam_eps);
        }
      }
      break;
    }
  }
}

}  // namespace sofe::nn
