#include "sofe/nn/grad_check.hpp"

#include <algorithm>
#include <cmath>

#include "sofe/nn/layers.hpp"

namespace sofe::nn {

double grad_check(const std::function<double()>& loss_fn, const std::function<void()>& backward_fn,
                  const std::vector<Tensor*>& params, const std::vector<Tensor*>& grads,
                  double eps) {
  zero_all(grads);
  backward_fn();

  double max_rel = 0.0;
  for (size_t t = 0; t < params.size(); ++t) {
    auto& p = params[t]->vec();
    const auto& g = grads[t]->vec();
    for (size_t j = 0; j < p.size(); ++j) {
      const double saved = p[j];
      p[j] = saved + eps;
      const double lp = loss_fn();
      p[j] = saved - eps;
      const double lm = loss_fn();
      p[j] = saved;
      const double numeric = (lp - lm) / (2.0 * eps);
      const double analytic = g[j];
      const double denom = std::max({std::abs(numeric), std::abs(analytic), 1e-3});
      max_rel = std::max(max_rel, std::abs(numeric - analytic) / denom);
    }
  }
  return max_rel;
}

}  // namespace sofe::nn
