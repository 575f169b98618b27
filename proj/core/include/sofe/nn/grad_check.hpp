#pragma once

#include <functional>
#include <vector>

#include "sofe/tensor.hpp"

namespace sofe::nn {

/// Compares analytic parameter gradients against central finite differences.
///
/// `loss_fn` re-runs the forward pass and returns the scalar loss for the
/// current parameter values; `backward_fn` populates the gradient buffers for
/// the unperturbed parameters (it is called once, after zeroing the grads).
/// Returns the maximum relative error over all parameter entries, with the
/// denominator floored to keep near-zero gradients from dominating.
double grad_check(const std::function<double()>& loss_fn, const std::function<void()>& backward_fn,
                  const std::vector<Tensor*>& params, const std::vector<Tensor*>& grads,
                  double eps = 1e-5);

}  // namespace sofe::nn
