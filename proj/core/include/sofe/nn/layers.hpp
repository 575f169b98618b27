#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sofe/tensor.hpp"

namespace sofe::nn {

/// A layer owns its parameters and gradient buffers. forward() caches what
/// backward() needs; backward() accumulates parameter gradients and returns
/// the gradient w.r.t. the layer input. Calling backward() without a prior
/// forward() is a usage error.
class Layer {
 public:
  virtual ~Layer() = default;
  virtual Tensor forward(const Tensor& input) = 0;
  virtual Tensor backward(const Tensor& grad_output) = 0;
  virtual std::vector<Tensor*> parameters() { return {}; }
  virtual std::vector<Tensor*> gradients() { return {}; }
  virtual void init(std::mt19937_64& rng) { (void)rng; }
  virtual std::string kind() const = 0;
};

/// Fully connected layer. Input (B, in), output (B, out).
/// Weights use orthogonal initialization scaled by `gain`.
class Dense : public Layer {
 public:
  Dense(int in, int out, double gain);
  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::vector<Tensor*> parameters() override { return {&w_, &b_}; }
  std::vector<Tensor*> gradients() override { return {&gw_, &gb_}; }
  void init(std::mt19937_64& rng) override;
  std::string kind() const override { return "dense"; }

  Tensor& weight() { return w_; }
  Tensor& bias() { return b_; }

 private:
  int in_, out_;
  double gain_;
  Tensor w_, b_, gw_, gb_;
  Tensor input_cache_;
  bool has_cache_ = false;
};

class ReLU : public Layer {
 public:
  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::string kind() const override { return "relu"; }

 private:
  Tensor input_cache_;
  bool has_cache_ = false;
};

/// 2D convolution over (B, C, H, W) with square kernel, Kaiming-uniform
/// weights and zero bias.
class Conv2d : public Layer {
 public:
  Conv2d(int in_ch, int out_ch, int kernel, int stride, int pad);
  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::vector<Tensor*> parameters() override { return {&w_, &b_}; }
  std::vector<Tensor*> gradients() override { return {&gw_, &gb_}; }
  void init(std::mt19937_64& rng) override;
  std::string kind() const override { return "conv2d"; }

  static int out_extent(int in, int kernel, int stride, int pad) {
    return (in + 2 * pad - kernel) / stride + 1;
  }

 private:
  int in_ch_, out_ch_, k_, stride_, pad_;
  Tensor w_, b_, gw_, gb_;
  Tensor input_cache_;
  bool has_cache_ = false;
};

/// Collapses everything after the batch dimension: (B, ...) -> (B, prod).
class Flatten : public Layer {
 public:
  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::string kind() const override { return "flatten"; }

 private:
  std::vector<int> in_shape_;
};

/// Ordered layer stack. Not itself a Layer so it can be composed freely by
/// the branch/trunk networks.
class Sequential {
 public:
  Sequential() = default;
  Sequential(Sequential&&) = default;
  Sequential& operator=(Sequential&&) = default;

  void add(std::unique_ptr<Layer> layer) { layers_.push_back(std::move(layer)); }
  bool empty() const { return layers_.empty(); }
  size_t size() const { return layers_.size(); }
  Layer& layer(size_t i) { return *layers_[i]; }

  Tensor forward(Tensor x);
  Tensor backward(Tensor grad);
  std::vector<Tensor*> parameters();
  std::vector<Tensor*> gradients();
  void init(std::mt19937_64& rng);

 private:
  std::vector<std::unique_ptr<Layer>> layers_;
};

/// Fills `w` (rows x cols) with a gain-scaled orthogonal matrix.
void orthogonal_init(Tensor& w, double gain, std::mt19937_64& rng);

void zero_all(const std::vector<Tensor*>& tensors);

}  // namespace sofe::nn
