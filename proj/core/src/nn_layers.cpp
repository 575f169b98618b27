#include "sofe/nn/layers.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sofe::nn {

void zero_all(const std::vector<Tensor*>& tensors) {
  for (Tensor* t : tensors) t->fill(0.0);
}

void orthogonal_init(Tensor& w, double gain, std::mt19937_64& rng) {
  const int rows = w.dim(0);
  const int cols = w.dim(1);
  const bool wide = cols > rows;
  const int n = wide ? cols : rows;   // length of each vector to orthonormalize
  const int m = wide ? rows : cols;   // number of vectors
  std::normal_distribution<double> normal(0.0, 1.0);

  // Modified Gram-Schmidt on m random n-vectors.
  std::vector<std::vector<double>> q(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(n)));
  for (auto& v : q)
    for (auto& x : v) x = normal(rng);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      double dot = 0.0;
      for (int k = 0; k < n; ++k) dot += q[i][k] * q[j][k];
      for (int k = 0; k < n; ++k) q[i][k] -= dot * q[j][k];
    }
    double norm = 0.0;
    for (int k = 0; k < n; ++k) norm += q[i][k] * q[i][k];
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      // Degenerate draw; restart this vector deterministically.
      for (auto& x : q[i]) x = normal(rng);
      --i;
      continue;
    }
    for (int k = 0; k < n; ++k) q[i][k] /= norm;
  }

  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      w.at(r, c) = gain * (wide ? q[static_cast<size_t>(r)][static_cast<size_t>(c)]
                                : q[static_cast<size_t>(c)][static_cast<size_t>(r)]);
}

// ---------------------------------------------------------------- Dense

Dense::Dense(int in, int out, double gain)
    : in_(in),
      out_(out),
      gain_(gain),
      w_({out, in}),
      b_({out}),
      gw_({out, in}),
      gb_({out}) {}

void Dense::init(std::mt19937_64& rng) { orthogonal_init(w_, gain_, rng); b_.fill(0.0); }

Tensor Dense::forward(const Tensor& input) {
  if (input.rank() != 2 || input.dim(1) != in_)
    throw std::invalid_argument("Dense::forward: expected input (B," + std::to_string(in_) + ")");
  input_cache_ = input;
  has_cache_ = true;
  const int batch = input.dim(0);
  Tensor out({batch, out_});
  for (int b = 0; b < batch; ++b) {
    const double* x = input.data() + static_cast<int64_t>(b) * in_;
    double* y = out.data() + static_cast<int64_t>(b) * out_;
    for (int o = 0; o < out_; ++o) {
      const double* wrow = w_.data() + static_cast<int64_t>(o) * in_;
      double acc = b_[o];
      for (int i = 0; i < in_; ++i) acc += wrow[i] * x[i];
      y[o] = acc;
    }
  }
  return out;
}

Tensor Dense::backward(const Tensor& grad_output) {
  if (!has_cache_) throw std::logic_error("Dense::backward before forward");
  const int batch = input_cache_.dim(0);
  Tensor grad_in({batch, in_});
  for (int b = 0; b < batch; ++b) {
    const double* x = input_cache_.data() + static_cast<int64_t>(b) * in_;
    const double* g = grad_output.data() + static_cast<int64_t>(b) * out_;
    double* gx = grad_in.data() + static_cast<int64_t>(b) * in_;
    for (int o = 0; o < out_; ++o) {
      const double go = g[o];
      double* gwrow = gw_.data() + static_cast<int64_t>(o) * in_;
      const double* wrow = w_.data() + static_cast<int64_t>(o) * in_;
      gb_[o] += go;
      for (int i = 0; i < in_; ++i) {
        gwrow[i] += go * x[i];
        gx[i] += go * wrow[i];
      }
    }
  }
  return grad_in;
}

// ---------------------------------------------------------------- ReLU

Tensor ReLU::forward(const Tensor& input) {
  input_cache_ = input;
  has_cache_ = true;
  Tensor out = input;
  for (auto& v : out.vec())
    if (v < 0.0) v = 0.0;
  return out;
}

Tensor ReLU::backward(const Tensor& grad_output) {
  if (!has_cache_) throw std::logic_error("ReLU::backward before forward");
  Tensor grad_in = grad_output;
  const auto& x = input_cache_.vec();
  auto& g = grad_in.vec();
  for (size_t i = 0; i < g.size(); ++i)
    if (x[i] <= 0.0) g[i] = 0.0;
  return grad_in;
}

// ---------------------------------------------------------------- Conv2d

Conv2d::Conv2d(int in_ch, int out_ch, int kernel, int stride, int pad)
    : in_ch_(in_ch),
      out_ch_(out_ch),
      k_(kernel),
      stride_(stride),
      pad_(pad),
      w_({out_ch, in_ch, kernel, kernel}),
      b_({out_ch}),
      gw_({out_ch, in_ch, kernel, kernel}),
      gb_({out_ch}) {}

void Conv2d::init(std::mt19937_64& rng) {
  const double fan_in = static_cast<double>(in_ch_) * k_ * k_;
  const double bound = std::sqrt(6.0 / fan_in);
  std::uniform_real_distribution<double> uni(-bound, bound);
  for (auto& v : w_.vec()) v = uni(rng);
  b_.fill(0.0);
}

Tensor Conv2d::forward(const Tensor& input) {
  if (input.rank() != 4 || input.dim(1) != in_ch_)
    throw std::invalid_argument("Conv2d::forward: expected input (B,C,H,W)");
  input_cache_ = input;
  has_cache_ = true;
  const int batch = input.dim(0), h = input.dim(2), w = input.dim(3);
  const int oh = out_extent(h, k_, stride_, pad_);
  const int ow = out_extent(w, k_, stride_, pad_);
  Tensor out({batch, out_ch_, oh, ow});
  for (int b = 0; b < batch; ++b)
    for (int oc = 0; oc < out_ch_; ++oc)
      for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
          double acc = b_[oc];
          for (int ic = 0; ic < in_ch_; ++ic)
            for (int ky = 0; ky < k_; ++ky) {
              const int iy = y * stride_ - pad_ + ky;
              if (iy < 0 || iy >= h) continue;
              for (int kx = 0; kx < k_; ++kx) {
                const int ix = x * stride_ - pad_ + kx;
                if (ix < 0 || ix >= w) continue;
                acc += w_.at(oc, ic, ky, kx) * input.at(b, ic, iy, ix);
              }
            }
          out.at(b, oc, y, x) = acc;
        }
  return out;
}

Tensor Conv2d::backward(const Tensor& grad_output) {
  if (!has_cache_) throw std::logic_error("Conv2d::backward before forward");
  const Tensor& input = input_cache_;
  const int batch = input.dim(0), h = input.dim(2), w = input.dim(3);
  const int oh = grad_output.dim(2), ow = grad_output.dim(3);
  Tensor grad_in({batch, in_ch_, h, w});
  for (int b = 0; b < batch; ++b)
    for (int oc = 0; oc < out_ch_; ++oc)
      for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
          const double go = grad_output.at(b, oc, y, x);
          gb_[oc] += go;
          for (int ic = 0; ic < in_ch_; ++ic)
            for (int ky = 0; ky < k_; ++ky) {
              const int iy = y * stride_ - pad_ + ky;
              if (iy < 0 || iy >= h) continue;
              for (int kx = 0; kx < k_; ++kx) {
                const int ix = x * stride_ - pad_ + kx;
                if (ix < 0 || ix >= w) continue;
                gw_.at(oc, ic, ky, kx) += go * input.at(b, ic, iy, ix);
                grad_in.at(b, ic, iy, ix) += go * w_.at(oc, ic, ky, kx);
              }
            }
        }
  return grad_in;
}

// ---------------------------------------------------------------- Flatten

Tensor Flatten::forward(const Tensor& input) {
  in_shape_ = input.shape();
  const int batch = input.dim(0);
  const int rest = static_cast<int>(input.numel() / batch);
  return input.reshaped({batch, rest});
}

Tensor Flatten::backward(const Tensor& grad_output) {
  if (in_shape_.empty()) throw std::logic_error("Flatten::backward before forward");
  return grad_output.reshaped(in_shape_);
}

// ---------------------------------------------------------------- Sequential

Tensor Sequential::forward(Tensor x) {
  for (auto& l : layers_) x = l->forward(x);
  return x;
}

Tensor Sequential::backward(Tensor grad) {
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) grad = (*it)->backward(grad);
  return grad;
}

std::vector<Tensor*> Sequential::parameters() {
  std::vector<Tensor*> out;
  for (auto& l : layers_)
    for (Tensor* p : l->parameters()) out.push_back(p);
  return out;
}

std::vector<Tensor*> Sequential::gradients() {
  std::vector<Tensor*> out;
  for (auto& l : layers_)
    for (Tensor* g : l->gradients()) out.push_back(g);
  return out;
}

void Sequential::init(std::mt19937_64& rng) {
  for (auto& l : layers_) l->init(rng);
}

}  // namespace sofe::nn
