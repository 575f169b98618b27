#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sofe/env/env.hpp"

namespace sofe {

/// Fixed (non-learned) feature map psi(s) feeding the elliptical bonus and
/// the surprise Gaussian. The output dimension is constant for the life of
/// the map.
class FeatureMap {
 public:
  enum class Kind { one_hot, identity, coords, custom };

  using Fn = std::function<std::vector<double>(int64_t state_key, const Tensor& obs)>;

  static FeatureMap one_hot(int dim) {
    FeatureMap m;
    m.kind_ = Kind::one_hot;
    m.dim_ = dim;
    return m;
  }

  /// Flattened copy of the observation tensor.
  static FeatureMap identity(int dim) {
    FeatureMap m;
    m.kind_ = Kind::identity;
    m.dim_ = dim;
    return m;
  }

  /// (row, col) of the discrete cell, decoded from the state key.
  static FeatureMap coords(int grid_width) {
    FeatureMap m;
    m.kind_ = Kind::coords;
    m.dim_ = 2;
    m.width_ = grid_width;
    return m;
  }

  static FeatureMap custom(int dim, Fn fn) {
    FeatureMap m;
    m.kind_ = Kind::custom;
    m.dim_ = dim;
    m.fn_ = std::move(fn);
    return m;
  }

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  std::vector<double> encode(int64_t state_key, const Tensor& obs) const {
    switch (kind_) {
      case Kind::one_hot: {
        if (state_key < 0 || state_key >= dim_)
          throw std::invalid_argument("FeatureMap: state key out of one-hot range");
        std::vector<double> out(static_cast<size_t>(dim_), 0.0);
        out[static_cast<size_t>(state_key)] = 1.0;
        return out;
      }
      case Kind::identity: {
        if (obs.numel() != dim_)
          throw std::invalid_argument("FeatureMap: observation size mismatch");
        return obs.vec();
      }
      case Kind::coords:
        return {static_cast<double>(state_key / width_), static_cast<double>(state_key % width_)};
      case Kind::custom: {
        auto out = fn_(state_key, obs);
        if (static_cast<int>(out.size()) != dim_)
          throw std::invalid_argument("FeatureMap: custom fn produced wrong dimension");
        return out;
      }
    }
    throw std::logic_error("FeatureMap: unreachable");
  }

 private:
  Kind kind_ = Kind::one_hot;
  int dim_ = 1;
  int width_ = 1;
  Fn fn_;
};

}  // namespace sofe
