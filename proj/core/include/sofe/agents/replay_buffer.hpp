#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sofe/tensor.hpp"

namespace sofe {

struct Transition {
  Tensor obs, stats;
  int action = 0;
  double reward = 0.0;  // combined learning target
  Tensor next_obs, next_stats;
  bool done = false;
};

/// Fixed-capacity ring with uniform sampling.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(int64_t capacity) : capacity_(capacity) {}

  void push(Transition t) {
    if (static_cast<int64_t>(ring_.size()) < capacity_) {
      ring_.push_back(std::move(t));
    } else {
      ring_[static_cast<size_t>(head_)] = std::move(t);
    }
    head_ = (head_ + 1) % capacity_;
  }

  int64_t size() const { return static_cast<int64_t>(ring_.size()); }
  int64_t capacity() const { return capacity_; }

  const Transition& sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int64_t> pick(0, size() - 1);
    return ring_[static_cast<size_t>(pick(rng))];
  }

 private:
  int64_t capacity_;
  int64_t head_ = 0;
  std::vector<Transition> ring_;
};

}  // namespace sofe
