#pragma once

#include <cmath>
#include <random>
#include <span>
#include <vector>

namespace sofe {

/// Numerically stable softmax.
inline std::vector<double> softmax(std::span<const double> logits) {
  double m = logits[0];
  for (double l : logits) m = std::max(m, l);
  std::vector<double> p(logits.size());
  double z = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - m);
    z += p[i];
  }
  for (double& x : p) x /= z;
  return p;
}

inline double log_softmax_at(std::span<const double> logits, int idx) {
  double m = logits[0];
  for (double l : logits) m = std::max(m, l);
  double z = 0.0;
  for (double l : logits) z += std::exp(l - m);
  return logits[static_cast<size_t>(idx)] - m - std::log(z);
}

inline int sample_categorical(std::span<const double> probs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double u = uni(rng);
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

/// Argmax with ties broken by the lowest index.
inline int argmax_lowest(std::span<const double> values) {
  int best = 0;
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[static_cast<size_t>(best)]) best = static_cast<int>(i);
  return best;
}

inline double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

}  // namespace sofe
