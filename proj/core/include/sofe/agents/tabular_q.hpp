#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

namespace sofe {

/// Standard tabular Q-learning over discrete, unaugmented state keys.
/// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)); terminal
/// transitions bootstrap 0.
class TabularQ {
 public:
  TabularQ(int n_actions, double alpha, double gamma)
      : n_actions_(n_actions), alpha_(alpha), gamma_(gamma) {}

  void update(int64_t s, int action, double reward, int64_t s_next, bool done);

  double q(int64_t s, int action) const;
  /// Greedy action with ties broken by the lowest index.
  int greedy(int64_t s) const;
  int act_epsilon_greedy(int64_t s, double epsilon, std::mt19937_64& rng) const;

  int n_actions() const { return n_actions_; }
  size_t table_size() const { return table_.size(); }

 private:
  const std::vector<double>* row(int64_t s) const;

  int n_actions_;
  double alpha_, gamma_;
  std::unordered_map<int64_t, std::vector<double>> table_;
};

}  // namespace sofe
