#include "sofe/agents/tabular_q.hpp"

#include <algorithm>

#include "sofe/agents/distributions.hpp"

namespace sofe {

const std::vector<double>* TabularQ::row(int64_t s) const {
  auto it = table_.find(s);
  return it == table_.end() ? nullptr : &it->second;
}

double TabularQ::q(int64_t s, int action) const {
  const auto* r = row(s);
  return r ? (*r)[static_cast<size_t>(action)] : 0.0;
}

void TabularQ::update(int64_t s, int action, double reward, int64_t s_next, bool done) {
  double target = reward;
  if (!done) {
    const auto* next = row(s_next);
    double best = 0.0;
    if (next) best = *std::max_element(next->begin(), next->end());
    target += gamma_ * best;
  }
  auto& r = table_.try_emplace(s, std::vector<double>(static_cast<size_t>(n_actions_), 0.0))
                .first->second;
  r[static_cast<size_t>(action)] += alpha_ * (target - r[static_cast<size_t>(action)]);
}

int TabularQ::greedy(int64_t s) const {
  const auto* r = row(s);
  if (!r) return 0;
  return argmax_lowest(*r);
}

int TabularQ::act_epsilon_greedy(int64_t s, double epsilon, std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  if (uni(rng) < epsilon) {
    std::uniform_int_distribution<int> pick(0, n_actions_ - 1);
    return pick(rng);
  }
  return greedy(s);
}

}  // namespace sofe
