#include "sofe/agents/rollout.hpp"

#include <stdexcept>

namespace sofe {

GaeResult gae(std::span<const double> rewards, std::span<const double> values,
              std::span<const uint8_t> dones, double gamma, double lambda) {
  const size_t t_max = rewards.size();
  if (values.size() != t_max + 1 || dones.size() != t_max)
    throw std::invalid_argument("gae: expected |values| = T+1 and |dones| = T");
  GaeResult out;
  out.advantages.resize(t_max);
  out.returns.resize(t_max);
  double running = 0.0;
  for (size_t i = t_max; i-- > 0;) {
    const double not_done = dones[i] ? 0.0 : 1.0;
    const double delta = rewards[i] + gamma * values[i + 1] * not_done - values[i];
    running = delta + gamma * lambda * not_done * running;
    out.advantages[i] = running;
    out.returns[i] = running + values[i];
  }
  return out;
}

RolloutBuffer::RolloutBuffer(int num_envs, int n_steps)
    : num_envs_(num_envs), n_steps_(n_steps), streams_(static_cast<size_t>(num_envs)) {
  for (auto& s : streams_) s.reserve(static_cast<size_t>(n_steps));
}

void RolloutBuffer::clear() {
  for (auto& s : streams_) s.clear();
  finished_ = false;
}

void RolloutBuffer::push(int env, Tensor obs, Tensor stats, int action, double logprob,
                         double value, double reward, bool done) {
  auto& stream = streams_[static_cast<size_t>(env)];
  if (static_cast<int>(stream.size()) >= n_steps_)
    throw std::logic_error("RolloutBuffer: stream already full");
  stream.push_back({std::move(obs), std::move(stats), action, logprob, value, reward, done, 0.0, 0.0});
}

bool RolloutBuffer::full() const {
  for (const auto& s : streams_)
    if (static_cast<int>(s.size()) < n_steps_) return false;
  return true;
}

void RolloutBuffer::finish(std::span<const double> last_values, double gamma, double lambda) {
  if (!full()) throw std::logic_error("RolloutBuffer::finish before full");
  if (static_cast<int>(last_values.size()) != num_envs_)
    throw std::invalid_argument("RolloutBuffer::finish: one bootstrap value per env");
  for (int e = 0; e < num_envs_; ++e) {
    auto& stream = streams_[static_cast<size_t>(e)];
    std::vector<double> rewards, values;
    std::vector<uint8_t> dones;
    rewards.reserve(stream.size());
    values.reserve(stream.size() + 1);
    for (const auto& s : stream) {
      rewards.push_back(s.reward);
      values.push_back(s.value);
      dones.push_back(s.done ? 1 : 0);
    }
    values.push_back(last_values[static_cast<size_t>(e)]);
    GaeResult g = gae(rewards, values, dones, gamma, lambda);
    for (size_t t = 0; t < stream.size(); ++t) {
      stream[t].advantage = g.advantages[t];
      stream[t].ret = g.returns[t];
    }
  }
  finished_ = true;
}

RolloutBuffer::Entry RolloutBuffer::entry(int64_t flat_index) const {
  if (!finished_) throw std::logic_error("RolloutBuffer::entry before finish");
  const auto env = static_cast<size_t>(flat_index / n_steps_);
  const auto step = static_cast<size_t>(flat_index % n_steps_);
  const Step& s = streams_[env][step];
  return {&s.obs, &s.stats, s.action, s.logprob, s.value, s.reward, s.done, s.advantage, s.ret};
}

}  // namespace sofe
