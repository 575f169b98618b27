#include "sofe/bonus/engine.hpp"

#include <stdexcept>

namespace sofe {

void BonusConfig::validate() const {
  if (beta < 0.0) throw std::invalid_argument("BonusConfig: beta must be >= 0");
  if (lambda <= 0.0) throw std::invalid_argument("BonusConfig: lambda must be > 0");
  if (sigma_floor <= 0.0) throw std::invalid_argument("BonusConfig: sigma_floor must be > 0");
}

std::string to_string(BonusKind kind) {
  switch (kind) {
    case BonusKind::none: return "none";
    case BonusKind::count_sqrt: return "count_sqrt";
    case BonusKind::count_salesman: return "count_salesman";
    case BonusKind::e3b: return "e3b";
    case BonusKind::smax: return "smax";
  }
  return "?";
}

std::string to_string(BonusScope scope) {
  return scope == BonusScope::episodic ? "episodic" : "global";
}

BonusEngine::BonusEngine(BonusConfig cfg, const EnvSpec& spec) : cfg_(cfg) {
  cfg_.validate();
  const int cells = spec.width * spec.height;
  if (cfg_.kind == BonusKind::e3b) features_ = FeatureMap::one_hot(cells);
  if (cfg_.kind == BonusKind::smax) features_ = FeatureMap::coords(spec.width);
  if (features_ && cfg_.kind == BonusKind::e3b)
    ellipsoid_.emplace(features_->dim(), cfg_.lambda);
  if (features_ && cfg_.kind == BonusKind::smax)
    gaussian_.emplace(features_->dim(), cfg_.sigma_floor);
}

BonusEngine::BonusEngine(BonusConfig cfg, FeatureMap features) : cfg_(cfg) {
  cfg_.validate();
  features_ = std::move(features);
  if (cfg_.kind == BonusKind::e3b) ellipsoid_.emplace(features_->dim(), cfg_.lambda);
  if (cfg_.kind == BonusKind::smax) gaussian_.emplace(features_->dim(), cfg_.sigma_floor);
}

void BonusEngine::reset_stats() {
  table_.clear();
  if (!count_prior_.empty()) table_.seed(count_prior_);
  if (ellipsoid_) ellipsoid_->reset();
  if (gaussian_) gaussian_->reset();
}

void BonusEngine::absorb(int64_t key, const Tensor& obs) {
  switch (cfg_.kind) {
    case BonusKind::none:
      break;
    case BonusKind::count_sqrt:
    case BonusKind::count_salesman:
      table_.update(key);
      break;
    case BonusKind::e3b:
      ellipsoid_->update(features_->encode(key, obs));
      break;
    case BonusKind::smax:
      gaussian_->update(features_->encode(key, obs));
      break;
  }
}

void BonusEngine::begin_episode(int64_t start_key, const Tensor& start_obs) {
  if (cfg_.scope == BonusScope::episodic) reset_stats();
  absorb(start_key, start_obs);
}

double BonusEngine::on_transition(int64_t next_key, const Tensor& next_obs) {
  switch (cfg_.kind) {
    case BonusKind::none:
      return 0.0;
    case BonusKind::count_salesman: {
      const double b = count_bonus_salesman(table_, next_key);
      table_.update(next_key);
      return b;
    }
    case BonusKind::count_sqrt:
      table_.update(next_key);
      return count_bonus_sqrt(table_, next_key, cfg_.beta);
    case BonusKind::e3b: {
      const auto psi = features_->encode(next_key, next_obs);
      const double b = ellipsoid_->bonus(psi);
      ellipsoid_->update(psi);
      return b;
    }
    case BonusKind::smax: {
      const auto x = features_->encode(next_key, next_obs);
      const double b = gaussian_->neg_log_density(x);
      gaussian_->update(x);
      return b;
    }
  }
  throw std::logic_error("BonusEngine: unreachable");
}

void BonusEngine::seed_counts(const std::unordered_map<int64_t, int64_t>& prior) {
  count_prior_ = prior;
  table_.seed(prior);
}

}  // namespace sofe
