#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sofe/agents/config.hpp"
#include "sofe/augment/encoding.hpp"
#include "sofe/bonus/engine.hpp"
#include "sofe/env/env.hpp"

namespace sofe {

struct SofeConfig {
  bool enabled = false;
  StatEncoding encoding;  // forced to none when disabled
};

struct RunConfig {
  int64_t total_steps = 100'000;
  std::vector<uint64_t> seeds = {1};
  int64_t eval_every = 10'000;
  int eval_episodes = 10;
  int final_eval_episodes = 0;  // 0 -> eval_episodes
  std::optional<double> early_stop_return;
  bool parallel = true;
};

/// Everything one experiment needs: environment, bonus, augmentation,
/// agent, and run sizing. Configs load from JSON; see presets/ for the
/// shipped experiment files.
struct ExperimentConfig {
  EnvSpec env;
  std::string env_name;  // asset name, file path, or "deepsea-N"
  BonusConfig bonus;
  SofeConfig sofe;
  AgentConfig agent;
  RunConfig run;
  std::string output_dir = "runs/out";

  /// Throws ConfigError on invalid combinations (tabular + augmentation,
  /// incompatible bonus/encoding pairs, empty seeds, ...).
  void validate() const;
};

ExperimentConfig experiment_from_json_text(const std::string& text);
ExperimentConfig experiment_from_json_file(const std::string& path);
std::string experiment_to_json_text(const ExperimentConfig& cfg);

/// Applies {"dotted.path": value} overrides onto the raw JSON of a config.
ExperimentConfig apply_overrides_json(const std::string& base_text,
                                      const std::vector<std::pair<std::string, std::string>>& kv);

BonusKind bonus_kind_from_string(const std::string& s);
BonusScope bonus_scope_from_string(const std::string& s);
EncodingKind encoding_kind_from_string(const std::string& s);
Normalization normalization_from_string(const std::string& s);
Algo algo_from_string(const std::string& s);

}  // namespace sofe
