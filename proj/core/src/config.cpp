#include "sofe/harness/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sofe/env/assets.hpp"
#include "sofe/env/deepsea.hpp"

namespace sofe {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ConfigError("config: " + msg); }

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

BonusKind bonus_kind_from_string(const std::string& s) {
  if (s == "none") return BonusKind::none;
  if (s == "count_sqrt") return BonusKind::count_sqrt;
  if (s == "count_salesman") return BonusKind::count_salesman;
  if (s == "e3b") return BonusKind::e3b;
  if (s == "smax") return BonusKind::smax;
  bad("unknown bonus kind '" + s + "'");
}

BonusScope bonus_scope_from_string(const std::string& s) {
  if (s == "episodic") return BonusScope::episodic;
  if (s == "global") return BonusScope::global;
  bad("unknown bonus scope '" + s + "'");
}

EncodingKind encoding_kind_from_string(const std::string& s) {
  if (s == "none") return EncodingKind::none;
  if (s == "counts_grid") return EncodingKind::counts_grid;
  if (s == "ellipsoid_diag") return EncodingKind::ellipsoid_diag;
  if (s == "ellipsoid_full") return EncodingKind::ellipsoid_full;
  if (s == "gaussian_params") return EncodingKind::gaussian_params;
  bad("unknown encoding '" + s + "'");
}

Normalization normalization_from_string(const std::string& s) {
  if (s == "raw") return Normalization::raw;
  if (s == "log1p") return Normalization::log1p;
  if (s == "unit_max") return Normalization::unit_max;
  bad("unknown normalization '" + s + "'");
}

Algo algo_from_string(const std::string& s) {
  if (s == "tabular_q") return Algo::tabular_q;
  if (s == "dqn") return Algo::dqn;
  if (s == "a2c") return Algo::a2c;
  if (s == "ppo") return Algo::ppo;
  bad("unknown algo '" + s + "'");
}

namespace {

void parse_env(const json& j, ExperimentConfig& cfg) {
  if (!j.is_object()) bad("'env' must be an object");
  const std::string kind = get_or<std::string>(j, "kind", "maze");
  if (kind == "deepsea") {
    const int n = get_or<int>(j, "n", 10);
    cfg.env = DeepSeaEnv::make_spec(n);
    cfg.env_name = "deepsea-" + std::to_string(n);
  } else if (kind == "maze") {
    if (j.contains("asset")) {
      const auto name = j.at("asset").get<std::string>();
      if (!has_maze_asset(name)) bad("unknown maze asset '" + name + "'");
      cfg.env = maze_asset(name);
      cfg.env_name = name;
    } else if (j.contains("ascii_file")) {
      const auto path = j.at("ascii_file").get<std::string>();
      std::ifstream is(path);
      if (!is) bad("cannot open maze file '" + path + "'");
      std::stringstream buf;
      buf << is.rdbuf();
      cfg.env = maze_from_ascii(buf.str());
      cfg.env_name = path;
    } else {
      bad("'env' needs 'asset' or 'ascii_file'");
    }
    if (j.contains("max_steps")) cfg.env.max_steps = j.at("max_steps").get<int>();
  } else {
    bad("unknown env kind '" + kind + "'");
  }
  try {
    cfg.env.validate();
  } catch (const std::exception& e) {
    bad(e.what());
  }
}

void parse_bonus(const json& j, BonusConfig& b) {
  b.kind = bonus_kind_from_string(get_or<std::string>(j, "kind", "none"));
  b.beta = get_or<double>(j, "beta", b.beta);
  b.lambda = get_or<double>(j, "lambda", b.lambda);
  b.sigma_floor = get_or<double>(j, "sigma_floor", b.sigma_floor);
  b.scope = bonus_scope_from_string(get_or<std::string>(j, "scope", "episodic"));
  b.intrinsic_scale = get_or<double>(j, "intrinsic_scale", b.intrinsic_scale);
}

void parse_sofe(const json& j, SofeConfig& s) {
  s.enabled = get_or<bool>(j, "enabled", false);
  s.encoding.kind = encoding_kind_from_string(get_or<std::string>(j, "encoding", "none"));
  s.encoding.normalization =
      normalization_from_string(get_or<std::string>(j, "normalization", "log1p"));
  if (!s.enabled) s.encoding.kind = EncodingKind::none;
}

void parse_net(const json& j, NetConfig& n) {
  const std::string enc = get_or<std::string>(j, "encoder", "conv");
  if (enc == "conv")
    n.obs_encoder = NetConfig::Encoder::conv;
  else if (enc == "dense")
    n.obs_encoder = NetConfig::Encoder::dense;
  else
    bad("unknown net encoder '" + enc + "'");
  n.conv_channels = get_or<int>(j, "conv_channels", n.conv_channels);
  n.conv_layers = get_or<int>(j, "conv_layers", n.conv_layers);
  n.hidden = get_or<int>(j, "hidden", n.hidden);
  n.trunk_hidden = get_or<int>(j, "trunk_hidden", n.trunk_hidden);
}

void parse_agent(const json& j, AgentConfig& a) {
  if (!j.contains("algo")) bad("'agent.algo' is required");
  a = AgentConfig::defaults(algo_from_string(j.at("algo").get<std::string>()));
  a.gamma = get_or<double>(j, "gamma", a.gamma);
  a.learning_rate = get_or<double>(j, "learning_rate", a.learning_rate);
  a.num_envs = get_or<int>(j, "num_envs", a.num_envs);
  a.max_grad_norm = get_or<double>(j, "max_grad_norm", a.max_grad_norm);
  a.buffer_size = get_or<int>(j, "buffer_size", a.buffer_size);
  a.learning_starts = get_or<int>(j, "learning_starts", a.learning_starts);
  a.batch_size = get_or<int>(j, "batch_size", a.batch_size);
  a.tau = get_or<double>(j, "tau", a.tau);
  a.train_frequency = get_or<int>(j, "train_frequency", a.train_frequency);
  a.gradient_steps = get_or<int>(j, "gradient_steps", a.gradient_steps);
  a.target_update_interval = get_or<int>(j, "target_update_interval", a.target_update_interval);
  a.exploration_fraction = get_or<double>(j, "exploration_fraction", a.exploration_fraction);
  a.exploration_initial_eps = get_or<double>(j, "exploration_initial_eps", a.exploration_initial_eps);
  a.exploration_final_eps = get_or<double>(j, "exploration_final_eps", a.exploration_final_eps);
  a.n_steps = get_or<int>(j, "n_steps", a.n_steps);
  a.n_epochs = get_or<int>(j, "n_epochs", a.n_epochs);
  a.gae_lambda = get_or<double>(j, "gae_lambda", a.gae_lambda);
  a.clip_range = get_or<double>(j, "clip_range", a.clip_range);
  a.normalize_advantage = get_or<bool>(j, "normalize_advantage", a.normalize_advantage);
  a.ent_coef = get_or<double>(j, "ent_coef", a.ent_coef);
  a.vf_coef = get_or<double>(j, "vf_coef", a.vf_coef);
  a.rms_prop_eps = get_or<double>(j, "rms_prop_eps", a.rms_prop_eps);
  a.use_rms_prop = get_or<bool>(j, "use_rms_prop", a.use_rms_prop);
  a.alpha = get_or<double>(j, "alpha", a.alpha);
  if (j.contains("net")) parse_net(j.at("net"), a.net);
}

void parse_run(const json& j, RunConfig& r) {
  r.total_steps = get_or<int64_t>(j, "total_steps", r.total_steps);
  if (j.contains("seeds")) r.seeds = j.at("seeds").get<std::vector<uint64_t>>();
  r.eval_every = get_or<int64_t>(j, "eval_every", r.eval_every);
  r.eval_episodes = get_or<int>(j, "eval_episodes", r.eval_episodes);
  r.final_eval_episodes = get_or<int>(j, "final_eval_episodes", r.final_eval_episodes);
  if (j.contains("early_stop_return"))
    r.early_stop_return = j.at("early_stop_return").get<double>();
  r.parallel = get_or<bool>(j, "parallel", r.parallel);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (run.seeds.empty()) throw ConfigError("config: 'run.seeds' must be nonempty");
  if (run.total_steps < 1) throw ConfigError("config: 'run.total_steps' must be >= 1");
  if (run.eval_every < 1) throw ConfigError("config: 'run.eval_every' must be >= 1");
  if (run.eval_episodes < 1) throw ConfigError("config: 'run.eval_episodes' must be >= 1");
  try {
    bonus.validate();
    agent.validate();
    env.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (agent.algo == Algo::tabular_q && sofe.enabled)
    throw ConfigError("config: tabular agents pair only with encoding none; "
                      "augmented statistics would explode the table");
  if (sofe.enabled && sofe.encoding.kind == EncodingKind::none)
    throw ConfigError("config: sofe.enabled requires an encoding");
  // Static compatibility check mirroring check_encoding_compatible.
  BonusEngine probe(bonus, env);
  check_encoding_compatible(probe, sofe.encoding);
}

ExperimentConfig experiment_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  if (!j.contains("env")) bad("'env' is required");
  parse_env(j.at("env"), cfg);
  if (j.contains("bonus")) parse_bonus(j.at("bonus"), cfg.bonus);
  if (j.contains("sofe")) parse_sofe(j.at("sofe"), cfg.sofe);
  if (!j.contains("agent")) bad("'agent' is required");
  parse_agent(j.at("agent"), cfg.agent);
  if (j.contains("run")) parse_run(j.at("run"), cfg.run);
  cfg.output_dir = get_or<std::string>(j, "output_dir", cfg.output_dir);
  cfg.validate();
  return cfg;
}

ExperimentConfig experiment_from_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) bad("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << is.rdbuf();
  return experiment_from_json_text(buf.str());
}

std::string experiment_to_json_text(const ExperimentConfig& cfg) {
  json j;
  j["env"]["kind"] = cfg.env.kind == EnvKind::deepsea ? "deepsea" : "maze";
  if (cfg.env.kind == EnvKind::deepsea) {
    j["env"]["n"] = cfg.env.deepsea_n;
  } else {
    j["env"]["asset"] = cfg.env_name;
    j["env"]["max_steps"] = cfg.env.max_steps;
  }
  j["bonus"] = {{"kind", to_string(cfg.bonus.kind)},
                {"beta", cfg.bonus.beta},
                {"lambda", cfg.bonus.lambda},
                {"sigma_floor", cfg.bonus.sigma_floor},
                {"scope", to_string(cfg.bonus.scope)},
                {"intrinsic_scale", cfg.bonus.intrinsic_scale}};
  j["sofe"] = {{"enabled", cfg.sofe.enabled},
               {"encoding", to_string(cfg.sofe.encoding.kind)},
               {"normalization", to_string(cfg.sofe.encoding.normalization)}};
  j["agent"] = {{"algo", to_string(cfg.agent.algo)},
                {"gamma", cfg.agent.gamma},
                {"learning_rate", cfg.agent.learning_rate},
                {"num_envs", cfg.agent.num_envs},
                {"max_grad_norm", cfg.agent.max_grad_norm},
                {"buffer_size", cfg.agent.buffer_size},
                {"learning_starts", cfg.agent.learning_starts},
                {"batch_size", cfg.agent.batch_size},
                {"tau", cfg.agent.tau},
                {"train_frequency", cfg.agent.train_frequency},
                {"gradient_steps", cfg.agent.gradient_steps},
                {"target_update_interval", cfg.agent.target_update_interval},
                {"exploration_fraction", cfg.agent.exploration_fraction},
                {"exploration_initial_eps", cfg.agent.exploration_initial_eps},
                {"exploration_final_eps", cfg.agent.exploration_final_eps},
                {"n_steps", cfg.agent.n_steps},
                {"n_epochs", cfg.agent.n_epochs},
                {"gae_lambda", cfg.agent.gae_lambda},
                {"clip_range", cfg.agent.clip_range},
                {"normalize_advantage", cfg.agent.normalize_advantage},
                {"ent_coef", cfg.agent.ent_coef},
                {"vf_coef", cfg.agent.vf_coef},
                {"rms_prop_eps", cfg.agent.rms_prop_eps},
                {"use_rms_prop", cfg.agent.use_rms_prop},
                {"alpha", cfg.agent.alpha},
                {"net",
                 {{"encoder",
                   cfg.agent.net.obs_encoder == NetConfig::Encoder::conv ? "conv" : "dense"},
                  {"conv_channels", cfg.agent.net.conv_channels},
                  {"conv_layers", cfg.agent.net.conv_layers},
                  {"hidden", cfg.agent.net.hidden},
                  {"trunk_hidden", cfg.agent.net.trunk_hidden}}}};
  j["run"] = {{"total_steps", cfg.run.total_steps},
              {"seeds", cfg.run.seeds},
              {"eval_every", cfg.run.eval_every},
              {"eval_episodes", cfg.run.eval_episodes},
              {"final_eval_episodes", cfg.run.final_eval_episodes},
              {"parallel", cfg.run.parallel}};
  if (cfg.run.early_stop_return) j["run"]["early_stop_return"] = *cfg.run.early_stop_return;
  j["output_dir"] = cfg.output_dir;
  return j.dump(2);
}

ExperimentConfig apply_overrides_json(const std::string& base_text,
                                      const std::vector<std::pair<std::string, std::string>>& kv) {
  json j = json::parse(base_text);
  for (const auto& [path, value] : kv) {
    json* node = &j;
    std::istringstream ss(path);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    for (size_t i = 0; i + 1 < parts.size(); ++i) node = &((*node)[parts[i]]);
    try {
      (*node)[parts.back()] = json::parse(value);
    } catch (const json::exception&) {
      (*node)[parts.back()] = value;  // plain string
    }
  }
  return experiment_from_json_text(j.dump());
}

}  // namespace sofe
