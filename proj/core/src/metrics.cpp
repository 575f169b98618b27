#include "sofe/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sofe {

namespace {

// %.17g round-trips doubles exactly, keeping CSV logs byte-stable across
// identical runs.
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

const char* MetricsLog::csv_header() {
  return "seed,env_step,episode,extrinsic_return,intrinsic_return,episode_coverage,global_coverage";
}

std::string MetricsLog::to_csv() const {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const auto& r : rows) {
    os << r.seed << ',' << r.env_step << ',' << r.episode << ',' << fmt_double(r.extrinsic_return)
       << ',' << fmt_double(r.intrinsic_return) << ',' << fmt_double(r.episode_coverage) << ','
       << fmt_double(r.global_coverage) << '\n';
  }
  return os.str();
}

MetricsLog MetricsLog::from_csv(const std::string& text) {
  MetricsLog log;
  std::istringstream ss(text);
  std::string line;
  bool first = true;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != csv_header()) throw std::runtime_error("MetricsLog: unexpected CSV header");
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw std::runtime_error("MetricsLog: malformed CSV row");
    MetricsRow r;
    r.seed = std::stoull(f[0]);
    r.env_step = std::stoll(f[1]);
    r.episode = std::stoll(f[2]);
    r.extrinsic_return = std::stod(f[3]);
    r.intrinsic_return = std::stod(f[4]);
    r.episode_coverage = std::stod(f[5]);
    r.global_coverage = std::stod(f[6]);
    log.rows.push_back(r);
  }
  return log;
}

void MetricsLog::write_csv(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("MetricsLog: cannot open " + path);
  os << to_csv();
}

MetricsLog MetricsLog::read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("MetricsLog: cannot open " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return from_csv(buf.str());
}

const char* EvalLog::csv_header() {
  return "seed,env_step,mean_extrinsic_return,mean_episode_coverage,episodes";
}

std::string EvalLog::to_csv() const {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const auto& r : rows) {
    os << r.seed << ',' << r.env_step << ',' << fmt_double(r.mean_extrinsic_return) << ','
       << fmt_double(r.mean_episode_coverage) << ',' << r.episodes << '\n';
  }
  return os.str();
}

EvalLog EvalLog::from_csv(const std::string& text) {
  EvalLog log;
  std::istringstream ss(text);
  std::string line;
  bool first = true;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != csv_header()) throw std::runtime_error("EvalLog: unexpected CSV header");
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 5) throw std::runtime_error("EvalLog: malformed CSV row");
    EvalRow r;
    r.seed = std::stoull(f[0]);
    r.env_step = std::stoll(f[1]);
    r.mean_extrinsic_return = std::stod(f[2]);
    r.mean_episode_coverage = std::stod(f[3]);
    r.episodes = std::stoi(f[4]);
    log.rows.push_back(r);
  }
  return log;
}

void EvalLog::write_csv(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("EvalLog: cannot open " + path);
  os << to_csv();
}

EvalLog EvalLog::read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("EvalLog: cannot open " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return from_csv(buf.str());
}

CoverageTracker::CoverageTracker(int denominator) : denominator_(denominator) {
  if (denominator < 1) throw std::invalid_argument("CoverageTracker: denominator must be >= 1");
}

void CoverageTracker::begin_episode(int64_t key) {
  episodic_.clear();
  visit(key);
}

void CoverageTracker::visit(int64_t key) {
  episodic_.insert(key);
  global_.insert(key);
  ++visit_counts_[key];
}

double CoverageTracker::episodic_coverage() const {
  return static_cast<double>(episodic_.size()) / denominator_;
}

double CoverageTracker::global_coverage() const {
  return static_cast<double>(global_.size()) / denominator_;
}

double iqm(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("iqm: empty input");
  std::sort(values.begin(), values.end());
  const size_t drop = values.size() / 4;
  double sum = 0.0;
  for (size_t i = drop; i < values.size() - drop; ++i) sum += values[i];
  return sum / static_cast<double>(values.size() - 2 * drop);
}

Interval stratified_bootstrap_ci(const std::vector<std::vector<double>>& per_seed_samples,
                                 int iters, double level, uint64_t rng_seed) {
  if (per_seed_samples.size() < 2)
    throw std::invalid_argument("stratified_bootstrap_ci: need >= 2 seed strata");
  for (const auto& s : per_seed_samples)
    if (s.empty()) throw std::invalid_argument("stratified_bootstrap_ci: empty stratum");

  std::mt19937_64 rng(rng_seed);
  std::vector<double> replicates(static_cast<size_t>(iters));
  std::vector<double> pooled;
  for (int it = 0; it < iters; ++it) {
    pooled.clear();
    for (const auto& stratum : per_seed_samples) {
      std::uniform_int_distribution<size_t> pick(0, stratum.size() - 1);
      for (size_t i = 0; i < stratum.size(); ++i) pooled.push_back(stratum[pick(rng)]);
    }
    replicates[static_cast<size_t>(it)] = iqm(pooled);
  }
  std::sort(replicates.begin(), replicates.end());
  const double alpha = (1.0 - level) / 2.0;
  auto at_quantile = [&](double q) {
    const auto idx = static_cast<size_t>(std::llround(q * (iters - 1)));
    return replicates[std::min(idx, replicates.size() - 1)];
  };
  return {at_quantile(alpha), at_quantile(1.0 - alpha)};
}

}  // namespace sofe
