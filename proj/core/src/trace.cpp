#include "sofe/augment/trace.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sofe {

using nlohmann::json;

uint64_t tensor_hash(const Tensor& t) {
  // FNV-1a over the raw bytes of shape and data.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* ptr, size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(ptr);
    for (size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  for (int d : t.shape()) mix(&d, sizeof(d));
  mix(t.data(), static_cast<size_t>(t.numel()) * sizeof(double));
  return h;
}

TraceRecord make_trace_record(const AugStepResult& result, int action) {
  TraceRecord rec;
  rec.step = result.step_index;
  rec.obs_hash = tensor_hash(result.obs.base);
  rec.stats_shape = result.obs.stats.shape();
  rec.stats = result.obs.stats.vec();
  rec.action = action;
  rec.extrinsic = result.extrinsic;
  rec.intrinsic = result.intrinsic;
  rec.combined = result.combined;
  rec.done = result.done;
  rec.cell = result.cell;
  return rec;
}

namespace {

json record_to_json(const TraceRecord& r) {
  json j;
  j["step"] = r.step;
  std::ostringstream hash;
  hash << std::hex << r.obs_hash;
  j["obs_hash"] = hash.str();
  j["stats_shape"] = r.stats_shape;
  j["stats"] = r.stats;
  j["action"] = r.action;
  j["reward"] = {{"extrinsic", r.extrinsic}, {"intrinsic", r.intrinsic}, {"combined", r.combined}};
  j["done"] = r.done;
  j["cell"] = {r.cell.row, r.cell.col};
  return j;
}

TraceRecord record_from_json(const json& j) {
  TraceRecord r;
  r.step = j.at("step").get<int>();
  r.obs_hash = std::stoull(j.at("obs_hash").get<std::string>(), nullptr, 16);
  r.stats_shape = j.at("stats_shape").get<std::vector<int>>();
  r.stats = j.at("stats").get<std::vector<double>>();
  r.action = j.at("action").get<int>();
  r.extrinsic = j.at("reward").at("extrinsic").get<double>();
  r.intrinsic = j.at("reward").at("intrinsic").get<double>();
  r.combined = j.at("reward").at("combined").get<double>();
  r.done = j.at("done").get<bool>();
  r.cell = {j.at("cell")[0].get<int>(), j.at("cell")[1].get<int>()};
  return r;
}

}  // namespace

std::string trace_to_jsonl(const std::vector<TraceRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
  return out.str();
}

std::vector<TraceRecord> trace_from_jsonl(const std::string& text) {
  std::vector<TraceRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json(json::parse(line)));
  }
  return out;
}

void write_trace(const std::string& path, const std::vector<TraceRecord>& records) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_trace: cannot open " + path);
  os << trace_to_jsonl(records);
}

std::vector<TraceRecord> read_trace(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_trace: cannot open " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return trace_from_jsonl(buf.str());
}

namespace {

int64_t decode_count(double encoded, Normalization norm) {
  switch (norm) {
    case Normalization::raw:
      return std::llround(encoded);
    case Normalization::log1p:
      return std::llround(std::expm1(encoded));
    case Normalization::unit_max:
      throw std::invalid_argument("replay check: unit_max counts are not invertible");
  }
  return 0;
}

/// Recomputes the intrinsic reward of the (prev -> cur) transition from
/// prev's statistics tensor and cur's arrival cell.
double recompute_intrinsic(const TraceRecord& prev, const TraceRecord& cur,
                           const BonusConfig& bonus, const StatEncoding& enc,
                           const EnvSpec& spec) {
  const int64_t key = static_cast<int64_t>(cur.cell.row) * spec.width + cur.cell.col;
  switch (bonus.kind) {
    case BonusKind::none:
      return 0.0;
    case BonusKind::count_salesman: {
      const int64_t pre = decode_count(prev.stats[static_cast<size_t>(key)], enc.normalization);
      return pre == 0 ? 1.0 : 0.0;
    }
    case BonusKind::count_sqrt: {
      const int64_t pre = decode_count(prev.stats[static_cast<size_t>(key)], enc.normalization);
      return bonus.beta / std::sqrt(static_cast<double>(pre + 1));
    }
    case BonusKind::e3b: {
      // One-hot features: the quadratic form reduces to the diagonal entry
      // at the arrival index, which both encodings expose directly.
      if (enc.kind == EncodingKind::ellipsoid_diag)
        return prev.stats[static_cast<size_t>(key)];
      const int d = prev.stats_shape.at(0);
      return prev.stats[static_cast<size_t>(key) * d + key];
    }
    case BonusKind::smax: {
      const int d = prev.stats_shape.at(0) / 2;
      const double x[2] = {static_cast<double>(cur.cell.row), static_cast<double>(cur.cell.col)};
      double out = 0.0;
      for (int i = 0; i < d; ++i) {
        const double mu = prev.stats[static_cast<size_t>(i)];
        const double var = prev.stats[static_cast<size_t>(d + i)];
        const double diff = x[i] - mu;
        out += 0.5 * std::log(2.0 * std::numbers::pi * var) + diff * diff / (2.0 * var);
      }
      return out;
    }
  }
  throw std::logic_error("replay check: unreachable");
}

}  // namespace

ReplayReport replay_determinism_check(const std::vector<TraceRecord>& records,
                                      const BonusConfig& bonus, const StatEncoding& enc,
                                      const EnvSpec& spec) {
  ReplayReport report;
  const bool augmented = enc.kind != EncodingKind::none;
  const double tol =
      (bonus.kind == BonusKind::e3b || bonus.kind == BonusKind::smax) ? 1e-12 : 0.0;

  std::map<std::tuple<uint64_t, int, uint64_t>, std::pair<double, double>> groups;  // min,max
  for (size_t i = 1; i < records.size(); ++i) {
    const TraceRecord& prev = records[i - 1];
    const TraceRecord& cur = records[i];
    if (cur.step != prev.step + 1) continue;  // episode boundary

    if (augmented) {
      const double recomputed = recompute_intrinsic(prev, cur, bonus, enc, spec);
      const double err = std::abs(recomputed - cur.intrinsic);
      report.max_abs_error = std::max(report.max_abs_error, err);
      if (err > tol) ++report.mismatches;
      ++report.transitions_checked;
    }

    const auto key = std::make_tuple(prev.obs_hash, cur.action, cur.obs_hash);
    auto [it, inserted] = groups.try_emplace(key, std::make_pair(cur.intrinsic, cur.intrinsic));
    if (!inserted) {
      it->second.first = std::min(it->second.first, cur.intrinsic);
      it->second.second = std::max(it->second.second, cur.intrinsic);
    }
  }
  report.groups = static_cast<int>(groups.size());
  for (const auto& [_, mm] : groups)
    if (mm.second - mm.first > 1e-12) ++report.divergent_groups;
  return report;
}

}  // namespace sofe
