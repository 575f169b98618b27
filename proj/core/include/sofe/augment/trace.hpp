#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sofe/augment/augmented_env.hpp"

namespace sofe {

/// One augmented transition. Records are written as line-delimited JSON;
/// step 0 marks an episode start (no action, zero rewards). The base
/// observation is stored as a 64-bit content hash; the arrival cell, which
/// is derivable from the base observation, is kept explicitly so rewards
/// can be recomputed without the full tensor.
struct TraceRecord {
  int step = 0;
  uint64_t obs_hash = 0;
  std::vector<int> stats_shape;
  std::vector<double> stats;
  int action = -1;
  double extrinsic = 0.0;
  double intrinsic = 0.0;
  double combined = 0.0;
  bool done = false;
  Cell cell;
};

uint64_t tensor_hash(const Tensor& t);

TraceRecord make_trace_record(const AugStepResult& result, int action);

void write_trace(const std::string& path, const std::vector<TraceRecord>& records);
std::vector<TraceRecord> read_trace(const std::string& path);
std::string trace_to_jsonl(const std::vector<TraceRecord>& records);
std::vector<TraceRecord> trace_from_jsonl(const std::string& text);

struct ReplayReport {
  int transitions_checked = 0;
  int mismatches = 0;          // reward recomputation failures
  double max_abs_error = 0.0;  // worst recomputation error
  int groups = 0;              // distinct (o, a, o') groups seen
  int divergent_groups = 0;    // groups whose recorded rewards differ
};

/// Checks that the recorded intrinsic rewards are a deterministic function
/// of (augmented state, action, next augmented state) by recomputing each
/// reward from the stored statistics tensor and the arrival cell. Exact
/// equality is required for count bonuses, 1e-12 absolute for e3b/smax.
/// Also groups transitions by the unaugmented (obs, action, obs') triple
/// and counts groups with differing rewards; on traces recorded without
/// augmentation a revisiting policy should produce at least one divergent
/// group, exhibiting the non-stationarity the augmentation removes.
ReplayReport replay_determinism_check(const std::vector<TraceRecord>& records,
                                      const BonusConfig& bonus, const StatEncoding& enc,
                                      const EnvSpec& spec);

}  // namespace sofe
