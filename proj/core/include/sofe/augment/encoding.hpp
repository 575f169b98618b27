#pragma once

#include <stdexcept>
#include <string>

#include "sofe/bonus/engine.hpp"
#include "sofe/tensor.hpp"

namespace sofe {

enum class EncodingKind { none, counts_grid, ellipsoid_diag, ellipsoid_full, gaussian_params };
enum class Normalization { raw, log1p, unit_max };

/// How the active bonus's sufficient statistics are rendered into the
/// observation. The output shape is constant across a run.
struct StatEncoding {
  EncodingKind kind = EncodingKind::none;
  Normalization normalization = Normalization::log1p;
};

std::string to_string(EncodingKind kind);
std::string to_string(Normalization norm);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError when the encoding cannot be produced from the
/// engine's statistics (e.g. counts_grid with an e3b engine).
void check_encoding_compatible(const BonusEngine& engine, const StatEncoding& enc);

/// Pure function of the engine's current statistics:
///   counts_grid     -> (1, H, W) normalized visit counts
///   ellipsoid_diag  -> (d) diagonal of the maintained inverse
///   ellipsoid_full  -> (d, d) maintained inverse
///   gaussian_params -> (2d) mean then floored variance
///   none            -> empty tensor
Tensor encode_stats(const BonusEngine& engine, const StatEncoding& enc, const EnvSpec& spec);

std::vector<int> encoded_stats_shape(const BonusEngine& engine, const StatEncoding& enc,
                                     const EnvSpec& spec);

}  // namespace sofe
