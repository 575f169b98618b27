#include "sofe/augment/encoding.hpp"

#include <algorithm>
#include <cmath>

namespace sofe {

std::string to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::none: return "none";
    case EncodingKind::counts_grid: return "counts_grid";
    case EncodingKind::ellipsoid_diag: return "ellipsoid_diag";
    case EncodingKind::ellipsoid_full: return "ellipsoid_full";
    case EncodingKind::gaussian_params: return "gaussian_params";
  }
  return "?";
}

std::string to_string(Normalization norm) {
  switch (norm) {
    case Normalization::raw: return "raw";
    case Normalization::log1p: return "log1p";
    case Normalization::unit_max: return "unit_max";
  }
  return "?";
}

void check_encoding_compatible(const BonusEngine& engine, const StatEncoding& enc) {
  const BonusKind kind = engine.config().kind;
  switch (enc.kind) {
    case EncodingKind::none:
      return;
    case EncodingKind::counts_grid:
      if (!engine.has_counts())
        throw ConfigError("counts_grid encoding requires a count-based bonus, got " +
                          to_string(kind));
      return;
    case EncodingKind::ellipsoid_diag:
    case EncodingKind::ellipsoid_full:
      if (kind != BonusKind::e3b)
        throw ConfigError("ellipsoid encodings require the e3b bonus, got " + to_string(kind));
      return;
    case EncodingKind::gaussian_params:
      if (kind != BonusKind::smax)
        throw ConfigError("gaussian_params encoding requires the smax bonus, got " +
                          to_string(kind));
      return;
  }
}

namespace {

void normalize_in_place(std::vector<double>& v, Normalization norm) {
  switch (norm) {
    case Normalization::raw:
      return;
    case Normalization::log1p:
      for (double& x : v) x = std::log1p(x);
      return;
    case Normalization::unit_max: {
      double m = 0.0;
      for (double x : v) m = std::max(m, std::abs(x));
      if (m > 0.0)
        for (double& x : v) x /= m;
      return;
    }
  }
}

}  // namespace

std::vector<int> encoded_stats_shape(const BonusEngine& engine, const StatEncoding& enc,
                                     const EnvSpec& spec) {
  switch (enc.kind) {
    case EncodingKind::none:
      return {};
    case EncodingKind::counts_grid:
      return {1, spec.height, spec.width};
    case EncodingKind::ellipsoid_diag:
      return {engine.ellipsoid().dim()};
    case EncodingKind::ellipsoid_full:
      return {engine.ellipsoid().dim(), engine.ellipsoid().dim()};
    case EncodingKind::gaussian_params:
      return {2 * engine.gaussian().dim()};
  }
  return {};
}

Tensor encode_stats(const BonusEngine& engine, const StatEncoding& enc, const EnvSpec& spec) {
  check_encoding_compatible(engine, enc);
  switch (enc.kind) {
    case EncodingKind::none:
      return Tensor{};
    case EncodingKind::counts_grid: {
      std::vector<double> grid(static_cast<size_t>(spec.height) * spec.width, 0.0);
      for (const auto& [key, n] : engine.counts().counts) {
        if (key >= 0 && key < static_cast<int64_t>(grid.size()))
          grid[static_cast<size_t>(key)] = static_cast<double>(n);
      }
      normalize_in_place(grid, enc.normalization);
      return Tensor({1, spec.height, spec.width}, std::move(grid));
    }
    case EncodingKind::ellipsoid_diag: {
      const auto& ell = engine.ellipsoid();
      std::vector<double> diag(static_cast<size_t>(ell.dim()));
      for (int i = 0; i < ell.dim(); ++i) diag[static_cast<size_t>(i)] = ell.inverse_at(i, i);
      normalize_in_place(diag, enc.normalization);
      return Tensor({ell.dim()}, std::move(diag));
    }
    case EncodingKind::ellipsoid_full: {
      const auto& ell = engine.ellipsoid();
      std::vector<double> inv = ell.inverse();
      normalize_in_place(inv, enc.normalization);
      return Tensor({ell.dim(), ell.dim()}, std::move(inv));
    }
    case EncodingKind::gaussian_params: {
      const auto& g = engine.gaussian();
      std::vector<double> out(static_cast<size_t>(2 * g.dim()));
      for (int i = 0; i < g.dim(); ++i) {
        out[static_cast<size_t>(i)] = g.mean(i);
        out[static_cast<size_t>(g.dim() + i)] = g.variance(i);
      }
      normalize_in_place(out, enc.normalization);
      return Tensor({2 * g.dim()}, std::move(out));
    }
  }
  return Tensor{};
}

}  // namespace sofe
