#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sofe {

/// Row-major grid of visit counts.
struct VisitGrid {
  int height = 0;
  int width = 0;
  std::vector<int64_t> counts;

  int64_t& at(int r, int c) { return counts[static_cast<size_t>(r) * width + c]; }
  int64_t at(int r, int c) const { return counts[static_cast<size_t>(r) * width + c]; }
};

/// Writes `path`.csv (plain count grid) and `path`.pgm (P2 plain-text PGM,
/// counts scaled to 0..255 by the grid maximum).
void emit_heatmap(const VisitGrid& grid, const std::string& path_stem);

VisitGrid read_heatmap_csv(const std::string& path);

}  // namespace sofe
