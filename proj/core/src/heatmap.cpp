#include "sofe/harness/heatmap.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sofe {

void emit_heatmap(const VisitGrid& grid, const std::string& path_stem) {
  {
    std::ofstream csv(path_stem + ".csv");
    if (!csv) throw std::runtime_error("emit_heatmap: cannot open " + path_stem + ".csv");
    for (int r = 0; r < grid.height; ++r) {
      for (int c = 0; c < grid.width; ++c) {
        if (c) csv << ',';
        csv << grid.at(r, c);
      }
      csv << '\n';
    }
  }
  {
    std::ofstream pgm(path_stem + ".pgm");
    if (!pgm) throw std::runtime_error("emit_heatmap: cannot open " + path_stem + ".pgm");
    int64_t max_count = 0;
    for (int64_t v : grid.counts) max_count = std::max(max_count, v);
    pgm << "P2\n" << grid.width << ' ' << grid.height << "\n255\n";
    for (int r = 0; r < grid.height; ++r) {
      for (int c = 0; c < grid.width; ++c) {
        const int64_t v = grid.at(r, c);
        const int pixel = max_count == 0 ? 0 : static_cast<int>((v * 255) / max_count);
        if (c) pgm << ' ';
        pgm << pixel;
      }
      pgm << '\n';
    }
  }
}

VisitGrid read_heatmap_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_heatmap_csv: cannot open " + path);
  VisitGrid grid;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    int width = 0;
    while (std::getline(ss, field, ',')) {
      grid.counts.push_back(std::stoll(field));
      ++width;
    }
    if (grid.width == 0)
      grid.width = width;
    else if (width != grid.width)
      throw std::runtime_error("read_heatmap_csv: ragged rows in " + path);
    ++grid.height;
  }
  return grid;
}

}  // namespace sofe
