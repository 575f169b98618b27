#include "sofe/env/env.hpp"

#include <deque>
#include <sstream>

#include "sofe/env/deepsea.hpp"
#include "sofe/env/maze.hpp"

namespace sofe {

void EnvSpec::validate() const {
  if (max_steps < 1) throw std::invalid_argument("EnvSpec: max_steps must be >= 1");
  if (kind == EnvKind::deepsea) {
    if (deepsea_n < 1) throw std::invalid_argument("EnvSpec: deepsea_n must be >= 1");
    if (width != deepsea_n || height != deepsea_n)
      throw std::invalid_argument("EnvSpec: deepsea requires width = height = N");
    return;
  }
  if (width < 1 || height < 1) throw std::invalid_argument("EnvSpec: empty grid");
  if (walls.size() != static_cast<size_t>(width) * height)
    throw std::invalid_argument("EnvSpec: walls grid does not match dimensions");
  if (is_wall(start.row, start.col)) throw std::invalid_argument("EnvSpec: start is a wall cell");
  if (goal && is_wall(goal->row, goal->col))
    throw std::invalid_argument("EnvSpec: goal is a wall cell");
}

EnvSpec maze_from_ascii(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw FormatError("maze_from_ascii: empty input");
  const size_t width = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != width) throw FormatError("maze_from_ascii: non-rectangular input");

  EnvSpec spec;
  spec.kind = EnvKind::maze;
  spec.width = static_cast<int>(width);
  spec.height = static_cast<int>(rows.size());
  spec.walls.assign(width * rows.size(), 0);
  int starts = 0, goals = 0;
  for (int r = 0; r < spec.height; ++r) {
    for (int c = 0; c < spec.width; ++c) {
      switch (rows[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
        case '#':
          spec.walls[static_cast<size_t>(r) * width + c] = 1;
          break;
        case '.':
          break;
        case 'S':
          spec.start = {r, c};
          ++starts;
          break;
        case 'G':
          spec.goal = Cell{r, c};
          ++goals;
          break;
        default:
          throw FormatError("maze_from_ascii: unexpected character at row " + std::to_string(r));
      }
    }
  }
  if (starts != 1) throw FormatError("maze_from_ascii: expected exactly one 'S', got " +
                                     std::to_string(starts));
  if (goals > 1) throw FormatError("maze_from_ascii: more than one 'G'");
  spec.max_steps = 4 * spec.width * spec.height;  // generous default; configs override
  spec.validate();
  return spec;
}

std::vector<Cell> reachable_cells(const EnvSpec& spec) {
  spec.validate();
  std::vector<uint8_t> seen(spec.walls.size(), 0);
  std::deque<Cell> frontier{spec.start};
  seen[static_cast<size_t>(spec.cell_key(spec.start))] = 1;
  std::vector<Cell> out;
  while (!frontier.empty()) {
    Cell c = frontier.front();
    frontier.pop_front();
    out.push_back(c);
    const Cell neighbors[4] = {{c.row - 1, c.col}, {c.row, c.col + 1},
                               {c.row + 1, c.col}, {c.row, c.col - 1}};
    for (Cell n : neighbors) {
      if (n.row < 0 || n.row >= spec.height || n.col < 0 || n.col >= spec.width) continue;
      if (spec.is_wall(n.row, n.col)) continue;
      auto& mark = seen[static_cast<size_t>(spec.cell_key(n))];
      if (mark) continue;
      mark = 1;
      frontier.push_back(n);
    }
  }
  return out;
}

int shortest_path_length(const EnvSpec& spec, Cell from, Cell to) {
  std::vector<int> dist(spec.walls.size(), -1);
  std::deque<Cell> frontier{from};
  dist[static_cast<size_t>(spec.cell_key(from))] = 0;
  while (!frontier.empty()) {
    Cell c = frontier.front();
    frontier.pop_front();
    const int d = dist[static_cast<size_t>(spec.cell_key(c))];
    if (c == to) return d;
    const Cell neighbors[4] = {{c.row - 1, c.col}, {c.row, c.col + 1},
                               {c.row + 1, c.col}, {c.row, c.col - 1}};
    for (Cell n : neighbors) {
      if (n.row < 0 || n.row >= spec.height || n.col < 0 || n.col >= spec.width) continue;
      if (spec.is_wall(n.row, n.col)) continue;
      auto& dn = dist[static_cast<size_t>(spec.cell_key(n))];
      if (dn >= 0) continue;
      dn = d + 1;
      frontier.push_back(n);
    }
  }
  return -1;
}

std::unique_ptr<Env> make_env(const EnvSpec& spec) {
  if (spec.kind == EnvKind::deepsea) return std::make_unique<DeepSeaEnv>(spec);
  return std::make_unique<MazeEnv>(spec);
}

}  // namespace sofe
