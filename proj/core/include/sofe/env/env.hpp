#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sofe/tensor.hpp"

namespace sofe {

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

enum class EnvKind { maze, deepsea };

/// Static description of a discrete environment instance.
struct EnvSpec {
  EnvKind kind = EnvKind::maze;
  int width = 0;
  int height = 0;
  std::vector<uint8_t> walls;  // height*width, row-major, 1 = wall
  std::optional<Cell> goal;
  Cell start;
  int max_steps = 1;
  int deepsea_n = 0;  // side length N, deepsea only

  bool is_wall(int row, int col) const {
    return walls[static_cast<size_t>(row) * width + col] != 0;
  }
  int64_t cell_key(Cell c) const { return static_cast<int64_t>(c.row) * width + c.col; }
  /// Throws std::invalid_argument when invariants are violated.
  void validate() const;
};

struct StepResult {
  Tensor observation;
  double extrinsic_reward = 0.0;
  bool done = false;
  Cell cell;          // agent cell after the step
  int step_index = 0; // steps taken so far this episode
};

/// Parses the ASCII maze format: '#' wall, '.' floor, 'S' start (exactly
/// one), 'G' goal (at most one). Rows must all have the same width.
/// Throws FormatError on malformed input.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EnvSpec maze_from_ascii(const std::string& text);

/// Common stepping interface for the discrete simulators. Instances are
/// single-owner; reset() must be called before step().
class Env {
 public:
  virtual ~Env() = default;
  virtual StepResult reset(uint64_t seed) = 0;
  /// Throws std::logic_error when called on a finished episode.
  virtual StepResult step(int action) = 0;
  virtual int n_actions() const = 0;
  virtual std::vector<int> obs_shape() const = 0;
  virtual const EnvSpec& spec() const = 0;
  virtual Cell agent_cell() const = 0;
  virtual int64_t state_key() const = 0;
  virtual std::unique_ptr<Env> clone_fresh() const = 0;
};

/// Flood fill over non-wall cells from the spec's start.
std::vector<Cell> reachable_cells(const EnvSpec& spec);

/// Shortest path length (in steps) between two non-wall cells, or -1 when
/// unreachable. BFS over the four-movement neighborhood.
int shortest_path_length(const EnvSpec& spec, Cell from, Cell to);

std::unique_ptr<Env> make_env(const EnvSpec& spec);

}  // namespace sofe
