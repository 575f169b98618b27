#include "sofe/env/assets.hpp"

#include <stdexcept>
#include <unordered_map>

namespace sofe {

namespace {

constexpr const char* k_open_9 = R"(#########
#S......#
#.......#
#.......#
#.......#
#.......#
#.......#
#.......#
#########)";

constexpr const char* k_maze_15 = R"(###############
#S............#
#.#.#####.###.#
#.#.....#.#...#
#.#####.#.#.#.#
#.....#...#...#
#.#.###.#.#####
#...#...#.....#
#.#.#.#.#.#.#.#
#...#...#...#.#
#.#.#.#.#.#.#.#
#.#.#.......#.#
#.###.#.#####.#
#.............#
###############)";

constexpr const char* k_sparse_15 = R"(###############
#S#.......#...#
#.#.#####.#.#.#
#.#.#...#...#.#
#.#.#.#.#####.#
#...#.....#...#
#######.#.#.###
#.....#.#.#...#
#.#.#.###.###.#
#.#.........#G#
#.###########.#
#...#.......#.#
#.#.#.#####.#.#
#.#.......#...#
###############)";

constexpr const char* k_maze1_32 = R"(################################
#S#.......#.................#.##
#.#.#####.#.#.###.#########.#.##
#.#...#.#.#.#.#...#.......#...##
#.###.#.#.###.#####.#####.###.##
#.....#...#...#.....#...#...#.##
#######.###.###.#######.###.####
#.....#...#...........#...#...##
#.#######.#.#########.#.#.###.##
#.#.....#.#...#.#...#...#.#...##
#.#.#.###.###.#.#.#.#####.#.#.##
#.#.#.#...#.....#.#.#.....#...##
#.#.#.#.#########.#.#.#######.##
#.#.#...#.........#.#.#.......##
#.#.#######.#######.###.#####.##
#.#...#.....#.....#...#...#...##
#.###.#.#####.#.#.###.###.#.####
#...#...#.....#.#...#.......#.##
#.#.#.###.#####.###.#######.#.##
#.......#...#...#...#.......#.##
#.###.#.#####.###.###.#######.##
#.#...#.....#...#.#.#.........##
#.#.#######.###.#.#.#########.##
#.#.....#...#...#.....#...#...##
#.#####.#.###.#######.#.#.#.####
#...#...#.#...#.....#...#.#...##
#.###.###.###.#####.#####.###.##
#.#...#.......#...#.........#.##
#.#.###########.#.###########.##
#.#.............#.............##
################################
################################)";

constexpr const char* k_maze2_32 = R"(################################
#S........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#..............................#
#..............................#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
####..#########..##########..###
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.........#
#..............................#
#..............................#
#.........#..........#.........#
#.........#..........#.........#
#.........#..........#.......G.#
#.........#..........#.........#
################################)";

constexpr const char* k_maze3_32 = R"(################################
#S#.........................#.##
#.#.#####.#.#.###.#########.#.##
#.#...#.#...#.#...#.......#...##
#.###.#.#.###.#####.#####.###.##
#.....#.......#.....#...#...#.##
#######.###.###.#######.###.####
#.....#...#...........#...#...##
#.#######.#.#########.#.#.###.##
#.#.....#.#...#.#...#...#.#...##
#.#.#.###.###.#.#.#.#####.#.#.##
#.#.#.#...#.....#.#.#.....#...##
#.#.#.#.#########.#.#.#######.##
#.#.#...#.........#.#.#.......##
#.#.#######.#######.###.#####.##
#.#...#.....#.....#...#...#...##
#.###.#.#####.#.#.###.###.#.####
#...#...#.....#.#...#.......#.##
#.#.#.###.#####.###.#######.#.##
#.......#...#...#...#.......#.##
#.###.#.#####.###.###.#######.##
#.#...#.....#...#.#.#.........##
#.#.#######.###.#.#.#########.##
#.#.....#...#...#.....#...#...##
#.#####.#.###.#######.#.#.#.####
#...#...#.#...#.....#...#.#...##
#.###.###.###.#####.#####.###.##
#.#...#.......#...#.........#.##
#.#.###########.#.###########.##
#.#.............#.............##
################################
################################)";

const std::unordered_map<std::string, const char*>& asset_table() {
  static const std::unordered_map<std::string, const char*> table = {
      {"open-9", k_open_9},       {"maze-15", k_maze_15},   {"sparse-15", k_sparse_15},
      {"maze1-32", k_maze1_32},   {"maze2-32", k_maze2_32}, {"maze3-32", k_maze3_32},
  };
  return table;
}

}  // namespace

std::vector<std::string> maze_asset_names() {
  return {"open-9", "maze-15", "sparse-15", "maze1-32", "maze2-32", "maze3-32"};
}

bool has_maze_asset(const std::string& name) { return asset_table().count(name) > 0; }

const char* maze_asset_text(const std::string& name) {
  auto it = asset_table().find(name);
  if (it == asset_table().end())
    throw std::invalid_argument("unknown maze asset: " + name);
  return it->second;
}

EnvSpec maze_asset(const std::string& name) { return maze_from_ascii(maze_asset_text(name)); }

}  // namespace sofe
