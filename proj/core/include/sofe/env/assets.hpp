#pragma once

#include <string>
#include <vector>

#include "sofe/env/env.hpp"

namespace sofe {

/// Bundled ASCII maze layouts. open-9 is an empty bordered room; maze-15 is
/// a loopy goal-free exploration labyrinth; sparse-15 places a goal 36
/// steps from the start; the three 32x32 layouts are a hard labyrinth, an
/// open-room map with a goal, and the labyrinth again with three shortcut
/// doors opened.
std::vector<std::string> maze_asset_names();
bool has_maze_asset(const std::string& name);
const char* maze_asset_text(const std::string& name);
EnvSpec maze_asset(const std::string& name);

}  // namespace sofe
