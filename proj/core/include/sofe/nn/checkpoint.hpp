#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sofe/tensor.hpp"

namespace sofe::nn {

/// Parameter checkpoint: a flat list of named tensors in a portable binary
/// layout. File format (all integers and doubles little-endian):
///
///   bytes 0..7   magic "SFTNSR01"
///   u32          tensor count
///   per tensor:  u32 name length, name bytes (no terminator),
///                u32 rank, u32 dims[rank], f64 data[numel]
void save_tensors(const std::string& path,
                  const std::vector<std::pair<std::string, const Tensor*>>& tensors);

std::map<std::string, Tensor> load_tensors(const std::string& path);

}  // namespace sofe::nn
