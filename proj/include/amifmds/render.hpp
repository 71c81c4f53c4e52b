#pragma once

#include "amifmds/matrix.hpp"

#include <string>
#include <vector>

namespace amifmds {

// SVG scatter of a 2-D or 3-D embedding. 3-D input is projected onto the
// first two axes with marker radius encoding the third. Markers are colored
// by cluster id (single color when clusters is empty) and labeled by name.
std::string render_scatter(const std::vector<std::string>& names, const RealMatrix& coords,
                           const std::vector<int>& clusters);

}  // namespace amifmds
