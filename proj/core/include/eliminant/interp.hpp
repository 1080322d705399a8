#pragma once

#include <functional>
#include <vector>

#include "eliminant/domain.hpp"

namespace eliminant {

// Newton interpolation in parameter `var` through (nodes[i], values[i]);
// values must not involve `var`. Result is a ParamPoly on nparams variables.
ParamPoly newton_interpolate(int var, const std::vector<Rat>& nodes,
                             const std::vector<ParamPoly>& values, int nparams);

// Dense interpolation on the integer grid
//   { (offset[0]+i_0, ..., offset[m-1]+i_{m-1}) : 0 <= i_j <= bounds[j] }.
// f evaluates the target function at a rational point.
ParamPoly interpolate_grid(const std::function<Rat(const std::vector<Rat>&)>& f,
                           const std::vector<int>& bounds,
                           const std::vector<Rat>& offsets);

}  // namespace eliminant
