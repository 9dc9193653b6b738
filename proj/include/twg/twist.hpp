#pragma once

#include <vector>

#include "twg/crossings.hpp"
#include "twg/holonomy.hpp"

namespace twg {

// Fenchel-Nielsen twist deformation along the geodesic of generator a,
// supported on the punctured torus and the four-holed sphere. The twist
// direction is calibrated so that crossing angles strictly decrease in t
// (left earthquake in the paper's sense).
Holonomy twist(const Holonomy& rho, double t);

// phi of the crossing tracked by a fixed witness across the twist path.
std::vector<double> angle_along_twist(const Holonomy& rho, const Word& y, const Crossing& c,
                                      const std::vector<double>& t_grid);

}  // namespace twg
