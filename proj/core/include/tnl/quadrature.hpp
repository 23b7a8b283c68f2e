#pragma once

#include <span>
#include <vector>

#include "tnl/grid.hpp"

namespace tnl {

enum class QuadratureRule { Trapezoid, Simpson };

/// Composite weights for the whole grid. Simpson needs an odd node count.
std::vector<double> quadrature_weights(QuadratureRule rule, const Grid& grid);

double integrate(QuadratureRule rule, const Grid& grid, std::span<const double> samples);

}  // namespace tnl
