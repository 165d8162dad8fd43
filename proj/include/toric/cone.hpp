#pragma once

#include <cstddef>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Extreme rays of the pointed cone {y in R^dim : row·y >= 0 for every row}, each
/// returned as a primitive integer vector. Uses the double-description method with
/// the combinatorial adjacency test. Throws kLowerDimensional when the rows do not
/// span R^dim (the cone is then not pointed).
std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& rows, std::size_t dim);

}  // namespace toric
