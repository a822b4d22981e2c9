#pragma once

#include <cstdint>

#include "grecon/matrix.hpp"

namespace grecon {

/// Uniform random matrix with the given cell density. Avoids the standard
/// distributions (whose output is implementation-defined), so a seed produces
/// identical matrices on every platform.
BooleanMatrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols,
                            double density);

}  // namespace grecon
