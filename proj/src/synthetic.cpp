#include "grecon/synthetic.hpp"

#include <random>
#include <stdexcept>

namespace grecon {

BooleanMatrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols,
                            double density) {
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("random_matrix: density must be in [0,1]");
    std::mt19937_64 rng(seed);
    BooleanMatrix I(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            // top 53 bits as a uniform double in [0,1)
            double u = double(rng() >> 11) * 0x1.0p-53;
            if (u < density) I.set(i, j);
        }
    }
    return I;
}

}  // namespace grecon
