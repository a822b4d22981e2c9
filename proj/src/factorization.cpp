#include "grecon/factorization.hpp"

namespace grecon {

BooleanMatrix Factorization::object_factor_matrix(std::size_t rows) const {
    BooleanMatrix A(rows, factors.size());
    for (std::size_t l = 0; l < factors.size(); ++l)
        factors[l].extent.for_each([&](std::size_t i) { A.set(i, l); });
    return A;
}

BooleanMatrix Factorization::factor_attribute_matrix(std::size_t cols) const {
    BooleanMatrix B(factors.size(), cols);
    for (std::size_t l = 0; l < factors.size(); ++l)
        factors[l].intent.for_each([&](std::size_t j) { B.set(l, j); });
    return B;
}

}  // namespace grecon
