#pragma once

#include <cstdint>
#include <vector>

#include "grecon/concepts.hpp"

namespace grecon {

/// Memory high-water marks of a factorization run; zero for algorithms that
/// do not use the corresponding structure.
struct RunStats {
    std::uint64_t peak_live_slots = 0;
    std::uint64_t peak_cell_entries = 0;
};

/// Ordered factor concepts together with the number of previously uncovered
/// ones each factor contributed. sum(new_coverage) + error == total_ones, and
/// the induced product is from-below by construction.
struct Factorization {
    std::vector<FormalConcept> factors;
    std::vector<std::uint64_t> new_coverage;
    std::uint64_t total_ones = 0;
    std::uint64_t error = 0;
    std::uint64_t cell_appends = 0;
    double wall_ms = 0.0;
    RunStats stats;

    std::size_t k() const { return factors.size(); }

    std::uint64_t covered() const {
        std::uint64_t c = 0;
        for (auto v : new_coverage) c += v;
        return c;
    }

    double coverage_ratio() const {
        return total_ones == 0 ? 1.0 : double(covered()) / double(total_ones);
    }

    /// A_F: m x k object-factor matrix (column l = extent of factor l).
    BooleanMatrix object_factor_matrix(std::size_t rows) const;

    /// B_F: k x n factor-attribute matrix (row l = intent of factor l).
    BooleanMatrix factor_attribute_matrix(std::size_t cols) const;
};

/// Shared stopping rule: has `covered` reached the fraction epsilon of
/// `total`? All algorithms use this single definition so boundary behaviour
/// is identical.
inline bool coverage_reached(std::uint64_t covered, std::uint64_t total, double epsilon) {
    return double(covered) >= epsilon * double(total);
}

}  // namespace grecon
