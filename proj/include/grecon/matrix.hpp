#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grecon/bitset.hpp"

namespace grecon {

using ObjectSet = Bitset;     // indices in [0, rows)
using AttributeSet = Bitset;  // indices in [0, cols)

/// Bit-packed m x n binary matrix, stored row-major in 64-bit words.
/// Immutable use after construction is thread safe; nothing here mutates
/// shared state.
class BooleanMatrix {
public:
    BooleanMatrix() = default;
    BooleanMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool test(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (data_[i * words_per_row_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool value = true) {
        check_index(i, j);
        std::uint64_t& w = data_[i * words_per_row_ + (j >> 6)];
        std::uint64_t mask = std::uint64_t(1) << (j & 63);
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {data_.data() + i * words_per_row_, words_per_row_};
    }
    std::span<std::uint64_t> row_words(std::size_t i) {
        return {data_.data() + i * words_per_row_, words_per_row_};
    }

    /// Row i as an attribute set (copy).
    AttributeSet row(std::size_t i) const;

    /// Column j as an object set (materialized on demand; rows are the
    /// native layout).
    ObjectSet column(std::size_t j) const;

    /// All columns at once; cheaper than repeated column() calls.
    std::vector<ObjectSet> columns() const;

    std::uint64_t ones_count() const;
    std::uint64_t row_ones(std::size_t i) const;
    double density() const;

    /// Clears the bits of `cols` inside row i; returns how many set bits were
    /// actually cleared.
    std::size_t clear_in_row(std::size_t i, const AttributeSet& cols);

    bool operator==(const BooleanMatrix& other) const = default;

private:
    void check_index(std::size_t i, std::size_t j) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Attributes shared by every object in C; up(empty) is the full attribute set.
AttributeSet up(const BooleanMatrix& I, const ObjectSet& C);

/// Objects having every attribute in D; down(empty) is the full object set.
ObjectSet down(const BooleanMatrix& I, const AttributeSet& D);

/// Boolean (max-min) matrix product; inner dimensions must match.
BooleanMatrix bool_product(const BooleanMatrix& A, const BooleanMatrix& B);

/// Elementwise M1 <= M2.
bool leq(const BooleanMatrix& M1, const BooleanMatrix& M2);

/// Number of ones of I missing from AB. Requires AB <= I elementwise (the
/// from-below setting); anything else is a contract violation, not a
/// symmetric difference.
std::uint64_t residual_error(const BooleanMatrix& I, const BooleanMatrix& AB);

}  // namespace grecon
