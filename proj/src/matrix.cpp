#include "grecon/matrix.hpp"

#include <stdexcept>

namespace grecon {

void BooleanMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("BooleanMatrix: index out of range");
}

AttributeSet BooleanMatrix::row(std::size_t i) const {
    AttributeSet r(cols_);
    auto src = row_words(i);
    auto dst = r.words();
    for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w];
    return r;
}

ObjectSet BooleanMatrix::column(std::size_t j) const {
    ObjectSet c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (test(i, j)) c.set(i);
    return c;
}

std::vector<ObjectSet> BooleanMatrix::columns() const {
    std::vector<ObjectSet> cols(cols_, ObjectSet(rows_));
    for (std::size_t i = 0; i < rows_; ++i) {
        auto words = row_words(i);
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t cur = words[w];
            while (cur) {
                std::size_t j = (w << 6) + std::size_t(std::countr_zero(cur));
                cols[j].set(i);
                cur &= cur - 1;
            }
        }
    }
    return cols;
}

std::uint64_t BooleanMatrix::ones_count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : data_) c += std::uint64_t(std::popcount(w));
    return c;
}

std::uint64_t BooleanMatrix::row_ones(std::size_t i) const {
    std::uint64_t c = 0;
    for (std::uint64_t w : row_words(i)) c += std::uint64_t(std::popcount(w));
    return c;
}

double BooleanMatrix::density() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    return double(ones_count()) / (double(rows_) * double(cols_));
}

std::size_t BooleanMatrix::clear_in_row(std::size_t i, const AttributeSet& cols) {
    if (cols.size() != cols_)
        throw std::invalid_argument("clear_in_row: attribute universe mismatch");
    auto words = row_words(i);
    auto mask = cols.words();
    std::size_t cleared = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
        cleared += std::size_t(std::popcount(words[w] & mask[w]));
        words[w] &= ~mask[w];
    }
    return cleared;
}

AttributeSet up(const BooleanMatrix& I, const ObjectSet& C) {
    if (C.size() != I.rows())
        throw std::invalid_argument("up: object universe mismatch");
    AttributeSet result(I.cols(), true);
    auto out = result.words();
    C.for_each([&](std::size_t i) {
        auto row = I.row_words(i);
        for (std::size_t w = 0; w < row.size(); ++w) out[w] &= row[w];
    });
    return result;
}

ObjectSet down(const BooleanMatrix& I, const AttributeSet& D) {
    if (D.size() != I.cols())
        throw std::invalid_argument("down: attribute universe mismatch");
    ObjectSet result(I.rows());
    auto need = D.words();
    for (std::size_t i = 0; i < I.rows(); ++i) {
        auto row = I.row_words(i);
        bool has_all = true;
        for (std::size_t w = 0; w < row.size(); ++w) {
            if (need[w] & ~row[w]) {
                has_all = false;
                break;
            }
        }
        if (has_all) result.set(i);
    }
    return result;
}

BooleanMatrix bool_product(const BooleanMatrix& A, const BooleanMatrix& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("bool_product: inner dimensions mismatch");
    BooleanMatrix out(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        auto dst = out.row_words(i);
        auto a = A.row_words(i);
        for (std::size_t w = 0; w < a.size(); ++w) {
            std::uint64_t cur = a[w];
            while (cur) {
                std::size_t l = (w << 6) + std::size_t(std::countr_zero(cur));
                auto b = B.row_words(l);
                for (std::size_t v = 0; v < b.size(); ++v) dst[v] |= b[v];
                cur &= cur - 1;
            }
        }
    }
    return out;
}

bool leq(const BooleanMatrix& M1, const BooleanMatrix& M2) {
    if (M1.rows() != M2.rows() || M1.cols() != M2.cols())
        throw std::invalid_argument("leq: dimension mismatch");
    for (std::size_t i = 0; i < M1.rows(); ++i) {
        auto a = M1.row_words(i);
        auto b = M2.row_words(i);
        for (std::size_t w = 0; w < a.size(); ++w)
            if (a[w] & ~b[w]) return false;
    }
    return true;
}

std::uint64_t residual_error(const BooleanMatrix& I, const BooleanMatrix& AB) {
    if (I.rows() != AB.rows() || I.cols() != AB.cols())
        throw std::invalid_argument("residual_error: dimension mismatch");
    std::uint64_t missing = 0;
    for (std::size_t i = 0; i < I.rows(); ++i) {
        auto a = I.row_words(i);
        auto b = AB.row_words(i);
        for (std::size_t w = 0; w < a.size(); ++w) {
            if (b[w] & ~a[w])
                throw std::invalid_argument(
                    "residual_error: product is not from-below (AB has a one where I has none)");
            missing += std::uint64_t(std::popcount(a[w] & ~b[w]));
        }
    }
    return missing;
}

}  // namespace grecon
