#include "grecon/grecond.hpp"

#include <stdexcept>

namespace grecon {

namespace {

// Uncovered ones inside extent x intent, measured against the working copy.
std::uint64_t live_in_rectangle(const BooleanMatrix& work, const ObjectSet& extent,
                                const AttributeSet& intent) {
    std::uint64_t live = 0;
    auto need = intent.words();
    extent.for_each([&](std::size_t i) {
        auto row = work.row_words(i);
        for (std::size_t w = 0; w < row.size(); ++w)
            live += std::uint64_t(std::popcount(row[w] & need[w]));
    });
    return live;
}

}  // namespace

Factorization grecond_factorize(const BooleanMatrix& I, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("grecond_factorize: epsilon must be in (0,1]");

    const std::size_t n = I.cols();
    const std::vector<ObjectSet> cols = I.columns();

    Factorization result;
    result.total_ones = I.ones_count();

    BooleanMatrix work = I;
    std::uint64_t covered = 0;

    while (!coverage_reached(covered, result.total_ones, epsilon)) {
        AttributeSet intent(n);
        ObjectSet extent(I.rows(), true);
        std::uint64_t value = 0;

        for (;;) {
            std::uint64_t best_value = value;
            std::size_t best_j = n;
            ObjectSet best_extent;
            AttributeSet best_intent;
            for (std::size_t j = 0; j < n; ++j) {
                if (intent.test(j)) continue;
                ObjectSet cand_extent = extent & cols[j];
                AttributeSet cand_intent = up(I, cand_extent);
                std::uint64_t v = live_in_rectangle(work, cand_extent, cand_intent);
                if (v > best_value) {  // strict: lowest j wins ties
                    best_value = v;
                    best_j = j;
                    best_extent = std::move(cand_extent);
                    best_intent = std::move(cand_intent);
                }
            }
            if (best_j == n) break;
            extent = std::move(best_extent);
            intent = std::move(best_intent);
            value = best_value;
        }

        // value > 0 whenever uncovered ones remain: the closure of any
        // uncovered one's attribute covers at least that one.
        if (value == 0)
            throw std::logic_error("grecond_factorize: no improving attribute found");
        extent.for_each([&](std::size_t i) { work.clear_in_row(i, intent); });
        result.factors.push_back({extent, intent});
        result.new_coverage.push_back(value);
        covered += value;
    }

    result.error = result.total_ones - covered;
    return result;
}

}  // namespace grecon
