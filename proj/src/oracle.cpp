#include "grecon/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "grecon/errors.hpp"

namespace grecon {

std::vector<FormalConcept> brute_force_concepts(const BooleanMatrix& I) {
    const std::size_t n = I.cols();
    if (n > 20)
        throw std::invalid_argument("brute_force_concepts: refusing n > 20 (2^n subset scan)");

    std::vector<FormalConcept> all;
    all.reserve(std::size_t(1) << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        AttributeSet D(n);
        for (std::size_t j = 0; j < n; ++j)
            if ((mask >> j) & 1) D.set(j);
        all.push_back(closure(I, D));
    }
    std::sort(all.begin(), all.end(), [](const FormalConcept& a, const FormalConcept& b) {
        return a.intent.sequence_less(b.intent);
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

Factorization naive_grecon(const BooleanMatrix& I, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("naive_grecon: epsilon must be in (0,1]");

    std::vector<FormalConcept> candidates = canonical_order(enumerate_concepts(I));

    Factorization result;
    result.total_ones = I.ones_count();

    BooleanMatrix work = I;  // ones flip to zero as they get covered
    std::uint64_t covered = 0;

    while (!coverage_reached(covered, result.total_ones, epsilon)) {
        std::uint64_t best = 0;
        std::size_t best_idx = candidates.size();
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            const FormalConcept& c = candidates[idx];
            std::uint64_t live = 0;
            c.extent.for_each([&](std::size_t i) {
                auto row = work.row_words(i);
                auto need = c.intent.words();
                for (std::size_t w = 0; w < row.size(); ++w)
                    live += std::uint64_t(std::popcount(row[w] & need[w]));
            });
            if (live > best) {
                best = live;
                best_idx = idx;
            }
        }
        if (best == 0)
            throw IncompleteStreamError("naive_grecon: no concept covers a remaining one");

        const FormalConcept& chosen = candidates[best_idx];
        chosen.extent.for_each([&](std::size_t i) { work.clear_in_row(i, chosen.intent); });
        result.factors.push_back(chosen);
        result.new_coverage.push_back(best);
        covered += best;
    }

    result.error = result.total_ones - covered;
    return result;
}

}  // namespace grecon
