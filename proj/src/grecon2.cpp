#include "grecon/grecon2.hpp"

#include <cassert>
#include <stdexcept>

#include "grecon/errors.hpp"

namespace grecon {

Grecon2State::Grecon2State(const BooleanMatrix& I, std::vector<FormalConcept> concepts)
    : cols_(I.cols()),
      concepts_(std::move(concepts)),
      covers_(concepts_.size(), 0),
      cells_(I.rows() * I.cols()) {
    // Counting prepass so each cell list is allocated once at its final size.
    std::vector<std::uint32_t> counts(cells_.size(), 0);
    for (const FormalConcept& c : concepts_) {
        if (c.extent.size() != I.rows() || c.intent.size() != I.cols())
            throw std::invalid_argument("Grecon2State: concept universe mismatch");
        c.extent.for_each([&](std::size_t i) {
            c.intent.for_each([&](std::size_t j) { ++counts[i * cols_ + j]; });
        });
    }
    for (std::size_t idx = 0; idx < cells_.size(); ++idx)
        if (counts[idx]) cells_[idx].reserve(counts[idx]);

    for (std::size_t l = 0; l < concepts_.size(); ++l) {
        const FormalConcept& c = concepts_[l];
        covers_[l] = std::int64_t(c.size());
        c.extent.for_each([&](std::size_t i) {
            c.intent.for_each([&](std::size_t j) {
                auto& list = cells_[i * cols_ + j];
                if (list.empty()) ++live_cells_;
                list.push_back(std::uint32_t(l));
                ++appends_;
            });
        });
    }
    peak_cells_ = live_cells_;
}

std::size_t Grecon2State::argmax() const {
    std::size_t best = concepts_.size();
    std::int64_t best_value = 0;
    for (std::size_t l = 0; l < covers_.size(); ++l) {
        if (covers_[l] > best_value) {
            best_value = covers_[l];
            best = l;
        }
    }
    return best;  // concepts_.size() when everything is at zero
}

std::uint64_t Grecon2State::uncover(const FormalConcept& factor) {
    std::uint64_t removed = 0;
    factor.extent.for_each([&](std::size_t i) {
        factor.intent.for_each([&](std::size_t j) {
            auto& list = cells_[i * cols_ + j];
            if (list.empty()) return;
            for (std::uint32_t k : list) --covers_[k];
            std::vector<std::uint32_t>().swap(list);
            ++removed;
            --live_cells_;
        });
    });
    return removed;
}

void Grecon2State::verify_covers() const {
    std::vector<std::int64_t> refs(concepts_.size(), 0);
    for (const auto& list : cells_)
        for (std::uint32_t k : list) ++refs[k];
    for (std::size_t l = 0; l < covers_.size(); ++l)
        if (covers_[l] != refs[l])
            throw std::logic_error("grecon2: covers out of sync with cell lists");
}

Factorization grecon2_factorize(const BooleanMatrix& I, ConceptStream stream, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("grecon2_factorize: epsilon must be in (0,1]");

    Grecon2State state(I, stream.drain());

    Factorization result;
    result.total_ones = I.ones_count();
    result.cell_appends = state.append_count();
    result.stats.peak_live_slots = state.concept_count();
    result.stats.peak_cell_entries = state.peak_cells();

    std::uint64_t covered = 0;
    while (!coverage_reached(covered, result.total_ones, epsilon)) {
        std::size_t l = state.argmax();
        if (l == state.concept_count())
            throw IncompleteStreamError(
                "grecon2_factorize: stream does not cover the remaining ones");
        std::uint64_t gained = std::uint64_t(state.covers()[l]);
        FormalConcept chosen = state.concept_at(l);
        std::uint64_t removed = state.uncover(chosen);
        (void)removed;
        assert(removed == gained);
#ifndef NDEBUG
        state.verify_covers();
#endif
        result.factors.push_back(std::move(chosen));
        result.new_coverage.push_back(gained);
        covered += gained;
    }

    result.error = result.total_ones - covered;
    return result;
}

}  // namespace grecon
