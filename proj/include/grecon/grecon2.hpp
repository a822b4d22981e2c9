#pragma once


#include "grecon/factorization.hpp"

namespace grecon {

/// Full upfront state of the pre-optimization baseline: one slot per matrix
/// cell holding the indices of all concepts covering that one, plus the
/// per-concept live coverage counts. Initialization walks every concept's
/// whole rectangle, which is exactly the cost the sparse variant removes.
class Grecon2State {
public:
    Grecon2State(const BooleanMatrix& I, std::vector<FormalConcept> concepts);

    std::size_t concept_count() const { return concepts_.size(); }
    const FormalConcept& concept_at(std::size_t l) const { return concepts_[l]; }
    const std::vector<std::int64_t>& covers() const { return covers_; }

    /// Index list of cell (i, j); empty once the one is covered (or was never
    /// a one).
    const std::vector<std::uint32_t>& cell(std::size_t i, std::size_t j) const {
        return cells_[i * cols_ + j];
    }

    /// Total index-append operations performed (all during construction).
    std::uint64_t append_count() const { return appends_; }

    /// Cells that currently hold a nonempty list.
    std::uint64_t live_cells() const { return live_cells_; }
    std::uint64_t peak_cells() const { return peak_cells_; }

    /// First index with maximal covers value; concepts are slotted in stream
    /// order, so the scan realizes the canonical tie-break.
    std::size_t argmax() const;

    /// Removes every live cell under the factor, decrementing the covers of
    /// all concepts sharing those cells. Returns the number of cells removed.
    std::uint64_t uncover(const FormalConcept& factor);

    /// Full rescan: covers[l] must equal the number of live lists containing
    /// l. Debug builds run this after every uncover.
    void verify_covers() const;

private:
    std::size_t cols_ = 0;
    std::vector<FormalConcept> concepts_;
    std::vector<std::int64_t> covers_;
    std::vector<std::vector<std::uint32_t>> cells_;
    std::uint64_t appends_ = 0;
    std::uint64_t live_cells_ = 0;
    std::uint64_t peak_cells_ = 0;
};

/// Greedy argmax over the fully initialized state until the requested
/// coverage is reached. The stream must contain every nonzero concept of I
/// for epsilon = 1; otherwise an IncompleteStreamError is thrown once no
/// candidate covers a remaining one.
Factorization grecon2_factorize(const BooleanMatrix& I, ConceptStream stream, double epsilon);

}  // namespace grecon
