#pragma once

#include <cstdint>
#include <limits>

#include "grecon/factorization.hpp"

namespace grecon {

/// Sparse per-row replacement for the dense cell array: each object row holds
/// an ascending sequence of (column, slot-index list) pairs, present only for
/// ones not yet covered by a chosen factor. Nothing exists before
/// initialize(), which happens once three factors are fixed; the first three
/// rounds run entirely on closed-form coverage and perform zero appends.
class CellStore {
public:
    struct Entry {
        std::uint32_t col;
        std::vector<std::uint32_t> slots;
    };

    bool initialized() const { return initialized_; }

    /// Creates an empty entry for every set bit of `live`.
    void initialize(const BooleanMatrix& live);

    /// Appends `slot` to every existing entry of row i whose column is in
    /// `cols`; returns how many entries matched.
    std::size_t append_row(std::size_t i, const AttributeSet& cols, std::uint32_t slot);

    /// Removes the entries of row i whose column is in `cols`, handing each
    /// removed slot list to `fn` first. Returns the number removed.
    template <class Fn>
    std::size_t remove_row(std::size_t i, const AttributeSet& cols, Fn&& fn) {
        auto& row = rows_[i];
        std::size_t out = 0, removed = 0;
        for (std::size_t in = 0; in < row.size(); ++in) {
            if (cols.test(row[in].col)) {
                fn(static_cast<const std::vector<std::uint32_t>&>(row[in].slots));
                ++removed;
            } else {
                if (out != in) row[out] = std::move(row[in]);
                ++out;
            }
        }
        row.resize(out);
        entries_ -= removed;
        return removed;
    }

    const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

    /// Slot list of cell (i, j), or nullptr when the one is covered/absent.
    const std::vector<std::uint32_t>* find(std::size_t i, std::size_t j) const;

    std::uint64_t append_count() const { return appends_; }
    std::uint64_t live_entries() const { return entries_; }
    std::uint64_t peak_entries() const { return peak_entries_; }

private:
    std::vector<std::vector<Entry>> rows_;
    std::uint64_t appends_ = 0;
    std::uint64_t entries_ = 0;
    std::uint64_t peak_entries_ = 0;
    bool initialized_ = false;
};

/// Slot-indexed storage for candidate concepts and their bookkeeping.
/// covers[l] + potential[l] is an upper bound on the live ones slot l can
/// still cover; potential[l] == 0 means covers[l] is exact. A slot whose
/// bound reaches zero is recycled through the free list — safe because a
/// zero bound implies no live cell list references it.
class CandidatePool {
public:
    static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

    /// New slot with covers = 0, potential = |extent|*|intent|, progress = -1.
    std::uint32_t acquire(FormalConcept c);

    void release(std::uint32_t slot);

    bool live(std::uint32_t slot) const { return live_[slot]; }
    const FormalConcept& concept_at(std::uint32_t slot) const { return concepts_[slot]; }

    std::int64_t covers(std::uint32_t slot) const { return covers_[slot]; }
    std::int64_t potential(std::uint32_t slot) const { return potential_[slot]; }
    std::int64_t progress(std::uint32_t slot) const { return progress_[slot]; }
    std::uint64_t ordinal(std::uint32_t slot) const { return ordinal_[slot]; }
    std::int64_t bound(std::uint32_t slot) const { return covers_[slot] + potential_[slot]; }

    void set_covers(std::uint32_t slot, std::int64_t v) { covers_[slot] = v; }
    void add_covers(std::uint32_t slot, std::int64_t d) { covers_[slot] += d; }
    void set_potential(std::uint32_t slot, std::int64_t v) { potential_[slot] = v; }
    void add_potential(std::uint32_t slot, std::int64_t d) { potential_[slot] += d; }
    void set_progress(std::uint32_t slot, std::int64_t v) { progress_[slot] = v; }

    std::size_t slot_count() const { return concepts_.size(); }
    std::uint64_t live_count() const { return live_count_; }
    std::uint64_t peak_live() const { return peak_live_; }
    std::size_t free_count() const { return free_slots_.size(); }

private:
    std::vector<FormalConcept> concepts_;
    std::vector<std::int64_t> covers_;
    std::vector<std::int64_t> potential_;
    std::vector<std::int64_t> progress_;
    std::vector<std::uint64_t> ordinal_;
    std::vector<bool> live_;
    std::vector<std::uint32_t> free_slots_;
    std::uint64_t next_ordinal_ = 0;
    std::uint64_t live_count_ = 0;
    std::uint64_t peak_live_ = 0;
};

/// Exact live coverage of c once exactly one factor f1 is chosen:
/// |C|*|D| - |A n C| * |B n D|.
std::int64_t second_factor_coverage(const FormalConcept& c, const FormalConcept& f1);

/// Exact live coverage of c once exactly two factors are chosen
/// (inclusion-exclusion over the two factor rectangles).
std::int64_t third_factor_coverage(const FormalConcept& c, const FormalConcept& f1,
                                   const FormalConcept& f2);

struct LoadResult {
    std::uint32_t slot = CandidatePool::npos;
    std::int64_t coverage = -1;
};

/// One factorization run. Owns all mutable state; independent runs over the
/// same matrix may execute concurrently. The stepwise methods mirror the
/// phases of the algorithm and are public so they can be exercised and
/// inspected in isolation; run() composes them.
class Grecon3Run {
public:
    Grecon3Run(const BooleanMatrix& I, ConceptStream stream, double epsilon,
               std::size_t small_threshold = 100);

    Factorization run();

    /// One full round: first factor on the first call, otherwise cell
    /// initialization (at three factors), candidate selection, uncover and
    /// queue maintenance. Returns false once the coverage target is met.
    bool step();

    /// Snapshot of the factorization so far (valid mid-run as well).
    Factorization result() const;

    // --- stepwise interface -------------------------------------------------

    /// Reads the stream head as factor 1 (no coverage computation: a fresh
    /// matrix makes its coverage equal its size).
    void take_first_factor();

    /// Builds the empty cell entries for every currently uncovered one.
    /// Called automatically once three factors are fixed; idempotent.
    void ensure_cells_initialized();

    /// En-bloc initialization of a slot: appends it to every live cell of its
    /// rectangle and stores the confirmed count. The caller zeroes potential.
    std::int64_t cover_concept(std::uint32_t slot);

    /// Resumable initialization: processes extent rows above progress[slot],
    /// decreasing potential by |intent| per row, and suspends once
    /// covers + potential drops below best_coverage. progress always records
    /// the last fully processed row, so no row is ever processed twice.
    std::int64_t cover_incremental(std::uint32_t slot, std::int64_t best_coverage);

    /// Coverage dispatch: closed forms while fewer than three factors exist,
    /// otherwise cover_concept for small concepts (extent below the small
    /// threshold) or cover_incremental. A slot with potential == 0 is already
    /// exact and returns covers directly.
    std::int64_t cover(std::uint32_t slot, std::int64_t best_coverage);

    /// Finds the next factor: walks the queue in sorted order (stopping at
    /// the first entry whose bound cannot beat the best), then reads new
    /// concepts from the stream until their size falls below the best
    /// coverage. The breaking concept is still pooled for later rounds.
    /// Ties resolve to the earliest stream ordinal.
    LoadResult load_concepts();

    /// Removes the factor's live cells, decrementing every sharing slot and
    /// recycling slots whose bound reaches zero. Returns the number of ones
    /// that stopped being live.
    std::uint64_t uncover(const FormalConcept& factor);

    /// Re-sorts the queue by bound (stable, descending) and drops the zero
    /// tail, releasing any slot not yet recycled.
    void resort_queue();

    bool done() const { return coverage_reached(covered_, total_, epsilon_); }

    /// Pools a concept and appends it to the queue; test access to mid-run
    /// states.
    std::uint32_t acquire_slot(const FormalConcept& c);

    // --- inspection ----------------------------------------------------------

    const CandidatePool& pool() const { return pool_; }
    const CellStore& cells() const { return cells_; }
    const std::vector<std::uint32_t>& queue() const { return queue_; }
    const BooleanMatrix& live_matrix() const { return live_; }
    const std::vector<FormalConcept>& factors() const { return factors_; }
    std::uint64_t covered() const { return covered_; }
    std::uint64_t total_ones() const { return total_; }

    /// Full-rescan consistency check: covers[l] must equal the number of live
    /// cell lists containing l, freed slots must appear in no list, and the
    /// queue must hold only live slots. Cheap only at test scale.
    void check_integrity() const;

private:
    void apply_factor(const FormalConcept& c, std::uint64_t gained);

    const BooleanMatrix& matrix_;
    ConceptStream stream_;
    double epsilon_;
    std::size_t small_threshold_;

    BooleanMatrix live_;  // ones not yet covered
    CellStore cells_;
    CandidatePool pool_;
    std::vector<std::uint32_t> queue_;
    std::vector<FormalConcept> factors_;
    std::vector<std::uint64_t> new_coverage_;
    std::uint64_t total_ = 0;
    std::uint64_t covered_ = 0;
};

/// Convenience wrapper around Grecon3Run.
Factorization grecon3_factorize(const BooleanMatrix& I, ConceptStream stream, double epsilon,
                                std::size_t small_threshold = 100);

}  // namespace grecon
