#include "grecon/grecon3.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "grecon/errors.hpp"

namespace grecon {

// ---------------------------------------------------------------------------
// CellStore

void CellStore::initialize(const BooleanMatrix& live) {
    rows_.assign(live.rows(), {});
    entries_ = 0;
    for (std::size_t i = 0; i < live.rows(); ++i) {
        auto& row = rows_[i];
        row.reserve(live.row_ones(i));
        auto words = live.row_words(i);
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t cur = words[w];
            while (cur) {
                std::size_t j = (w << 6) + std::size_t(std::countr_zero(cur));
                row.push_back({std::uint32_t(j), {}});
                cur &= cur - 1;
            }
        }
        entries_ += row.size();
    }
    peak_entries_ = std::max(peak_entries_, entries_);
    initialized_ = true;
}

std::size_t CellStore::append_row(std::size_t i, const AttributeSet& cols, std::uint32_t slot) {
    std::size_t matched = 0;
    for (Entry& e : rows_[i]) {
        if (cols.test(e.col)) {
            e.slots.push_back(slot);
            ++matched;
        }
    }
    appends_ += matched;
    return matched;
}

const std::vector<std::uint32_t>* CellStore::find(std::size_t i, std::size_t j) const {
    for (const Entry& e : rows_[i])
        if (e.col == j) return &e.slots;
    return nullptr;
}

// ---------------------------------------------------------------------------
// CandidatePool

std::uint32_t CandidatePool::acquire(FormalConcept c) {
    std::int64_t size = std::int64_t(c.size());
    std::uint32_t slot;
    if (!free_slots_.empty()) {
        slot = free_slots_.back();
        free_slots_.pop_back();
        concepts_[slot] = std::move(c);
        covers_[slot] = 0;
        potential_[slot] = size;
        progress_[slot] = -1;
        ordinal_[slot] = next_ordinal_++;
        live_[slot] = true;
    } else {
        slot = std::uint32_t(concepts_.size());
        concepts_.push_back(std::move(c));
        covers_.push_back(0);
        potential_.push_back(size);
        progress_.push_back(-1);
        ordinal_.push_back(next_ordinal_++);
        live_.push_back(true);
    }
    ++live_count_;
    peak_live_ = std::max(peak_live_, live_count_);
    return slot;
}

void CandidatePool::release(std::uint32_t slot) {
    assert(live_[slot]);
    live_[slot] = false;
    concepts_[slot] = FormalConcept{};  // drop the bitset storage
    free_slots_.push_back(slot);
    --live_count_;
}

// ---------------------------------------------------------------------------
// Prominent-case closed forms

std::int64_t second_factor_coverage(const FormalConcept& c, const FormalConcept& f1) {
    std::int64_t shared = std::int64_t(f1.extent.and_count(c.extent)) *
                          std::int64_t(f1.intent.and_count(c.intent));
    return std::int64_t(c.size()) - shared;
}

std::int64_t third_factor_coverage(const FormalConcept& c, const FormalConcept& f1,
                                   const FormalConcept& f2) {
    std::int64_t with_f1 = std::int64_t(f1.extent.and_count(c.extent)) *
                           std::int64_t(f1.intent.and_count(c.intent));
    std::int64_t with_f2 = std::int64_t(f2.extent.and_count(c.extent)) *
                           std::int64_t(f2.intent.and_count(c.intent));
    std::int64_t with_both =
        std::int64_t(Bitset::and_count3(f1.extent, f2.extent, c.extent)) *
        std::int64_t(Bitset::and_count3(f1.intent, f2.intent, c.intent));
    return std::int64_t(c.size()) - with_f1 - with_f2 + with_both;
}

// ---------------------------------------------------------------------------
// Grecon3Run

Grecon3Run::Grecon3Run(const BooleanMatrix& I, ConceptStream stream, double epsilon,
                       std::size_t small_threshold)
    : matrix_(I), stream_(std::move(stream)), epsilon_(epsilon),
      small_threshold_(small_threshold), live_(I), total_(I.ones_count()) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("Grecon3Run: epsilon must be in (0,1]");
}

void Grecon3Run::take_first_factor() {
    if (!factors_.empty())
        throw std::logic_error("take_first_factor: a factor already exists");
    if (!stream_.has_next())
        throw IncompleteStreamError("grecon3: ones remain but the stream is empty");
    // Largest concept first means the stream head is the first factor; on a
    // fresh matrix its coverage is exactly its size.
    FormalConcept first = stream_.next();
    std::uint64_t gained = first.size();
    std::uint64_t cleared = uncover(first);
    (void)cleared;
    assert(cleared == gained);
    apply_factor(first, gained);
}

void Grecon3Run::ensure_cells_initialized() {
    if (!cells_.initialized()) cells_.initialize(live_);
}

std::int64_t Grecon3Run::cover_concept(std::uint32_t slot) {
    assert(cells_.initialized());
    assert(pool_.covers(slot) == 0 && pool_.progress(slot) == -1);
    const FormalConcept& c = pool_.concept_at(slot);
    std::int64_t count = 0;
    c.extent.for_each(
        [&](std::size_t i) { count += std::int64_t(cells_.append_row(i, c.intent, slot)); });
    pool_.set_covers(slot, count);
    return count;
}

std::int64_t Grecon3Run::cover_incremental(std::uint32_t slot, std::int64_t best_coverage) {
    assert(cells_.initialized());
    const FormalConcept& c = pool_.concept_at(slot);
    std::int64_t covered = pool_.covers(slot);
    const std::int64_t intent_size = std::int64_t(c.intent.count());
    std::size_t i = c.extent.next_set_bit(std::size_t(pool_.progress(slot) + 1));
    while (i != Bitset::npos) {
        covered += std::int64_t(cells_.append_row(i, c.intent, slot));
        pool_.add_potential(slot, -intent_size);
        pool_.set_progress(slot, std::int64_t(i));
        if (covered + pool_.potential(slot) < best_coverage) break;
        i = c.extent.next_set_bit(i + 1);
    }
    assert(pool_.potential(slot) >= 0);
    pool_.set_covers(slot, covered);
    return covered;
}

std::int64_t Grecon3Run::cover(std::uint32_t slot, std::int64_t best_coverage) {
    switch (factors_.size()) {
        case 0:
            throw std::logic_error("cover: requires at least one chosen factor");
        case 1:
            return second_factor_coverage(pool_.concept_at(slot), factors_[0]);
        case 2:
            return third_factor_coverage(pool_.concept_at(slot), factors_[0], factors_[1]);
        default: {
            assert(cells_.initialized());
            // Fully initialized slots stay exact through uncover decrements.
            if (pool_.potential(slot) == 0) return pool_.covers(slot);
            if (pool_.concept_at(slot).extent.count() < small_threshold_) {
                std::int64_t count = cover_concept(slot);
                pool_.set_potential(slot, 0);
                return count;
            }
            return cover_incremental(slot, best_coverage);
        }
    }
}

LoadResult Grecon3Run::load_concepts() {
    std::int64_t best_cov = -1;
    std::uint32_t best_slot = CandidatePool::npos;
    std::uint64_t best_ord = std::numeric_limits<std::uint64_t>::max();

    auto consider = [&](std::uint32_t slot, std::int64_t cov) {
        if (cov > best_cov || (cov == best_cov && pool_.ordinal(slot) < best_ord)) {
            best_cov = cov;
            best_slot = slot;
            best_ord = pool_.ordinal(slot);
        }
    };

    // Queue phase. The bound check runs before cover() touches the slot:
    // untouched entries still carry their sort-time bounds, so sortedness
    // guarantees that once one falls below the best, none of the rest can
    // reach it. (Checking the post-cover bound instead would compare against
    // a value unrelated to the remaining entries and could skip a winner.)
    for (std::uint32_t slot : queue_) {
        if (pool_.bound(slot) < best_cov) break;
        std::int64_t cov = cover(slot, best_cov);
        assert(cov >= 0);
        consider(slot, cov);
    }

    // Stream phase: sizes are non-increasing, so the first concept whose size
    // cannot beat the best ends the scan. It is still pooled and queued so
    // later rounds see it.
    while (stream_.has_next()) {
        const FormalConcept& next = stream_.next();
        std::int64_t size = std::int64_t(next.size());
        std::uint32_t slot = pool_.acquire(next);
        queue_.push_back(slot);
        if (size < best_cov) break;
        std::int64_t cov = cover(slot, best_cov);
        assert(cov >= 0);
        consider(slot, cov);
    }

    if (best_slot == CandidatePool::npos || best_cov <= 0)
        throw IncompleteStreamError("grecon3: no candidate covers a remaining one");
    return {best_slot, best_cov};
}

std::uint64_t Grecon3Run::uncover(const FormalConcept& factor) {
    std::uint64_t cleared = 0;
    factor.extent.for_each([&](std::size_t i) {
        if (cells_.initialized()) {
            cells_.remove_row(i, factor.intent, [&](const std::vector<std::uint32_t>& slots) {
                for (std::uint32_t k : slots) {
                    pool_.add_covers(k, -1);
                    assert(pool_.covers(k) >= 0);
                    if (pool_.bound(k) == 0 && pool_.live(k)) pool_.release(k);
                }
            });
        }
        cleared += live_.clear_in_row(i, factor.intent);
    });
    return cleared;
}

void Grecon3Run::resort_queue() {
    std::stable_sort(queue_.begin(), queue_.end(), [&](std::uint32_t a, std::uint32_t b) {
        return pool_.bound(a) > pool_.bound(b);
    });
    while (!queue_.empty() && pool_.bound(queue_.back()) == 0) {
        std::uint32_t slot = queue_.back();
        if (pool_.live(slot)) pool_.release(slot);
        queue_.pop_back();
    }
}

std::uint32_t Grecon3Run::acquire_slot(const FormalConcept& c) {
    std::uint32_t slot = pool_.acquire(c);
    queue_.push_back(slot);
    return slot;
}

void Grecon3Run::apply_factor(const FormalConcept& c, std::uint64_t gained) {
    factors_.push_back(c);
    new_coverage_.push_back(gained);
    covered_ += gained;
    assert(covered_ <= total_);
}

bool Grecon3Run::step() {
    if (done()) return false;
    if (factors_.empty()) {
        take_first_factor();
        return !done();
    }
    if (factors_.size() == 3) ensure_cells_initialized();
    LoadResult best = load_concepts();
    FormalConcept chosen = pool_.concept_at(best.slot);  // copy: uncover may free the slot
    std::uint64_t cleared = uncover(chosen);
    (void)cleared;
    assert(cleared == std::uint64_t(best.coverage));
    apply_factor(chosen, std::uint64_t(best.coverage));
    resort_queue();
#ifndef NDEBUG
    check_integrity();
#endif
    return !done();
}

Factorization Grecon3Run::run() {
    while (step()) {
    }
    return result();
}

Factorization Grecon3Run::result() const {
    Factorization out;
    out.total_ones = total_;
    out.factors = factors_;
    out.new_coverage = new_coverage_;
    out.error = total_ - covered_;
    out.cell_appends = cells_.append_count();
    out.stats.peak_live_slots = pool_.peak_live();
    out.stats.peak_cell_entries = cells_.peak_entries();
    return out;
}

void Grecon3Run::check_integrity() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("grecon3 integrity: ") + what);
    };

    std::vector<std::int64_t> refs(pool_.slot_count(), 0);
    if (cells_.initialized()) {
        for (std::size_t i = 0; i < matrix_.rows(); ++i) {
            for (const CellStore::Entry& e : cells_.row(i)) {
                require(live_.test(i, e.col), "cell entry exists for a covered one");
                for (std::uint32_t k : e.slots) {
                    require(pool_.live(k), "freed slot referenced by a live cell");
                    ++refs[k];
                }
            }
        }
    }

    for (std::uint32_t l = 0; l < pool_.slot_count(); ++l) {
        if (!pool_.live(l)) {
            require(refs[l] == 0, "freed slot still referenced");
            continue;
        }
        require(pool_.covers(l) == refs[l], "covers out of sync with live references");
        require(pool_.potential(l) >= 0, "negative potential");

        // covers <= true live coverage <= covers + potential, with equality
        // of covers when potential is exhausted.
        const FormalConcept& c = pool_.concept_at(l);
        std::int64_t truth = 0;
        c.extent.for_each([&](std::size_t i) {
            auto row = live_.row_words(i);
            auto need = c.intent.words();
            for (std::size_t w = 0; w < row.size(); ++w)
                truth += std::int64_t(std::popcount(row[w] & need[w]));
        });
        if (cells_.initialized()) {
            require(pool_.covers(l) <= truth, "covers exceeds true live coverage");
            require(truth <= pool_.bound(l), "bound below true live coverage");
            if (pool_.potential(l) == 0)
                require(pool_.covers(l) == truth, "exhausted slot with inexact covers");
        } else {
            require(truth <= pool_.bound(l), "bound below true live coverage");
        }
    }

    for (std::uint32_t l : queue_) require(pool_.live(l), "queue holds a freed slot");
}

Factorization grecon3_factorize(const BooleanMatrix& I, ConceptStream stream, double epsilon,
                                std::size_t small_threshold) {
    Grecon3Run run(I, std::move(stream), epsilon, small_threshold);
    return run.run();
}

}  // namespace grecon
