#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grecon/matrix.hpp"

namespace grecon {

/// A pair <extent, intent> closed under the concept-forming operators:
/// up(extent) == intent and down(intent) == extent.
struct FormalConcept {
    ObjectSet extent;
    AttributeSet intent;

    std::uint64_t size() const {
        return std::uint64_t(extent.count()) * std::uint64_t(intent.count());
    }

    bool operator==(const FormalConcept& other) const = default;
};

/// <down(D), up(down(D))>; the smallest concept whose intent contains D.
FormalConcept closure(const BooleanMatrix& I, const AttributeSet& D);

/// All formal concepts of I, enumerated by Close-by-One: depth-first descent
/// adding attributes in ascending index order with the canonicity test on the
/// prefix. The output order is deterministic (the DFS order) and contains no
/// duplicates.
std::vector<FormalConcept> enumerate_concepts(const BooleanMatrix& I);

/// Canonical total order on concepts: size descending, then extent
/// cardinality descending, then intent ascending-sequence lexicographic.
/// Intents are unique per concept, so this is a strict total order.
bool canonical_less(const FormalConcept& a, const FormalConcept& b);

/// Single-consumer stream of concepts in canonical order. Sizes are
/// non-increasing and zero-size concepts (empty extent or intent) are dropped
/// up front: they cover nothing and can never win a coverage argmax.
class ConceptStream {
public:
    ConceptStream() = default;
    explicit ConceptStream(std::vector<FormalConcept> sorted) : items_(std::move(sorted)) {}

    bool has_next() const { return pos_ < items_.size(); }
    bool exhausted() const { return !has_next(); }

    const FormalConcept& peek() const { return items_[pos_]; }
    const FormalConcept& next() { return items_[pos_++]; }

    /// Number of concepts consumed so far.
    std::size_t position() const { return pos_; }
    std::size_t total() const { return items_.size(); }

    /// Moves out everything not yet consumed and leaves the stream exhausted.
    std::vector<FormalConcept> drain();

private:
    std::vector<FormalConcept> items_;
    std::size_t pos_ = 0;
};

/// Sorts into the canonical order and drops zero-size concepts.
ConceptStream canonical_stream(std::vector<FormalConcept> concepts);

/// The sorted, filtered sequence behind canonical_stream, kept as a vector
/// for callers that need random access (the naive baseline, dumps).
std::vector<FormalConcept> canonical_order(std::vector<FormalConcept> concepts,
                                           bool drop_zero_size = true);

}  // namespace grecon
