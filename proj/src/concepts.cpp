#include "grecon/concepts.hpp"

#include <algorithm>

namespace grecon {

FormalConcept closure(const BooleanMatrix& I, const AttributeSet& D) {
    ObjectSet extent = down(I, D);
    AttributeSet intent = up(I, extent);
    return {std::move(extent), std::move(intent)};
}

namespace {

struct CboContext {
    std::size_t n;
    std::vector<ObjectSet> cols;
    std::vector<FormalConcept> out;
    std::vector<ObjectSet> scratch;  // one child extent per recursion depth

    // Ancestor frames keep references into `scratch`, so it must be sized up
    // front; growing it mid-recursion would reallocate under their feet.
    void descend(const ObjectSet& extent, const AttributeSet& intent, std::size_t first_attr,
                 std::size_t depth) {
        out.push_back({extent, intent});
        for (std::size_t j = first_attr; j < n; ++j) {
            if (intent.test(j)) continue;
            ObjectSet& child = scratch[depth];
            child.assign_and(extent, cols[j]);

            // Canonicity: the closure may not add any attribute below j that
            // the parent intent lacks.
            bool canonical = true;
            for (std::size_t y = 0; y < j; ++y) {
                if (intent.test(y)) continue;
                if (child.is_subset_of(cols[y])) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;

            AttributeSet child_intent = intent;
            child_intent.set(j);
            for (std::size_t y = j + 1; y < n; ++y) {
                if (child_intent.test(y)) continue;
                if (child.is_subset_of(cols[y])) child_intent.set(y);
            }
            descend(child, child_intent, j + 1, depth + 1);
        }
    }
};

}  // namespace

std::vector<FormalConcept> enumerate_concepts(const BooleanMatrix& I) {
    CboContext ctx;
    ctx.n = I.cols();
    ctx.cols = I.columns();
    ctx.scratch.resize(ctx.n + 1);  // max depth: one level per added attribute

    ObjectSet all_objects(I.rows(), true);
    AttributeSet top_intent = up(I, all_objects);
    ObjectSet top_extent = down(I, top_intent);
    // top_extent == all_objects by construction; keep the closure anyway so a
    // degenerate 0-row matrix still yields a valid pair.
    ctx.descend(top_extent, top_intent, 0, 0);
    return ctx.out;
}

bool canonical_less(const FormalConcept& a, const FormalConcept& b) {
    std::uint64_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa > sb;
    std::size_t ea = a.extent.count(), eb = b.extent.count();
    if (ea != eb) return ea > eb;
    return a.intent.sequence_less(b.intent);
}

std::vector<FormalConcept> canonical_order(std::vector<FormalConcept> concepts,
                                           bool drop_zero_size) {
    if (drop_zero_size) {
        std::erase_if(concepts, [](const FormalConcept& c) {
            return c.extent.none() || c.intent.none();
        });
    }
    struct Keyed {
        std::uint64_t size;
        std::size_t extent_count;
        std::size_t index;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(concepts.size());
    for (std::size_t i = 0; i < concepts.size(); ++i)
        keyed.push_back({concepts[i].size(), concepts[i].extent.count(), i});
    std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
        if (a.size != b.size) return a.size > b.size;
        if (a.extent_count != b.extent_count) return a.extent_count > b.extent_count;
        return concepts[a.index].intent.sequence_less(concepts[b.index].intent);
    });
    std::vector<FormalConcept> sorted;
    sorted.reserve(keyed.size());
    for (const auto& k : keyed) sorted.push_back(std::move(concepts[k.index]));
    return sorted;
}

std::vector<FormalConcept> ConceptStream::drain() {
    std::vector<FormalConcept> out;
    if (pos_ == 0) {
        out = std::move(items_);
    } else {
        out.reserve(items_.size() - pos_);
        for (std::size_t i = pos_; i < items_.size(); ++i) out.push_back(std::move(items_[i]));
    }
    items_.clear();
    pos_ = 0;
    return out;
}

ConceptStream canonical_stream(std::vector<FormalConcept> concepts) {
    return ConceptStream(canonical_order(std::move(concepts)));
}

}  // namespace grecon
