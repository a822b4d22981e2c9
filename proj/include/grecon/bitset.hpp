#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace grecon {

/// Fixed-universe bitset packed into 64-bit words.
/// Bits at positions >= size() are kept zero at all times, so popcounts and
/// word-wise comparisons never need tail masking at the call site.
class Bitset {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Bitset() = default;

    explicit Bitset(std::size_t nbits, bool fill = false)
        : nbits_(nbits), words_(word_count(nbits), 0) {
        if (fill) set_all();
    }

    static Bitset of(std::size_t nbits, std::initializer_list<std::size_t> indices) {
        Bitset b(nbits);
        for (std::size_t i : indices) b.set(i);
        return b;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        if (i >= nbits_) throw std::out_of_range("Bitset::set: index out of range");
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void reset(std::size_t i) {
        if (i >= nbits_) throw std::out_of_range("Bitset::reset: index out of range");
        words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    void clear_all() {
        for (auto& w : words_) w = 0;
    }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t(0);
        mask_tail();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::size_t(std::popcount(w));
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    /// popcount(*this & other); universes must match.
    std::size_t and_count(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += std::size_t(std::popcount(words_[w] & other.words_[w]));
        return c;
    }

    /// popcount(a & b & c) without materializing the intersection.
    static std::size_t and_count3(const Bitset& a, const Bitset& b, const Bitset& c) {
        assert(a.nbits_ == b.nbits_ && b.nbits_ == c.nbits_);
        std::size_t n = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            n += std::size_t(std::popcount(a.words_[w] & b.words_[w] & c.words_[w]));
        return n;
    }

    bool is_subset_of(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & other.words_[w]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
        return *this;
    }

    /// Set difference: clears every bit also set in other.
    Bitset& operator-=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    /// *this = a & b without reallocating when sizes already match.
    void assign_and(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        nbits_ = a.nbits_;
        words_.resize(a.words_.size());
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = a.words_[w] & b.words_[w];
    }

    bool operator==(const Bitset& other) const = default;

    /// Index of the first set bit at position >= from, or npos.
    std::size_t next_set_bit(std::size_t from) const {
        if (from >= nbits_) return npos;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) return (w << 6) + std::size_t(std::countr_zero(cur));
            if (++w == words_.size()) return npos;
            cur = words_[w];
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t cur = words_[w];
            while (cur) {
                std::size_t off = std::size_t(std::countr_zero(cur));
                fn((w << 6) + off);
                cur &= cur - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// Lowest index at which the two sets differ, or npos when equal.
    std::size_t first_difference(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w] ^ other.words_[w];
            if (x) return (w << 6) + std::size_t(std::countr_zero(x));
        }
        return npos;
    }

    /// True when this set precedes other under lexicographic comparison of the
    /// ascending index sequences, e.g. {0,2} < {1}, {1} < {1,2}.
    bool sequence_less(const Bitset& other) const {
        std::size_t d = first_difference(other);
        if (d == npos) return false;
        if (test(d)) return other.next_set_bit(d + 1) != npos;
        return next_set_bit(d + 1) == npos;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull ^ nbits_;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return std::size_t(h);
    }

private:
    static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

    void mask_tail() {
        if (std::size_t rem = nbits_ & 63; rem != 0 && !words_.empty())
            words_.back() &= (~std::uint64_t(0)) >> (64 - rem);
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace grecon
