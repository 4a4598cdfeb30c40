#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tdc {

/// Fixed-capacity set of vertex indices 0..capacity-1, stored as a bitset.
/// "v is adjacent to every vertex of class C" becomes C.is_subset_of(N(v)).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((static_cast<std::size_t>(capacity) + 63) / 64, 0) {}

    static VertexSet of(int capacity, std::initializer_list<int> members) {
        VertexSet s(capacity);
        for (int v : members) s.set(v);
        return s;
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int capacity() const { return capacity_; }

    bool test(int v) const {
        assert(v >= 0 && v < capacity_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool is_subset_of(const VertexSet& other) const {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    /// Removes every member of `other` from this set.
    VertexSet& subtract(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    VertexSet complement() const {
        VertexSet s(capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    /// Smallest member, or -1 if empty.
    int first() const { return next(-1); }

    /// Smallest member strictly greater than v, or -1 if none.
    int next(int v) const {
        int start = v + 1;
        if (start >= capacity_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] >> (start & 63);
        if (w) return start + std::countr_zero(w);
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void trim() {
        int rem = capacity_ & 63;
        if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace tdc
