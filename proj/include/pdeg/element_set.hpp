#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdeg {

/// Membership bit-vector over the element indices of a fixed group.
/// Comparison is (cardinality, then lexicographic bit pattern), which is
/// the canonical subgroup ordering used everywhere in reports and caches.
class ElementSet {
public:
    ElementSet() : size_(0) {}
    explicit ElementSet(int universe_size)
        : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

    static ElementSet singleton(int universe_size, int element) {
        ElementSet s(universe_size);
        s.add(element);
        return s;
    }
    static ElementSet full(int universe_size) {
        ElementSet s(universe_size);
        for (int i = 0; i < universe_size; ++i) s.add(i);
        return s;
    }

    int universe_size() const { return size_; }

    bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void add(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void remove(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const;
    bool empty() const;

    /// Member indices in increasing order.
    std::vector<int> members() const;

    bool is_subset_of(const ElementSet& other) const;

    ElementSet operator&(const ElementSet& other) const;
    ElementSet operator|(const ElementSet& other) const;

    bool operator==(const ElementSet& other) const { return size_ == other.size_ && words_ == other.words_; }
    bool operator!=(const ElementSet& other) const { return !(*this == other); }

    /// (cardinality, bit pattern) order.
    bool operator<(const ElementSet& other) const;

    /// Hex string of the bit pattern, low words first, fixed width.
    std::string hex() const;
    static ElementSet from_hex(int universe_size, const std::string& hex);

    uint64_t hash() const;

private:
    int size_;
    std::vector<uint64_t> words_;
};

} // namespace pdeg
