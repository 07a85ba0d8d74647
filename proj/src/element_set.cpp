#include "pdeg/element_set.hpp"

#include <bit>

#include "pdeg/errors.hpp"

namespace pdeg {

int ElementSet::count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool ElementSet::empty() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

std::vector<int> ElementSet::members() const {
    std::vector<int> out;
    out.reserve(size_t(count()));
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(int(wi * 64) + bit);
            w &= w - 1;
        }
    }
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
    ElementSet out(size_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
    return out;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
    ElementSet out(size_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
    return out;
}

bool ElementSet::operator<(const ElementSet& other) const {
    int ca = count(), cb = other.count();
    if (ca != cb) return ca < cb;
    // lexicographic on the bit pattern, low elements first
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    return false;
}

std::string ElementSet::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(words_.size() * 16);
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        for (int nibble = 0; nibble < 16; ++nibble) {
            out.push_back(digits[w & 0xf]);
            w >>= 4;
        }
    }
    return out;
}

ElementSet ElementSet::from_hex(int universe_size, const std::string& hex) {
    ElementSet out(universe_size);
    if (hex.size() != out.words_.size() * 16)
        throw Error(ErrorKind::CacheError, "bad bit-pattern length");
    for (size_t i = 0; i < out.words_.size(); ++i) {
        uint64_t w = 0;
        for (int nibble = 15; nibble >= 0; --nibble) {
            char c = hex[i * 16 + size_t(nibble)];
            uint64_t v;
            if (c >= '0' && c <= '9') v = uint64_t(c - '0');
            else if (c >= 'a' && c <= 'f') v = uint64_t(c - 'a' + 10);
            else throw Error(ErrorKind::CacheError, "bad hex digit in bit pattern");
            w = (w << 4) | v;
        }
        out.words_[i] = w;
    }
    // bits beyond the universe must be clear
    int tail = universe_size & 63;
    if (tail && (out.words_.back() >> tail))
        throw Error(ErrorKind::CacheError, "bit pattern exceeds group order");
    return out;
}

uint64_t ElementSet::hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace pdeg
