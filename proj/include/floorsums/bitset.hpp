#pragma once
#include <cstdint>
#include <cstddef>
#include <vector>
#include "floorsums/checked.hpp"

namespace fsum {

// Dense bit set over [0, size). Backbone of the coverage engine:
// or_shifted(src, k) is "dst |= src << k" clipped to the array, which is
// exactly "add k to every reachable partial sum".
class BitArray {
public:
    BitArray() : size_(0) {}
    explicit BitArray(size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    size_t size() const { return size_; }

    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(size_t i) {
        words_[i >> 6] |= (uint64_t{1} << (i & 63));
    }

    void reset(size_t i) {
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
    }

    // this |= other (same size required)
    void or_with(const BitArray& other);

    // this |= (other << k), truncated at size()
    void or_shifted(const BitArray& other, size_t k);

    bool all_set() const;
    size_t count() const;

    // Indices in [lo, size) that are still zero.
    std::vector<i64> missing(size_t lo = 0) const;

    const std::vector<uint64_t>& words() const { return words_; }

private:
    size_t size_;
    std::vector<uint64_t> words_;

    void trim();
};

} // namespace fsum
