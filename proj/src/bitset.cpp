#include "floorsums/bitset.hpp"
#include <bit>

namespace fsum {

void BitArray::trim() {
    if (words_.empty()) return;
    size_t rem = size_ & 63;
    if (rem) words_.back() &= (uint64_t{1} << rem) - 1;
}

void BitArray::or_with(const BitArray& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

void BitArray::or_shifted(const BitArray& other, size_t k) {
    if (k >= size_) return;
    size_t off = k >> 6, sh = k & 63;
    size_t n = words_.size();
    if (sh == 0) {
        for (size_t i = 0; i + off < n && i < other.words_.size(); ++i)
            words_[i + off] |= other.words_[i];
    } else {
        for (size_t i = 0; i + off < n && i < other.words_.size(); ++i) {
            uint64_t w = other.words_[i];
            words_[i + off] |= w << sh;
            if (i + off + 1 < n) words_[i + off + 1] |= w >> (64 - sh);
        }
    }
    trim();
}

bool BitArray::all_set() const {
    if (size_ == 0) return true;
    size_t full = size_ >> 6;
    for (size_t i = 0; i < full; ++i)
        if (words_[i] != ~uint64_t{0}) return false;
    size_t rem = size_ & 63;
    if (rem) {
        uint64_t mask = (uint64_t{1} << rem) - 1;
        if ((words_[full] & mask) != mask) return false;
    }
    return true;
}

size_t BitArray::count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += static_cast<size_t>(std::popcount(w));
    return c;
}

std::vector<i64> BitArray::missing(size_t lo) const {
    std::vector<i64> out;
    for (size_t i = lo; i < size_; ++i)
        if (!get(i)) out.push_back(static_cast<i64>(i));
    return out;
}

} // namespace fsum
