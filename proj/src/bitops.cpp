#include "sumlab/detail/bitops.hpp"

#include <bit>

namespace sumlab::detail {

void or_shift(std::vector<uint64_t>& dst, const uint64_t* src, size_t src_words, int64_t shift) {
    if (src_words == 0) return;
    size_t wo = static_cast<size_t>(shift >> 6);
    unsigned bo = static_cast<unsigned>(shift & 63);
    if (bo == 0) {
        for (size_t i = 0; i < src_words; ++i) dst[i + wo] |= src[i];
        return;
    }
    uint64_t carry = 0;
    for (size_t i = 0; i < src_words; ++i) {
        uint64_t v = src[i];
        dst[i + wo] |= (v << bo) | carry;
        carry = v >> (64 - bo);
    }
    dst[src_words + wo] |= carry;
}

bool and_rshift(uint64_t* dst, size_t dst_words, const uint64_t* src, size_t src_words, int64_t shift) {
    size_t wo = static_cast<size_t>(shift >> 6);
    unsigned bo = static_cast<unsigned>(shift & 63);
    uint64_t any = 0;
    // Reads are always at index >= writes, so ascending order is alias-safe.
    for (size_t i = 0; i < dst_words; ++i) {
        size_t j = i + wo;
        uint64_t v = 0;
        if (j < src_words) {
            v = src[j] >> bo;
            if (bo != 0 && j + 1 < src_words) v |= src[j + 1] << (64 - bo);
        }
        dst[i] &= v;
        any |= dst[i];
    }
    return any != 0;
}

void paint_range(std::vector<uint64_t>& dst, int64_t lo, int64_t hi) {
    if (lo > hi) return;
    size_t wl = static_cast<size_t>(lo >> 6), wh = static_cast<size_t>(hi >> 6);
    uint64_t ml = ~0ULL << (lo & 63);
    uint64_t mh = ~0ULL >> (63 - (hi & 63));
    if (wl == wh) {
        dst[wl] |= ml & mh;
        return;
    }
    dst[wl] |= ml;
    for (size_t w = wl + 1; w < wh; ++w) dst[w] = ~0ULL;
    dst[wh] |= mh;
}

void rotate_or(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, int64_t shift, int64_t nbits) {
    shift %= nbits;
    if (shift < 0) shift += nbits;
    size_t nw = words_for(nbits);
    if (shift == 0) {
        for (size_t i = 0; i < nw; ++i) dst[i] |= src[i];
        return;
    }
    // Low part: bits [0, nbits-shift) land at [shift, nbits).
    // High part: bits [nbits-shift, nbits) wrap to [0, shift).
    std::vector<uint64_t> buf(words_for(nbits + shift) + 1, 0);
    or_shift(buf, src.data(), nw, shift);
    for (size_t i = 0; i < nw; ++i) dst[i] |= buf[i];
    // Fold bits >= nbits back to the bottom.
    size_t fw = buf.size();
    std::vector<uint64_t> fold(words_for(shift) + 1, 0);
    {
        size_t wo = static_cast<size_t>(nbits >> 6);
        unsigned bo = static_cast<unsigned>(nbits & 63);
        for (size_t i = 0; i < fold.size(); ++i) {
            size_t j = i + wo;
            uint64_t v = 0;
            if (j < fw) {
                v = buf[j] >> bo;
                if (bo != 0 && j + 1 < fw) v |= buf[j + 1] << (64 - bo);
            }
            fold[i] = v;
        }
    }
    for (size_t i = 0; i < fold.size() && i < nw; ++i) dst[i] |= fold[i];
    // Mask stray bits above nbits-1 in the top word.
    unsigned top = static_cast<unsigned>(nbits & 63);
    if (top != 0) dst[nw - 1] &= ~0ULL >> (64 - top);
}

int64_t popcount(const uint64_t* w, size_t n) {
    int64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += std::popcount(w[i]);
    return c;
}

int64_t find_first(const uint64_t* w, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (w[i]) return static_cast<int64_t>(i) * 64 + __builtin_ctzll(w[i]);
    return -1;
}

int64_t find_last(const uint64_t* w, size_t n) {
    for (size_t i = n; i-- > 0;)
        if (w[i]) return static_cast<int64_t>(i) * 64 + 63 - __builtin_clzll(w[i]);
    return -1;
}

int64_t count_runs(const uint64_t* w, size_t n) {
    // A run starts at every set bit whose predecessor is clear: popcount of
    // x & ~(x<<1 | carry_in).
    int64_t runs = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t x = w[i];
        runs += std::popcount(x & ~((x << 1) | carry));
        carry = x >> 63;
    }
    return runs;
}

}  // namespace sumlab::detail
