#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumlab::detail {

inline size_t words_for(int64_t nbits) {
    return static_cast<size_t>((nbits + 63) / 64);
}

// dst |= (src << shift).  dst must hold src_words*64 + shift bits.
void or_shift(std::vector<uint64_t>& dst, const uint64_t* src, size_t src_words, int64_t shift);

// dst &= (src >> shift), missing high bits read as 0.  src may alias dst.
// Returns true when dst is nonzero afterwards.
bool and_rshift(uint64_t* dst, size_t dst_words, const uint64_t* src, size_t src_words, int64_t shift);

// Set bits lo..hi inclusive.
void paint_range(std::vector<uint64_t>& dst, int64_t lo, int64_t hi);

// dst |= rot_left(src, shift) on an nbits ring; src uses bits [0, nbits).
void rotate_or(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, int64_t shift, int64_t nbits);

int64_t popcount(const uint64_t* w, size_t n);
int64_t find_first(const uint64_t* w, size_t n);             // -1 when none
int64_t find_last(const uint64_t* w, size_t n);              // -1 when none
int64_t count_runs(const uint64_t* w, size_t n);             // maximal runs of set bits

}  // namespace sumlab::detail
