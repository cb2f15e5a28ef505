#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sumlab {

// Unsigned big integer, base 1e9 limbs.  Only what the counting DPs need:
// addition, comparison, decimal output and a log2 estimate.  Partition counts
// overflow 64 bits near n ~ 2500, so the counters carry these instead.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(uint64_t v);  // NOLINT(google-explicit-constructor)

    BigUint& operator+=(const BigUint& o);
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator<(const BigUint& o) const;
    bool operator<=(const BigUint& o) const { return *this < o || *this == o; }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool fits_u64() const;
    uint64_t as_u64() const;  // valid when fits_u64()

    std::string to_string() const;
    double log2() const;  // -inf for zero

private:
    std::vector<uint32_t> limbs_;  // little-endian, base 1e9
};

}  // namespace sumlab
