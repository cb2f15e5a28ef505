#include "sumlab/bigint.hpp"

#include <cmath>
#include <limits>

namespace sumlab {

namespace {
constexpr uint32_t kBase = 1'000'000'000;
}

BigUint::BigUint(uint64_t v) {
    limbs_.clear();
    do {
        limbs_.push_back(static_cast<uint32_t>(v % kBase));
        v /= kBase;
    } while (v > 0);
}

BigUint& BigUint::operator+=(const BigUint& o) {
    size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(limbs_[i]) + carry +
                     (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(s % kBase);
        carry = static_cast<uint32_t>(s / kBase);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

bool BigUint::operator<(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
    return false;
}

bool BigUint::fits_u64() const {
    // 3 limbs can exceed 2^64; compare against the max directly.
    if (limbs_.size() > 3) return false;
    BigUint max(std::numeric_limits<uint64_t>::max());
    return *this <= max;
}

uint64_t BigUint::as_u64() const {
    uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
}

std::string BigUint::to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

double BigUint::log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    double top = 0;
    size_t n = limbs_.size();
    for (size_t i = n; i-- > 0 && i + 3 >= n;) top = top * kBase + limbs_[i];
    size_t skipped = n > 3 ? n - 3 : 0;
    return std::log2(top) + static_cast<double>(skipped) * std::log2(static_cast<double>(kBase));
}

}  // namespace sumlab
