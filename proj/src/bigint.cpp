#include "ogs/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ogs {

BigUint::BigUint(std::uint64_t value) {
    while (value > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
        value /= kBase;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& other) {
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + static_cast<std::uint64_t>(limbs_[i]) +
                            (i < other.limbs_.size() ? other.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(sum % kBase);
        carry = static_cast<std::uint32_t>(sum / kBase);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % BigUint::kBase);
            carry = cur / BigUint::kBase;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur % BigUint::kBase);
            carry = cur / BigUint::kBase;
            ++k;
        }
    }
    out.trim();
    return out;
}

bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    }
    return false;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

bool BigUint::fits_u64() const {
    if (limbs_.size() < 3) return true;
    if (limbs_.size() > 3) return false;
    // 2^64-1 = 18{446744073}{709551615}
    return limbs_[2] < 18u ||
           (limbs_[2] == 18u &&
            (limbs_[1] < 446744073u || (limbs_[1] == 446744073u && limbs_[0] <= 709551615u)));
}

std::uint64_t BigUint::as_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::as_u64: value does not fit");
    std::uint64_t value = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) value = value * kBase + limbs_[i];
    return value;
}

BigUint binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint();
    k = std::min(k, n - k);
    if (k == 0) return BigUint(1);
    std::vector<BigUint> row(k + 1, BigUint(0));
    row[0] = BigUint(1);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    }
    return row[k];
}

} // namespace ogs
