#ifndef ogs_bigint_hpp
#define ogs_bigint_hpp

#include <cstdint>
#include <string>
#include <vector>

namespace ogs {

// Arbitrary-precision unsigned integer. Counting engines need exact values
// and decimal serialization; only addition, multiplication and comparison
// are required, so this stays deliberately small (base 10^9 limbs).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t value);

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& other);
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
    friend bool operator<(const BigUint& a, const BigUint& b);
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a == b || a < b; }

    // Decimal, no leading zeros ("0" for zero).
    std::string to_string() const;

    // Fits-in-uint64 check plus conversion, for tests and small fixtures.
    bool fits_u64() const;
    std::uint64_t as_u64() const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    std::vector<std::uint32_t> limbs_; // little endian, most significant last, no trailing zeros
    void trim();
};

// C(n, k) via Pascal additions; exact for any n, k.
BigUint binomial(unsigned n, unsigned k);

} // namespace ogs

#endif
