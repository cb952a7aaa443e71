#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cbal {

/// Arbitrary-precision nonnegative integer, base 10^9 limbs.  Just enough
/// arithmetic for the counting recurrences and the matrix powers; the
/// sequences grow like 5.16^n and leave 64 bits before n = 30.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)

    static BigNat from_u128(unsigned __int128 v);

    BigNat& operator+=(const BigNat& o);
    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator*(const BigNat& a, const BigNat& b);

    BigNat times_small(std::uint32_t f) const;
    std::uint32_t mod_small(std::uint32_t m) const;

    bool operator==(const BigNat& o) const = default;
    std::strong_ordering operator<=>(const BigNat& o) const;

    bool is_zero() const { return limbs_.empty(); }
    std::string to_string() const;

private:
    void trim();
    // little-endian, each limb < 10^9; empty means zero
    std::vector<std::uint32_t> limbs_;
};

}  // namespace cbal
