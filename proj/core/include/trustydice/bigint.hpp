#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trustydice {

class Rng;

// Arbitrary-precision unsigned integer, base 2^32 limbs, little-endian.
// Just enough arithmetic for exact lottery odds: votes^e sums, comparisons,
// gcd reduction, decimal printing and uniform sampling below a bound.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    std::size_t bit_length() const;

    // -1, 0, +1 as a < b, a == b, a > b.
    static int compare(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }

    BigUint& operator+=(const BigUint& o);
    friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }
    // Requires *this >= o.
    BigUint& operator-=(const BigUint& o);
    friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    void shift_right_one();

    static BigUint pow(std::uint64_t base, unsigned exponent);
    static BigUint gcd(BigUint a, BigUint b);  // binary gcd
    // Exact quotient for known-divisible operands (used after gcd).
    static BigUint divide_exact(const BigUint& a, const BigUint& divisor);

    // Uniform value in [0, bound) by top-limb-masked rejection. bound > 0.
    static BigUint random_below(const BigUint& bound, Rng& rng);

    double to_double() const;
    std::string to_decimal_string() const;

private:
    void normalize();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace trustydice
