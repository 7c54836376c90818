#pragma once

#include <string>

#include "trustydice/bigint.hpp"

namespace trustydice {

// Nonnegative rational, always stored reduced. Equality is exact.
struct Rational {
    BigUint num;
    BigUint den{1};

    Rational() = default;
    Rational(BigUint n, BigUint d);
    Rational(std::uint64_t n, std::uint64_t d) : Rational(BigUint(n), BigUint(d)) {}

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    Rational operator+(const Rational& o) const;

    double to_double() const { return num.to_double() / den.to_double(); }
    std::string to_string() const {
        return num.to_decimal_string() + "/" + den.to_decimal_string();
    }
};

}  // namespace trustydice
