#include "trustydice/rational.hpp"

#include <stdexcept>

namespace trustydice {

Rational::Rational(BigUint n, BigUint d) {
    if (d.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (n.is_zero()) {
        num = BigUint(0);
        den = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(n, d);
    num = BigUint::divide_exact(n, g);
    den = BigUint::divide_exact(d, g);
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

}  // namespace trustydice
