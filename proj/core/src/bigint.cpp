#include "trustydice/bigint.hpp"

#include <algorithm>
#include <stdexcept>

#include "trustydice/rng.hpp"

namespace trustydice {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xFFFFFFFFull));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUint::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    }
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xFFFFFFFFull);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (compare(*this, o) < 0) throw std::invalid_argument("BigUint subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow -
                            (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        if (diff < 0) {
            diff += 1ll << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    normalize();
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
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
            carry = cur >> 32;
        }
        std::size_t pos = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[pos] + carry;
            out.limbs_[pos] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
            carry = cur >> 32;
            ++pos;
        }
    }
    out.normalize();
    return out;
}

void BigUint::shift_right_one() {
    std::uint32_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint32_t next_carry = limbs_[i] & 1u;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
        carry = next_carry;
    }
    normalize();
}

BigUint BigUint::pow(std::uint64_t base, unsigned exponent) {
    BigUint result(1);
    BigUint b(base);
    while (exponent) {
        if (exponent & 1u) result = result * b;
        exponent >>= 1u;
        if (exponent) b = b * b;
    }
    return result;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    unsigned shift = 0;
    while (a.is_even() && b.is_even()) {
        a.shift_right_one();
        b.shift_right_one();
        ++shift;
    }
    while (a.is_even()) a.shift_right_one();
    for (;;) {
        while (b.is_even()) b.shift_right_one();
        if (compare(a, b) > 0) std::swap(a, b);
        b -= a;
        if (b.is_zero()) break;
    }
    for (unsigned i = 0; i < shift; ++i) a = a * BigUint(2);
    return a;
}

BigUint BigUint::divide_exact(const BigUint& a, const BigUint& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("BigUint division by zero");
    // Binary long division; operands here are short (lottery weights).
    BigUint quotient;
    BigUint remainder;
    const std::size_t bits = a.bit_length();
    quotient.limbs_.assign((bits + 31) / 32, 0);
    for (std::size_t i = bits; i-- > 0;) {
        remainder += remainder;  // << 1
        const std::uint32_t bit = (a.limbs_[i / 32] >> (i % 32)) & 1u;
        if (bit) {
            if (remainder.limbs_.empty()) remainder.limbs_.push_back(0);
            remainder.limbs_[0] |= 1u;
        }
        if (compare(remainder, divisor) >= 0) {
            remainder -= divisor;
            quotient.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    if (!remainder.is_zero()) throw std::invalid_argument("BigUint::divide_exact: not divisible");
    quotient.normalize();
    return quotient;
}

BigUint BigUint::random_below(const BigUint& bound, Rng& rng) {
    if (bound.is_zero()) throw std::invalid_argument("BigUint::random_below: zero bound");
    const std::size_t bits = bound.bit_length();
    const std::size_t words = (bits + 31) / 32;
    const std::uint32_t top_mask =
        (bits % 32 == 0) ? 0xFFFFFFFFu : ((1u << (bits % 32)) - 1u);
    for (;;) {
        BigUint r;
        r.limbs_.resize(words);
        for (std::size_t i = 0; i < words; ++i) {
            r.limbs_[i] = static_cast<std::uint32_t>(rng.next_u64() & 0xFFFFFFFFull);
        }
        r.limbs_.back() &= top_mask;
        r.normalize();
        if (compare(r, bound) < 0) return r;
    }
}

double BigUint::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
    }
    return v;
}

std::string BigUint::to_decimal_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        // Short division by 10^9.
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string chunk = std::to_string(rem);
        if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

}  // namespace trustydice
