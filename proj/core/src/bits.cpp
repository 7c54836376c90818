#include "trustydice/bits.hpp"

#include "trustydice/errors.hpp"

namespace trustydice {

std::uint32_t parse_bits(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n) {
        throw ValidationError("bitstring '" + s + "' is not " + std::to_string(n) + " bits");
    }
    std::uint32_t x = 0;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw ValidationError("bitstring '" + s + "' has non-binary character");
        }
        x = (x << 1) | static_cast<std::uint32_t>(c == '1');
    }
    return x;
}

std::string format_bits(std::uint32_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((x >> i) & 1u) s[static_cast<std::size_t>(n - 1 - i)] = '1';
    }
    return s;
}

}  // namespace trustydice
