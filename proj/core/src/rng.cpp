#include "trustydice/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trustydice {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    if (bound == 1) return 0;
    const int bits = std::bit_width(bound - 1);
    const std::uint64_t mask = (bits >= 64) ? ~0ull : ((1ull << bits) - 1);
    for (;;) {
        const std::uint64_t r = next_u64() & mask;
        if (r < bound) return r;
    }
}

double Rng::uniform01() {
    // (next >> 11) in [0, 2^53); +1 shifts the support to (0, 1].
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::pair<double, double> Rng::normal_pair() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    return mix64(mix64(master + 0x9E3779B97F4A7C15ull) ^
                 mix64(counter * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    rng.shuffle(p);
    return p;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> permutation_from_index(int n, std::uint64_t index) {
    if (n < 0 || n > 20) throw std::invalid_argument("permutation_from_index: n out of range");
    // Factorial-base digits, most significant first.
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        digits[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::uint64_t>(n - pos));
        index /= static_cast<std::uint64_t>(n - pos);
    }
    if (index != 0) throw std::invalid_argument("permutation_from_index: index >= n!");
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        const int d = digits[static_cast<std::size_t>(pos)];
        perm.push_back(pool[static_cast<std::size_t>(d)]);
        pool.erase(pool.begin() + d);
    }
    return perm;
}

}  // namespace trustydice
