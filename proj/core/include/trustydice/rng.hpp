#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace trustydice {

// splitmix64 (Steele, Lea, Flood). The project's only entropy primitive:
// every random draw anywhere in the toolkit flows through one of these
// streams, so runs are reproducible from a single 64-bit seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) by masked rejection. bound > 0.
    std::uint64_t below(std::uint64_t bound);

    // Uniform double in (0, 1], 53 bits.
    double uniform01();

    // Box-Muller pair of independent standard normals.
    std::pair<double, double> normal_pair();

    bool coin() { return (next_u64() & 1u) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::uint64_t state_;
};

// splitmix64 finalizer, used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

// Stream seed for sub-task `counter` of `master`. Pure function of both, so
// trials can run in any order (or in parallel) without changing any draw.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter);

// Uniform permutation of [0, n) via Fisher-Yates.
std::vector<int> random_permutation(int n, Rng& rng);

// Lehmer-code unranking: index in [0, n!) -> permutation of [0, n).
// Canonical enumeration order for exhaustive protocol tests. n <= 20.
std::vector<int> permutation_from_index(int n, std::uint64_t index);

std::uint64_t factorial(int n);

}  // namespace trustydice
