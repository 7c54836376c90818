#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trustydice/rational.hpp"

namespace trustydice::lottery {

// Vote counts in ballot order. Candidate ids unique, at least one positive.
struct Tally {
    std::vector<std::pair<std::string, std::uint64_t>> entries;
};

void validate_tally(const Tally& tally);

// Exact win probabilities votes^e / sum votes^e. Floats only for display.
struct OddsTable {
    struct Entry {
        std::string id;
        Rational probability;   // reduced
        BigUint weight;         // votes^e, the integer draw threshold
    };
    std::vector<Entry> entries;
    unsigned exponent = 2;
    BigUint denominator;  // sum of weights
};

OddsTable power_odds(const Tally& tally, unsigned exponent = 2);

// Winner drawn by an exact integer threshold over the common denominator.
std::string draw(const OddsTable& odds, std::uint64_t seed);

// Discards a uniformly random half (floor(total/2)) of the pooled ballots.
Tally noise_smooth(const Tally& tally, std::uint64_t seed);

}  // namespace trustydice::lottery
