#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustydice/zkp/protocol.hpp"

namespace trustydice::zkp {

// Exhaustive distribution comparison for one envelope pair: the honest
// prover's opened-pair distribution under two colorings, against each other
// and against the simulator's. Counts are exact integers; "identical" means
// multiset equality after cross-multiplying the space sizes.
struct PairExactnessReport {
    PairChoice pair = PairChoice::e1e2;
    std::uint64_t honest_space = 0;
    std::uint64_t simulator_space = 0;
    std::uint64_t distinct_outcomes = 0;
    bool colorings_identical = false;
    bool simulator_identical = false;
};

std::vector<PairExactnessReport> zk_exactness_report(
    const Graph& g, const Coloring& coloring_a, const Coloring& coloring_b,
    std::uint64_t budget = 10'000'000);

}  // namespace trustydice::zkp
