#include "trustydice/zkp/exactness.hpp"

#include <array>
#include <string>
#include <unordered_map>

#include "trustydice/errors.hpp"

namespace trustydice::zkp {

namespace {

std::string opened_key(const OpenedPair& opened) {
    const auto bytes = serialize_opened(opened);
    return std::string(bytes.begin(), bytes.end());
}

std::vector<std::vector<int>> all_permutations(int n) {
    const std::uint64_t count = factorial(n);
    std::vector<std::vector<int>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(permutation_from_index(n, i));
    return out;
}

}  // namespace

std::vector<PairExactnessReport> zk_exactness_report(const Graph& g, const Coloring& coloring_a,
                                                     const Coloring& coloring_b,
                                                     std::uint64_t budget) {
    if (!is_proper(g, coloring_a) || !is_balanced(g, coloring_a) ||
        !is_proper(g, coloring_b) || !is_balanced(g, coloring_b)) {
        throw ValidationError("zk_exactness_report: colorings must be proper and balanced");
    }
    const std::uint64_t honest_space = honest_pair_space(g);
    const std::uint64_t sim23_space = simulated_pair_space(g, PairChoice::e2e3);
    if (honest_space > budget || sim23_space > budget) {
        throw CapacityError("zk_exactness_report: enumeration space exceeds budget " +
                            std::to_string(budget));
    }

    const auto node_perms = all_permutations(g.nodes);
    const auto edge_perms = all_permutations(g.directed_edge_count());
    const std::uint64_t coloring_count = balanced_coloring_count(g);

    std::vector<PairExactnessReport> reports;
    for (PairChoice pair : {PairChoice::e1e2, PairChoice::e1e3, PairChoice::e2e3}) {
        // key -> {count under A, count under B, simulator count}
        std::unordered_map<std::string, std::array<std::uint64_t, 3>> table;
        table.reserve(1 << 16);

        for (const auto& p : node_perms) {
            for (const auto& q : edge_perms) {
                ++table[opened_key(project_pair(build_envelopes(g, coloring_a, p, q), pair))][0];
                ++table[opened_key(project_pair(build_envelopes(g, coloring_b, p, q), pair))][1];
            }
        }

        std::uint64_t sim_space = 0;
        switch (pair) {
            case PairChoice::e1e2:
                sim_space = honest_space;
                for (std::uint64_t i = 0; i < sim_space; ++i) {
                    ++table[opened_key(simulated_pair_by_index(g, pair, i))][2];
                }
                break;
            case PairChoice::e1e3:
                sim_space = simulated_pair_space(g, pair);
                for (std::uint64_t i = 0; i < sim_space; ++i) {
                    ++table[opened_key(simulated_pair_by_index(g, pair, i))][2];
                }
                break;
            case PairChoice::e2e3: {
                sim_space = sim23_space;
                for (std::uint64_t ci = 0; ci < coloring_count; ++ci) {
                    const Coloring coloring = balanced_coloring_by_index(g, ci);
                    for (const auto& p : node_perms) {
                        for (const auto& q : edge_perms) {
                            ++table[opened_key(
                                project_pair(build_envelopes(g, coloring, p, q), pair))][2];
                        }
                    }
                }
                break;
            }
        }

        PairExactnessReport report;
        report.pair = pair;
        report.honest_space = honest_space;
        report.simulator_space = sim_space;
        report.distinct_outcomes = table.size();
        report.colorings_identical = true;
        report.simulator_identical = true;
        for (const auto& [key, counts] : table) {
            if (counts[0] != counts[1]) report.colorings_identical = false;
            // Normalized equality: count_sim / sim_space == count_a / honest_space.
            if (counts[2] * honest_space != counts[0] * sim_space) {
                report.simulator_identical = false;
            }
        }
        reports.push_back(report);
    }
    return reports;
}

}  // namespace trustydice::zkp
