#include "trustydice/zkp/coloring.hpp"

#include <algorithm>
#include <map>

#include "trustydice/errors.hpp"
#include "trustydice/rng.hpp"

namespace trustydice::zkp {

namespace {

void check_coloring_shape(const Graph& g, const Coloring& coloring) {
    if (static_cast<int>(coloring.size()) != g.nodes) {
        throw ValidationError("coloring: size mismatch with graph");
    }
    for (int c : coloring) {
        if (c < 1 || c > 3) throw ValidationError("coloring: colors must be in {1,2,3}");
    }
}

// degree -> ascending list of nodes with that degree.
std::map<int, std::vector<int>> degree_classes(const Graph& g) {
    std::map<int, std::vector<int>> classes;
    const auto deg = g.degrees();
    for (int u = 0; u < g.nodes; ++u) classes[deg[static_cast<std::size_t>(u)]].push_back(u);
    return classes;
}

// Distinct color arrangements of one degree class, in std::next_permutation
// order starting from the sorted pattern (1..1 2..2 3..3).
std::vector<std::vector<int>> class_patterns(std::size_t size) {
    std::vector<int> pattern(size);
    for (std::size_t i = 0; i < size; ++i) pattern[i] = 1 + static_cast<int>(i / (size / 3));
    std::vector<std::vector<int>> out;
    do {
        out.push_back(pattern);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return out;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& coloring) {
    check_coloring_shape(g, coloring);
    for (const auto& [a, b] : g.edges) {
        if (coloring[static_cast<std::size_t>(a)] == coloring[static_cast<std::size_t>(b)]) {
            return false;
        }
    }
    return true;
}

bool is_balanced(const Graph& g, const Coloring& coloring) {
    check_coloring_shape(g, coloring);
    for (const auto& [degree, members] : degree_classes(g)) {
        int counts[4] = {0, 0, 0, 0};
        for (int u : members) ++counts[coloring[static_cast<std::size_t>(u)]];
        if (counts[1] != counts[2] || counts[2] != counts[3]) return false;
    }
    return true;
}

Coloring balance_coloring(const Graph& g, std::span<const int> comp1_coloring) {
    const ThreeComponentWitness witness = three_component_witness(g);
    if (comp1_coloring.size() != witness.comp_nodes[0].size()) {
        throw ValidationError("balance_coloring: coloring size != component-1 size");
    }
    Coloring coloring(static_cast<std::size_t>(g.nodes), 0);
    auto rotate = [](int color, int by) { return 1 + (color - 1 + by) % 3; };
    for (std::size_t i = 0; i < comp1_coloring.size(); ++i) {
        const int c = comp1_coloring[i];
        if (c < 1 || c > 3) throw ValidationError("balance_coloring: colors must be in {1,2,3}");
        coloring[static_cast<std::size_t>(witness.comp_nodes[0][i])] = c;
        coloring[static_cast<std::size_t>(witness.iso12[i])] = rotate(c, 1);
        coloring[static_cast<std::size_t>(witness.iso13[i])] = rotate(c, 2);
    }
    const Graph c1 = induced_subgraph(g, witness.comp_nodes[0]);
    std::vector<int> c1_colors(comp1_coloring.begin(), comp1_coloring.end());
    if (!is_proper(c1, c1_colors)) {
        throw ValidationError("balance_coloring: component-1 coloring is not proper");
    }
    return coloring;
}

std::vector<Coloring> proper_colorings(const Graph& g, std::size_t limit) {
    std::vector<Coloring> out;
    Coloring coloring(static_cast<std::size_t>(g.nodes), 1);
    for (;;) {
        if (is_proper(g, coloring)) {
            out.push_back(coloring);
            if (out.size() >= limit) break;
        }
        int pos = g.nodes - 1;
        while (pos >= 0 && coloring[static_cast<std::size_t>(pos)] == 3) {
            coloring[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++coloring[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::uint64_t balanced_coloring_count(const Graph& g) {
    std::uint64_t count = 1;
    for (const auto& [degree, members] : degree_classes(g)) {
        if (members.size() % 3 != 0) return 0;
        count *= static_cast<std::uint64_t>(class_patterns(members.size()).size());
    }
    return count;
}

Coloring balanced_coloring_by_index(const Graph& g, std::uint64_t index) {
    Coloring coloring(static_cast<std::size_t>(g.nodes), 0);
    for (const auto& [degree, members] : degree_classes(g)) {
        if (members.size() % 3 != 0) {
            throw ValidationError("balanced colorings need 3-divisible degree classes");
        }
        const auto patterns = class_patterns(members.size());
        const auto& pattern = patterns[index % patterns.size()];
        index /= patterns.size();
        for (std::size_t i = 0; i < members.size(); ++i) {
            coloring[static_cast<std::size_t>(members[i])] = pattern[i];
        }
    }
    if (index != 0) throw ValidationError("balanced_coloring_by_index: index out of range");
    return coloring;
}

Coloring random_balanced_coloring(const Graph& g, Rng& rng) {
    Coloring coloring(static_cast<std::size_t>(g.nodes), 0);
    for (const auto& [degree, members] : degree_classes(g)) {
        if (members.size() % 3 != 0) {
            throw ValidationError("balanced colorings need 3-divisible degree classes");
        }
        std::vector<int> pattern(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            pattern[i] = 1 + static_cast<int>(i / (members.size() / 3));
        }
        rng.shuffle(pattern);
        for (std::size_t i = 0; i < members.size(); ++i) {
            coloring[static_cast<std::size_t>(members[i])] = pattern[i];
        }
    }
    return coloring;
}

}  // namespace trustydice::zkp
