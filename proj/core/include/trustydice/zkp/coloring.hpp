#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trustydice/zkp/graph.hpp"

namespace trustydice {
class Rng;
}

namespace trustydice::zkp {

// Color per node, values in {1, 2, 3}.
using Coloring = std::vector<int>;

// Every edge bi-chromatic.
bool is_proper(const Graph& g, const Coloring& coloring);

// Nodes of each degree split exactly equally among the three colors.
bool is_balanced(const Graph& g, const Coloring& coloring);

// Copies a proper coloring of component 1 onto components 2 and 3 with the
// color rotations (1 2 3) and (1 3 2); the result is proper and balanced.
// comp1_coloring aligns with three_component_witness(g).comp_nodes[0].
Coloring balance_coloring(const Graph& g, std::span<const int> comp1_coloring);

// All proper 3-colorings of a small graph, lexicographic; up to `limit`.
std::vector<Coloring> proper_colorings(const Graph& g, std::size_t limit);

// Colorings that split each degree class equally, ignoring edges.
// Canonical order; the simulator for the (E2, E3) pair draws from these.
std::uint64_t balanced_coloring_count(const Graph& g);
Coloring balanced_coloring_by_index(const Graph& g, std::uint64_t index);
Coloring random_balanced_coloring(const Graph& g, Rng& rng);

}  // namespace trustydice::zkp
