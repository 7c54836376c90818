#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trustydice::zkp {

// Undirected graph stored as a sorted set of directed edges closed under
// reversal: (a, b) present iff (b, a) present. No self-loops.
struct Graph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;  // directed, sorted ascending

    // Builds from undirected edge pairs, closing under reversal.
    static Graph undirected(int nodes, std::span<const std::pair<int, int>> undirected_edges);

    bool has_edge(int a, int b) const;
    int directed_edge_count() const { return static_cast<int>(edges.size()); }
    int undirected_edge_count() const { return directed_edge_count() / 2; }
    // Position of directed edge (a, b) in `edges`, or -1.
    int edge_index(int a, int b) const;

    std::vector<int> degrees() const;
    std::vector<int> component_ids() const;  // 0-based component id per node
    int component_count() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.nodes == b.nodes && a.edges == b.edges;
    }
};

// Relabels nodes: edge (a, b) -> (perm[a], perm[b]).
Graph apply_permutation(const Graph& g, std::span<const int> perm);

// Brute-force isomorphism search with degree pruning; desk-scale graphs.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// Disjoint union of three copies of a connected graph, copy c occupying
// nodes [c*v, (c+1)*v). The block layout is the retained witness.
Graph make_three_component(const Graph& g0);

struct ThreeComponentWitness {
    std::array<std::vector<int>, 3> comp_nodes;  // ascending node ids per component
    std::vector<int> iso12;  // comp_nodes[0][i] -> matching node of component 2
    std::vector<int> iso13;  // comp_nodes[0][i] -> matching node of component 3
};

// Verifies the 3-isomorphic-components shape and returns the witnesses.
ThreeComponentWitness three_component_witness(const Graph& g);

// Subgraph induced by `keep` (relabelled 0..keep.size()-1, ascending).
Graph induced_subgraph(const Graph& g, std::span<const int> keep);

}  // namespace trustydice::zkp
