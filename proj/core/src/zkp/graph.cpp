#include "trustydice/zkp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trustydice/errors.hpp"

namespace trustydice::zkp {

Graph Graph::undirected(int nodes, std::span<const std::pair<int, int>> undirected_edges) {
    if (nodes < 0) throw ValidationError("graph: negative node count");
    Graph g;
    g.nodes = nodes;
    g.edges.reserve(undirected_edges.size() * 2);
    for (const auto& [a, b] : undirected_edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes) {
            throw ValidationError("graph: edge endpoint out of range");
        }
        if (a == b) throw ValidationError("graph: self-loop not allowed");
        g.edges.emplace_back(a, b);
        g.edges.emplace_back(b, a);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

bool Graph::has_edge(int a, int b) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int Graph::edge_index(int a, int b) const {
    const auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    if (it == edges.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(nodes), 0);
    for (const auto& [a, b] : edges) ++deg[static_cast<std::size_t>(a)];
    return deg;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(static_cast<std::size_t>(nodes), -1);
    int next = 0;
    std::vector<int> stack;
    for (int start = 0; start < nodes; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        comp[static_cast<std::size_t>(start)] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, -1));
            for (; it != edges.end() && it->first == u; ++it) {
                if (comp[static_cast<std::size_t>(it->second)] == -1) {
                    comp[static_cast<std::size_t>(it->second)] = next;
                    stack.push_back(it->second);
                }
            }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    const auto comp = component_ids();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.nodes) {
        throw ValidationError("apply_permutation: permutation size mismatch");
    }
    Graph out;
    out.nodes = g.nodes;
    out.edges.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        out.edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& deg_a,
                        const std::vector<int>& deg_b, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
    if (next == a.nodes) return true;
    for (int cand = 0; cand < b.nodes; ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        if (deg_a[static_cast<std::size_t>(next)] != deg_b[static_cast<std::size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (a.has_edge(next, prev) != b.has_edge(cand, map[static_cast<std::size_t>(prev)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = cand;
        used[static_cast<std::size_t>(cand)] = true;
        if (extend_isomorphism(a, b, deg_a, deg_b, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.nodes != b.nodes || a.edges.size() != b.edges.size()) return std::nullopt;
    auto deg_a = a.degrees();
    auto deg_b = b.degrees();
    auto sorted_a = deg_a;
    auto sorted_b = deg_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
    std::vector<int> map(static_cast<std::size_t>(a.nodes), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.nodes), false);
    if (extend_isomorphism(a, b, deg_a, deg_b, map, used, 0)) return map;
    return std::nullopt;
}

Graph make_three_component(const Graph& g0) {
    if (g0.nodes == 0) throw ValidationError("make_three_component: empty graph");
    if (g0.component_count() != 1) {
        throw ValidationError("make_three_component: input must be connected");
    }
    Graph g;
    g.nodes = 3 * g0.nodes;
    g.edges.reserve(3 * g0.edges.size());
    for (int copy = 0; copy < 3; ++copy) {
        const int offset = copy * g0.nodes;
        for (const auto& [a, b] : g0.edges) {
            g.edges.emplace_back(a + offset, b + offset);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

ThreeComponentWitness three_component_witness(const Graph& g) {
    const auto comp = g.component_ids();
    const int count = g.component_count();
    if (count != 3) {
        throw ValidationError("graph has " + std::to_string(count) +
                              " connected components, need exactly 3");
    }
    ThreeComponentWitness witness;
    for (int u = 0; u < g.nodes; ++u) {
        witness.comp_nodes[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])].push_back(u);
    }
    const Graph c1 = induced_subgraph(g, witness.comp_nodes[0]);
    const Graph c2 = induced_subgraph(g, witness.comp_nodes[1]);
    const Graph c3 = induced_subgraph(g, witness.comp_nodes[2]);
    const auto iso12 = find_isomorphism(c1, c2);
    const auto iso13 = find_isomorphism(c1, c3);
    if (!iso12 || !iso13) {
        throw ValidationError("graph components are not pairwise isomorphic");
    }
    witness.iso12.resize(witness.comp_nodes[0].size());
    witness.iso13.resize(witness.comp_nodes[0].size());
    for (std::size_t i = 0; i < witness.comp_nodes[0].size(); ++i) {
        witness.iso12[i] = witness.comp_nodes[1][static_cast<std::size_t>((*iso12)[i])];
        witness.iso13[i] = witness.comp_nodes[2][static_cast<std::size_t>((*iso13)[i])];
    }
    return witness;
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
    std::vector<int> index(static_cast<std::size_t>(g.nodes), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    Graph out;
    out.nodes = static_cast<int>(keep.size());
    for (const auto& [a, b] : g.edges) {
        const int ia = index[static_cast<std::size_t>(a)];
        const int ib = index[static_cast<std::size_t>(b)];
        if (ia >= 0 && ib >= 0) out.edges.emplace_back(ia, ib);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace trustydice::zkp
