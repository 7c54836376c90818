#include "trustydice/zkp/envelopes.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "trustydice/errors.hpp"

namespace trustydice::zkp {

const char* pair_name(PairChoice pair) {
    switch (pair) {
        case PairChoice::e1e2: return "e1e2";
        case PairChoice::e1e3: return "e1e3";
        case PairChoice::e2e3: return "e2e3";
    }
    return "?";
}

EnvelopeTriple build_envelopes(const Graph& g, const Coloring& coloring,
                               std::span<const int> p, std::span<const int> q) {
    const std::size_t edge_count = g.edges.size();
    if (static_cast<int>(p.size()) != g.nodes || q.size() != edge_count) {
        throw ValidationError("build_envelopes: enumeration size mismatch");
    }
    if (coloring.size() != static_cast<std::size_t>(g.nodes)) {
        throw ValidationError("build_envelopes: coloring size mismatch");
    }
    EnvelopeTriple triple;
    triple.e1.p.assign(p.begin(), p.end());
    triple.e1.r.assign(edge_count, -1);
    triple.e2.assign(edge_count, -1);
    triple.e3.assign(edge_count, -1);
    for (std::size_t i = 0; i < edge_count; ++i) {
        const auto [a, b] = g.edges[i];
        const int reverse = g.edge_index(b, a);
        const std::size_t label = static_cast<std::size_t>(q[i]);
        triple.e1.r[label] = q[static_cast<std::size_t>(reverse)];
        triple.e2[label] = p[static_cast<std::size_t>(a)];
        triple.e3[label] = coloring[static_cast<std::size_t>(a)];
    }
    return triple;
}

OpenedPair project_pair(const EnvelopeTriple& triple, PairChoice pair) {
    OpenedPair opened;
    opened.which = pair;
    if (pair == PairChoice::e1e2 || pair == PairChoice::e1e3) opened.e1 = triple.e1;
    if (pair == PairChoice::e1e2 || pair == PairChoice::e2e3) opened.e2 = triple.e2;
    if (pair == PairChoice::e1e3 || pair == PairChoice::e2e3) opened.e3 = triple.e3;
    return opened;
}

namespace {

bool is_permutation_of_range(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool is_fixed_point_free_involution(const std::vector<int>& r) {
    const int len = static_cast<int>(r.size());
    for (int l = 0; l < len; ++l) {
        const int v = r[static_cast<std::size_t>(l)];
        if (v < 0 || v >= len || v == l) return false;
        if (r[static_cast<std::size_t>(v)] != l) return false;
    }
    return true;
}

CheckResult fail(const char* rule) { return {false, rule}; }

// (E1, E2): the labelled edge structure must be exactly the image of g
// under p, each label accounting for one directed edge.
CheckResult check_e1e2(const Graph& g, const EnvelopeE1& e1, const std::vector<int>& e2) {
    if (!is_permutation_of_range(e1.p, g.nodes)) return fail("p-not-bijection");
    if (e1.r.size() != g.edges.size() || !is_fixed_point_free_involution(e1.r)) {
        return fail("r-not-involution");
    }
    if (e2.size() != g.edges.size()) return fail("e2-size");
    for (int v : e2) {
        if (v < 0 || v >= g.nodes) return fail("e2-range");
    }
    std::vector<std::pair<int, int>> image;
    image.reserve(e2.size());
    for (std::size_t label = 0; label < e2.size(); ++label) {
        image.emplace_back(e2[label], e2[static_cast<std::size_t>(e1.r[label])]);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        return fail("edge-image-duplicate");
    }
    std::vector<std::pair<int, int>> expected;
    expected.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        expected.emplace_back(e1.p[static_cast<std::size_t>(a)], e1.p[static_cast<std::size_t>(b)]);
    }
    std::sort(expected.begin(), expected.end());
    if (image != expected) return fail("edge-image-mismatch");
    return {};
}

// (E1, E3): reciprocal labels carry distinct colors, and the ordered color
// pairs over reciprocal label pairs are exactly uniform -- the one fact a
// balanced coloring forces on this view (each ordered pair |g|/6 times).
CheckResult check_e1e3(const Graph& g, const EnvelopeE1& e1, const std::vector<int>& e3) {
    if (!is_permutation_of_range(e1.p, g.nodes)) return fail("p-not-bijection");
    if (e1.r.size() != g.edges.size() || !is_fixed_point_free_involution(e1.r)) {
        return fail("r-not-involution");
    }
    if (e3.size() != g.edges.size()) return fail("e3-size");
    for (int c : e3) {
        if (c < 1 || c > 3) return fail("e3-range");
    }
    std::array<std::array<int, 4>, 4> pair_counts{};
    for (std::size_t label = 0; label < e3.size(); ++label) {
        const int mate_color = e3[static_cast<std::size_t>(e1.r[label])];
        if (e3[label] == mate_color) return fail("reciprocal-colors-equal");
        ++pair_counts[static_cast<std::size_t>(e3[label])][static_cast<std::size_t>(mate_color)];
    }
    const int per_pair = static_cast<int>(g.edges.size()) / 6;
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            if (a == b) continue;
            if (pair_counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != per_pair) {
                return fail("color-pair-counts");
            }
        }
    }
    return {};
}

// (E2, E3): labels sharing a source share a color; fiber sizes reproduce
// g's degree sequence; each visible degree class splits equally by color.
CheckResult check_e2e3(const Graph& g, const std::vector<int>& e2, const std::vector<int>& e3) {
    if (e2.size() != g.edges.size()) return fail("e2-size");
    if (e3.size() != g.edges.size()) return fail("e3-size");
    for (int v : e2) {
        if (v < 0 || v >= g.nodes) return fail("e2-range");
    }
    for (int c : e3) {
        if (c < 1 || c > 3) return fail("e3-range");
    }
    std::vector<int> fiber_size(static_cast<std::size_t>(g.nodes), 0);
    std::vector<int> fiber_color(static_cast<std::size_t>(g.nodes), 0);
    for (std::size_t label = 0; label < e2.size(); ++label) {
        const std::size_t source = static_cast<std::size_t>(e2[label]);
        ++fiber_size[source];
        if (fiber_color[source] == 0) {
            fiber_color[source] = e3[label];
        } else if (fiber_color[source] != e3[label]) {
            return fail("source-color-conflict");
        }
    }
    std::vector<int> seen_degrees;
    std::vector<int> expected_degrees;
    for (int d : fiber_size) {
        if (d > 0) seen_degrees.push_back(d);
    }
    for (int d : g.degrees()) {
        if (d > 0) expected_degrees.push_back(d);
    }
    std::sort(seen_degrees.begin(), seen_degrees.end());
    std::sort(expected_degrees.begin(), expected_degrees.end());
    if (seen_degrees != expected_degrees) return fail("degree-sequence-mismatch");
    std::map<int, std::array<int, 4>> class_counts;
    for (int u = 0; u < g.nodes; ++u) {
        const int d = fiber_size[static_cast<std::size_t>(u)];
        if (d > 0) ++class_counts[d][static_cast<std::size_t>(fiber_color[static_cast<std::size_t>(u)])];
    }
    for (const auto& [degree, counts] : class_counts) {
        if (counts[1] != counts[2] || counts[2] != counts[3]) return fail("degree-color-split");
    }
    return {};
}

}  // namespace

CheckResult check_pair(const Graph& g, const OpenedPair& opened) {
    switch (opened.which) {
        case PairChoice::e1e2:
            if (!opened.e1 || !opened.e2) throw ValidationError("check_pair: missing envelope");
            return check_e1e2(g, *opened.e1, *opened.e2);
        case PairChoice::e1e3:
            if (!opened.e1 || !opened.e3) throw ValidationError("check_pair: missing envelope");
            return check_e1e3(g, *opened.e1, *opened.e3);
        case PairChoice::e2e3:
            if (!opened.e2 || !opened.e3) throw ValidationError("check_pair: missing envelope");
            return check_e2e3(g, *opened.e2, *opened.e3);
    }
    throw ValidationError("check_pair: bad pair");
}

std::optional<Coloring> extract_coloring(const Graph& g, const EnvelopeTriple& triple) {
    for (PairChoice pair : {PairChoice::e1e2, PairChoice::e1e3, PairChoice::e2e3}) {
        if (!check_pair(g, project_pair(triple, pair)).ok) return std::nullopt;
    }
    // All checks passed: fibers are consistently colored and p is a
    // bijection, so C(a) = color of fiber p(a) is well defined.
    std::vector<int> fiber_color(static_cast<std::size_t>(g.nodes), 0);
    for (std::size_t label = 0; label < triple.e2.size(); ++label) {
        fiber_color[static_cast<std::size_t>(triple.e2[label])] = triple.e3[label];
    }
    Coloring coloring(static_cast<std::size_t>(g.nodes), 0);
    int spare = 0;  // isolated nodes: round-robin keeps the degree-0 class balanced
    for (int a = 0; a < g.nodes; ++a) {
        const int color = fiber_color[static_cast<std::size_t>(triple.e1.p[static_cast<std::size_t>(a)])];
        coloring[static_cast<std::size_t>(a)] = (color != 0) ? color : (1 + (spare++ % 3));
    }
    return coloring;
}

namespace {

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

void append_vec(std::vector<std::uint8_t>& out, const std::vector<int>& v) {
    append_u32(out, static_cast<std::uint32_t>(v.size()));
    for (int x : v) append_u32(out, static_cast<std::uint32_t>(x));
}

}  // namespace

std::vector<std::uint8_t> serialize_envelope(int which, const EnvelopeTriple& triple) {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(which));
    switch (which) {
        case 1:
            append_vec(out, triple.e1.p);
            append_vec(out, triple.e1.r);
            break;
        case 2:
            append_vec(out, triple.e2);
            break;
        case 3:
            append_vec(out, triple.e3);
            break;
        default:
            throw ValidationError("serialize_envelope: which must be 1..3");
    }
    return out;
}

std::vector<std::uint8_t> serialize_opened(const OpenedPair& opened) {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(opened.which));
    if (opened.e1) {
        append_vec(out, opened.e1->p);
        append_vec(out, opened.e1->r);
    }
    if (opened.e2) append_vec(out, *opened.e2);
    if (opened.e3) append_vec(out, *opened.e3);
    return out;
}

}  // namespace trustydice::zkp
