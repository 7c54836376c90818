#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trustydice/zkp/coloring.hpp"
#include "trustydice/zkp/graph.hpp"

namespace trustydice::zkp {

// E1: the node permutation p plus the reciprocal-edge involution r on
// permuted labels, r[q(a,b)] = q(b,a).
struct EnvelopeE1 {
    std::vector<int> p;
    std::vector<int> r;
};

// E2: label -> permuted source node, e2[q(a,b)] = p(a).
// E3: label -> source color, e3[q(a,b)] = C(a).
struct EnvelopeTriple {
    EnvelopeE1 e1;
    std::vector<int> e2;
    std::vector<int> e3;
};

enum class PairChoice { e1e2 = 0, e1e3 = 1, e2e3 = 2 };

const char* pair_name(PairChoice pair);

struct OpenedPair {
    PairChoice which = PairChoice::e1e2;
    std::optional<EnvelopeE1> e1;
    std::optional<std::vector<int>> e2;
    std::optional<std::vector<int>> e3;
};

// Builds the three envelopes from node enumeration p and edge enumeration q
// (q[i] = label of g.edges[i]). No validity check on the coloring here; the
// honest prover validates, cheating provers may feed anything.
EnvelopeTriple build_envelopes(const Graph& g, const Coloring& coloring,
                               std::span<const int> p, std::span<const int> q);

OpenedPair project_pair(const EnvelopeTriple& triple, PairChoice pair);

struct CheckResult {
    bool ok = true;
    std::string rule;  // failing rule id when !ok
};

// Consistency rules per envelope pair; everything cross-checked against the
// public graph only (degree sequence, edge image).
CheckResult check_pair(const Graph& g, const OpenedPair& opened);

// Composes e2, e3 through p into a node coloring of g, provided the triple
// passes all three pair checks. This is the soundness extractor.
std::optional<Coloring> extract_coloring(const Graph& g, const EnvelopeTriple& triple);

// Canonical byte serialization (commitment payloads and multiset keys).
std::vector<std::uint8_t> serialize_envelope(int which, const EnvelopeTriple& triple);
std::vector<std::uint8_t> serialize_opened(const OpenedPair& opened);

}  // namespace trustydice::zkp
