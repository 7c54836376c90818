#include "trustydice/zkp/protocol.hpp"

#include <algorithm>

#include "trustydice/errors.hpp"

namespace trustydice::zkp {

HonestProver::HonestProver(const Graph& g, Coloring coloring)
    : g_(g), coloring_(std::move(coloring)) {
    if (!is_proper(g_, coloring_)) {
        throw ValidationError("honest prover refuses an improper coloring");
    }
    if (!is_balanced(g_, coloring_)) {
        throw ValidationError("honest prover refuses an unbalanced coloring");
    }
}

EnvelopeTriple HonestProver::round_triple(int, Rng& rng) {
    const auto p = random_permutation(g_.nodes, rng);
    const auto q = random_permutation(g_.directed_edge_count(), rng);
    return build_envelopes(g_, coloring_, p, q);
}

CommittedTriple prover_commit(const Graph& g, const Coloring& coloring, std::uint64_t seed,
                              CommitMode mode) {
    HonestProver prover(g, coloring);
    Rng rng(seed);
    CommittedTriple out;
    out.triple = prover.round_triple(0, rng);
    for (int e = 0; e < 3; ++e) {
        auto [commitment, opening] = commit(mode, serialize_envelope(e + 1, out.triple), rng);
        out.commitments[static_cast<std::size_t>(e)] = std::move(commitment);
        out.openings[static_cast<std::size_t>(e)] = std::move(opening);
    }
    return out;
}

Transcript run_coloring_protocol(const Graph& g, ProverStrategy& prover, int rounds,
                                 std::uint64_t prover_seed, std::uint64_t verifier_seed,
                                 CommitMode mode) {
    if (rounds < 1) throw ValidationError("run_coloring_protocol: rounds must be >= 1");
    Rng prover_rng(prover_seed);
    Rng verifier_rng(verifier_seed);
    Transcript transcript;
    transcript.protocol = "coloring";
    bool all_ok = true;
    for (int round = 0; round < rounds; ++round) {
        const EnvelopeTriple triple = prover.round_triple(round, prover_rng);

        CommitEvent commit_event;
        commit_event.round = round;
        commit_event.mode = mode;
        std::array<Opening, 3> openings;
        for (int e = 0; e < 3; ++e) {
            auto [commitment, opening] =
                commit(mode, serialize_envelope(e + 1, triple), prover_rng);
            commit_event.commitments[static_cast<std::size_t>(e)] = std::move(commitment);
            openings[static_cast<std::size_t>(e)] = std::move(opening);
        }
        transcript.events.push_back(commit_event);

        const int choice = static_cast<int>(verifier_rng.below(3));
        const auto pair = static_cast<PairChoice>(choice);
        transcript.events.push_back(ChallengeEvent{round, choice});

        // Envelope indices opened for this pair, in E1 < E2 < E3 order.
        const int first = (pair == PairChoice::e2e3) ? 1 : 0;
        const int second = (pair == PairChoice::e1e2) ? 1 : 2;

        OpenEvent open_event;
        open_event.round = round;
        open_event.opened = project_pair(triple, pair);
        open_event.openings = {openings[static_cast<std::size_t>(first)],
                               openings[static_cast<std::size_t>(second)]};
        transcript.events.push_back(open_event);

        RoundVerdictEvent verdict;
        verdict.round = round;
        const bool bound_first = verify_opening(
            commit_event.commitments[static_cast<std::size_t>(first)], open_event.openings[0]);
        const bool bound_second = verify_opening(
            commit_event.commitments[static_cast<std::size_t>(second)], open_event.openings[1]);
        if (!bound_first || !bound_second) {
            verdict.ok = false;
            verdict.rule = "binding";
        } else {
            const CheckResult result = check_pair(g, open_event.opened);
            verdict.ok = result.ok;
            verdict.rule = result.rule;
        }
        transcript.events.push_back(verdict);
        all_ok = all_ok && verdict.ok;
    }
    transcript.accepted = all_ok;
    transcript.events.push_back(FinalEvent{all_ok});
    return transcript;
}

Transcript run_coloring_protocol(const Graph& g, const Coloring& coloring, int rounds,
                                 std::uint64_t prover_seed, std::uint64_t verifier_seed,
                                 CommitMode mode) {
    HonestProver prover(g, coloring);
    return run_coloring_protocol(g, prover, rounds, prover_seed, verifier_seed, mode);
}

bool replay_coloring(const Graph& g, const Transcript& transcript) {
    bool all_ok = true;
    const CommitEvent* last_commit = nullptr;
    const ChallengeEvent* last_challenge = nullptr;
    for (const auto& event : transcript.events) {
        if (const auto* commit_event = std::get_if<CommitEvent>(&event)) {
            last_commit = commit_event;
        } else if (const auto* challenge = std::get_if<ChallengeEvent>(&event)) {
            last_challenge = challenge;
        } else if (const auto* open_event = std::get_if<OpenEvent>(&event)) {
            if (last_commit == nullptr || last_challenge == nullptr) return false;
            const auto pair = static_cast<PairChoice>(last_challenge->choice);
            const int first = (pair == PairChoice::e2e3) ? 1 : 0;
            const int second = (pair == PairChoice::e1e2) ? 1 : 2;
            bool ok = verify_opening(last_commit->commitments[static_cast<std::size_t>(first)],
                                     open_event->openings[0]) &&
                      verify_opening(last_commit->commitments[static_cast<std::size_t>(second)],
                                     open_event->openings[1]);
            ok = ok && check_pair(g, open_event->opened).ok;
            all_ok = all_ok && ok;
        }
    }
    return all_ok;
}

namespace {

// Canonical reciprocal structure with uniform ordered color pairs: labels
// (2i, 2i+1) are mates, colored by the ordered pairs (1,2), (2,1), (1,3),
// (3,1), (2,3), (3,2) in blocks of |g|/6. Any proper balanced coloring
// induces exactly this structure up to relabelling.
void canonical_pair_structure(int directed_edges, std::vector<int>& mate,
                              std::vector<int>& color) {
    const int pairs = directed_edges / 2;
    mate.assign(static_cast<std::size_t>(directed_edges), 0);
    color.assign(static_cast<std::size_t>(directed_edges), 0);
    static constexpr int kOrderedPairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    const int per_combo = pairs / 3;
    for (int i = 0; i < pairs; ++i) {
        const int combo = (per_combo == 0) ? 0 : std::min(i / per_combo, 2);
        mate[static_cast<std::size_t>(2 * i)] = 2 * i + 1;
        mate[static_cast<std::size_t>(2 * i + 1)] = 2 * i;
        color[static_cast<std::size_t>(2 * i)] = kOrderedPairs[combo][0];
        color[static_cast<std::size_t>(2 * i + 1)] = kOrderedPairs[combo][1];
    }
}

OpenedPair simulate_e1e2(const Graph& g, std::span<const int> p, std::span<const int> q) {
    // (E1, E2) never mention the coloring: run the honest construction
    // with an arbitrary one.
    const Coloring dummy(static_cast<std::size_t>(g.nodes), 1);
    return project_pair(build_envelopes(g, dummy, p, q), PairChoice::e1e2);
}

OpenedPair simulate_e1e3(const Graph& g, std::span<const int> p, std::span<const int> relabel) {
    std::vector<int> mate;
    std::vector<int> color;
    canonical_pair_structure(g.directed_edge_count(), mate, color);
    OpenedPair opened;
    opened.which = PairChoice::e1e3;
    EnvelopeE1 e1;
    e1.p.assign(p.begin(), p.end());
    e1.r.assign(mate.size(), 0);
    std::vector<int> e3(color.size(), 0);
    for (std::size_t j = 0; j < mate.size(); ++j) {
        e1.r[static_cast<std::size_t>(relabel[j])] = relabel[static_cast<std::size_t>(mate[j])];
        e3[static_cast<std::size_t>(relabel[j])] = color[j];
    }
    opened.e1 = std::move(e1);
    opened.e3 = std::move(e3);
    return opened;
}

OpenedPair simulate_e2e3(const Graph& g, const Coloring& balanced, std::span<const int> p,
                         std::span<const int> q) {
    return project_pair(build_envelopes(g, balanced, p, q), PairChoice::e2e3);
}

}  // namespace

OpenedPair simulate_pair(const Graph& g, PairChoice pair, std::uint64_t seed) {
    Rng rng(seed);
    switch (pair) {
        case PairChoice::e1e2: {
            const auto p = random_permutation(g.nodes, rng);
            const auto q = random_permutation(g.directed_edge_count(), rng);
            return simulate_e1e2(g, p, q);
        }
        case PairChoice::e1e3: {
            const auto p = random_permutation(g.nodes, rng);
            const auto relabel = random_permutation(g.directed_edge_count(), rng);
            return simulate_e1e3(g, p, relabel);
        }
        case PairChoice::e2e3: {
            const auto coloring = random_balanced_coloring(g, rng);
            const auto p = random_permutation(g.nodes, rng);
            const auto q = random_permutation(g.directed_edge_count(), rng);
            return simulate_e2e3(g, coloring, p, q);
        }
    }
    throw ValidationError("simulate_pair: bad pair");
}

std::uint64_t honest_pair_space(const Graph& g) {
    return factorial(g.nodes) * factorial(g.directed_edge_count());
}

OpenedPair honest_pair_by_index(const Graph& g, const Coloring& coloring, PairChoice pair,
                                std::uint64_t index) {
    const std::uint64_t q_space = factorial(g.directed_edge_count());
    const auto p = permutation_from_index(g.nodes, index / q_space);
    const auto q = permutation_from_index(g.directed_edge_count(), index % q_space);
    return project_pair(build_envelopes(g, coloring, p, q), pair);
}

std::uint64_t simulated_pair_space(const Graph& g, PairChoice pair) {
    const std::uint64_t base = honest_pair_space(g);
    if (pair == PairChoice::e2e3) return balanced_coloring_count(g) * base;
    if (pair == PairChoice::e1e3) return factorial(g.nodes) * factorial(g.directed_edge_count());
    return base;
}

OpenedPair simulated_pair_by_index(const Graph& g, PairChoice pair, std::uint64_t index) {
    const std::uint64_t q_space = factorial(g.directed_edge_count());
    switch (pair) {
        case PairChoice::e1e2: {
            const auto p = permutation_from_index(g.nodes, index / q_space);
            const auto q = permutation_from_index(g.directed_edge_count(), index % q_space);
            return simulate_e1e2(g, p, q);
        }
        case PairChoice::e1e3: {
            const auto p = permutation_from_index(g.nodes, index / q_space);
            const auto relabel = permutation_from_index(g.directed_edge_count(), index % q_space);
            return simulate_e1e3(g, p, relabel);
        }
        case PairChoice::e2e3: {
            const std::uint64_t base = factorial(g.nodes) * q_space;
            const auto coloring = balanced_coloring_by_index(g, index / base);
            const std::uint64_t rest = index % base;
            const auto p = permutation_from_index(g.nodes, rest / q_space);
            const auto q = permutation_from_index(g.directed_edge_count(), rest % q_space);
            return simulate_e2e3(g, coloring, p, q);
        }
    }
    throw ValidationError("simulated_pair_by_index: bad pair");
}

}  // namespace trustydice::zkp
