#include "trustydice/zkp/iso.hpp"

#include "trustydice/errors.hpp"
#include "trustydice/rng.hpp"

namespace trustydice::zkp {

namespace {

bool is_permutation_of_range(std::span<const int> p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool verify_iso_answer(const Graph& h, const Graph& target, const std::vector<int>& mapping) {
    if (h.nodes != target.nodes) return false;
    if (!is_permutation_of_range(mapping, target.nodes)) return false;
    return apply_permutation(h, mapping) == target;
}

std::vector<int> inverse_permutation(std::span<const int> p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    }
    return inv;
}

std::vector<int> compose(std::span<const int> inner, std::span<const int> outer) {
    // result[x] = outer[inner[x]]
    std::vector<int> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        out[i] = outer[static_cast<std::size_t>(inner[i])];
    }
    return out;
}

Transcript run_iso_rounds(const Graph& g1, const Graph& g2, const std::vector<int>* witness,
                          int rounds, Rng& prover_rng, Rng& verifier_rng) {
    if (rounds < 1) throw ValidationError("iso protocol: rounds must be >= 1");
    Transcript transcript;
    transcript.protocol = "isomorphism";
    bool all_ok = true;
    for (int round = 0; round < rounds; ++round) {
        // Without a witness the best strategy is to guess the challenge
        // and relabel the guessed side.
        const int guess = (witness != nullptr) ? 1 : (1 + static_cast<int>(prover_rng.below(2)));
        const Graph& base = (guess == 1) ? g1 : g2;
        const auto relabel = random_permutation(base.nodes, prover_rng);
        const Graph h = apply_permutation(base, relabel);
        transcript.events.push_back(GraphSentEvent{round, h});

        const int challenge = 1 + static_cast<int>(verifier_rng.below(2));
        transcript.events.push_back(ChallengeEvent{round, challenge});

        // h = relabel(base), so h -> base is relabel^-1; h -> g2 composes
        // the witness on top.
        std::vector<int> answer = inverse_permutation(relabel);
        if (witness != nullptr && challenge == 2) answer = compose(answer, *witness);
        transcript.events.push_back(IsoAnswerEvent{round, answer});

        const Graph& target = (challenge == 1) ? g1 : g2;
        const bool ok = verify_iso_answer(h, target, answer);
        transcript.events.push_back(RoundVerdictEvent{round, ok, ok ? "" : "iso-answer-invalid"});
        all_ok = all_ok && ok;
    }
    transcript.accepted = all_ok;
    transcript.events.push_back(FinalEvent{all_ok});
    return transcript;
}

}  // namespace

Transcript iso_protocol(const Graph& g1, const Graph& g2, std::span<const int> witness,
                        int rounds, std::uint64_t prover_seed, std::uint64_t verifier_seed) {
    Rng prover_rng(prover_seed);
    Rng verifier_rng(verifier_seed);
    const std::vector<int> w(witness.begin(), witness.end());
    return run_iso_rounds(g1, g2, &w, rounds, prover_rng, verifier_rng);
}

Transcript iso_protocol_cheating(const Graph& g1, const Graph& g2, int rounds,
                                 std::uint64_t prover_seed, std::uint64_t verifier_seed) {
    Rng prover_rng(prover_seed);
    Rng verifier_rng(verifier_seed);
    return run_iso_rounds(g1, g2, nullptr, rounds, prover_rng, verifier_rng);
}

Transcript noniso_protocol(const Graph& g1, const Graph& g2, int rounds, int subproof_rounds,
                           std::uint64_t prover_seed, std::uint64_t verifier_seed) {
    if (rounds < 1) throw ValidationError("noniso protocol: rounds must be >= 1");
    if (g1.component_count() != 1 || g2.component_count() != 1) {
        throw ValidationError("noniso protocol: both graphs must be connected");
    }
    Transcript transcript;
    transcript.protocol = "non-isomorphism";
    if (g1.nodes != g2.nodes) {
        // Different sizes: non-isomorphism is visible directly.
        transcript.events.push_back(RoundVerdictEvent{0, true, "trivial-size-mismatch"});
        transcript.accepted = true;
        transcript.events.push_back(FinalEvent{true});
        return transcript;
    }

    const int v = g1.nodes;
    Graph g;
    g.nodes = 2 * v;
    g.edges.reserve(g1.edges.size() + g2.edges.size());
    for (const auto& [a, b] : g1.edges) g.edges.emplace_back(a, b);
    for (const auto& [a, b] : g2.edges) g.edges.emplace_back(a + v, b + v);
    std::sort(g.edges.begin(), g.edges.end());

    Rng prover_rng(prover_seed);
    Rng verifier_rng(verifier_seed);
    std::vector<int> slots_a(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) slots_a[static_cast<std::size_t>(i)] = i;

    bool all_ok = true;
    for (int round = 0; round < rounds; ++round) {
        const bool swapped = verifier_rng.coin();
        const auto tau1 = random_permutation(v, verifier_rng);
        const auto tau2 = random_permutation(v, verifier_rng);
        std::vector<int> sigma(static_cast<std::size_t>(2 * v));
        for (int a = 0; a < v; ++a) {
            sigma[static_cast<std::size_t>(a)] =
                swapped ? v + tau1[static_cast<std::size_t>(a)] : tau1[static_cast<std::size_t>(a)];
            sigma[static_cast<std::size_t>(v + a)] =
                swapped ? tau2[static_cast<std::size_t>(a)] : v + tau2[static_cast<std::size_t>(a)];
        }
        const Graph h = apply_permutation(g, sigma);
        transcript.events.push_back(GraphSentEvent{round, h});

        // The verifier proves knowledge of the relabelling: the roles swap,
        // so its randomness drives the subproof prover.
        const auto sigma_inv = inverse_permutation(sigma);
        const Transcript subproof =
            iso_protocol(h, g, sigma_inv, subproof_rounds, verifier_rng.next_u64(),
                         prover_rng.next_u64());
        transcript.events.push_back(SubproofEvent{round, subproof.accepted});
        if (!subproof.accepted) {
            transcript.events.push_back(RoundVerdictEvent{round, false, "verifier unproven"});
            all_ok = false;
            break;
        }

        // The prover inspects which side now occupies the g1 slots.
        const Graph slot_component = induced_subgraph(h, slots_a);
        const bool looks_like_g1 = find_isomorphism(slot_component, g1).has_value();
        const bool looks_like_g2 = find_isomorphism(slot_component, g2).has_value();
        bool answer_swapped;
        if (looks_like_g1 != looks_like_g2) {
            answer_swapped = looks_like_g2;
        } else {
            // Isomorphic inputs: the view is independent of the secret.
            answer_swapped = prover_rng.coin();
        }
        const bool correct = (answer_swapped == swapped);
        transcript.events.push_back(NonIsoAnswerEvent{round, answer_swapped, correct});
        transcript.events.push_back(
            RoundVerdictEvent{round, correct, correct ? "" : "wrong-component-answer"});
        all_ok = all_ok && correct;
    }
    transcript.accepted = all_ok;
    transcript.events.push_back(FinalEvent{all_ok});
    return transcript;
}

}  // namespace trustydice::zkp
