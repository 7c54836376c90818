#pragma once

#include <cstdint>
#include <memory>

#include "trustydice/rng.hpp"
#include "trustydice/zkp/transcript.hpp"

namespace trustydice::zkp {

// Per-round committed triple supplier. Honest provers build real envelopes;
// adversarial strategies may commit to anything of the right shape.
class ProverStrategy {
public:
    virtual ~ProverStrategy() = default;
    virtual EnvelopeTriple round_triple(int round, Rng& rng) = 0;
};

// Validates the witness once (proper + balanced) and refuses otherwise.
class HonestProver : public ProverStrategy {
public:
    HonestProver(const Graph& g, Coloring coloring);
    EnvelopeTriple round_triple(int round, Rng& rng) override;

private:
    const Graph& g_;
    Coloring coloring_;
};

// Commits to the same triple every round.
class FixedTripleProver : public ProverStrategy {
public:
    explicit FixedTripleProver(EnvelopeTriple triple) : triple_(std::move(triple)) {}
    EnvelopeTriple round_triple(int, Rng&) override { return triple_; }

private:
    EnvelopeTriple triple_;
};

// One prover turn: draw p and q from the seed, build the envelopes, commit
// to each. Refuses improper or unbalanced colorings.
struct CommittedTriple {
    EnvelopeTriple triple;
    std::array<Commitment, 3> commitments;
    std::array<Opening, 3> openings;
};

CommittedTriple prover_commit(const Graph& g, const Coloring& coloring, std::uint64_t seed,
                              CommitMode mode);

Transcript run_coloring_protocol(const Graph& g, ProverStrategy& prover, int rounds,
                                 std::uint64_t prover_seed, std::uint64_t verifier_seed,
                                 CommitMode mode);

// Honest-prover convenience entry.
Transcript run_coloring_protocol(const Graph& g, const Coloring& coloring, int rounds,
                                 std::uint64_t prover_seed, std::uint64_t verifier_seed,
                                 CommitMode mode);

// Re-runs commitment verification and pair checks over recorded openings.
// Returns the recomputed verdict.
bool replay_coloring(const Graph& g, const Transcript& transcript);

// Verifier's view of one challenge, sampled from the graph alone.
OpenedPair simulate_pair(const Graph& g, PairChoice pair, std::uint64_t seed);

// Deterministic index-driven enumeration of the honest prover's and the
// simulator's randomness spaces, for exact distribution comparison.
std::uint64_t honest_pair_space(const Graph& g);
OpenedPair honest_pair_by_index(const Graph& g, const Coloring& coloring, PairChoice pair,
                                std::uint64_t index);
std::uint64_t simulated_pair_space(const Graph& g, PairChoice pair);
OpenedPair simulated_pair_by_index(const Graph& g, PairChoice pair, std::uint64_t index);

}  // namespace trustydice::zkp
