#pragma once

#include <cstdint>
#include <span>

#include "trustydice/zkp/transcript.hpp"

namespace trustydice::zkp {

// Knowledge-of-isomorphism protocol: per round the prover sends a random
// relabelling h of g1, the verifier challenges i in {1,2}, the prover
// answers with a node map h -> g_i, checked edge-exactly.
Transcript iso_protocol(const Graph& g1, const Graph& g2, std::span<const int> witness,
                        int rounds, std::uint64_t prover_seed, std::uint64_t verifier_seed);

// Best cheating strategy without a witness: guess the challenge and prepare
// h from the guessed side. Escapes each round with probability 1/2 when
// g1 and g2 are not isomorphic.
Transcript iso_protocol_cheating(const Graph& g1, const Graph& g2, int rounds,
                                 std::uint64_t prover_seed, std::uint64_t verifier_seed);

// Non-isomorphism game on g = g1 + g2: the verifier sends a permuted copy
// of g (components kept in place or swapped), proves knowledge of the
// permutation via the isomorphism subprotocol with roles swapped, and the
// prover answers which case it was. Requires equal node counts; unequal
// sizes make non-isomorphism trivial and are reported as such.
Transcript noniso_protocol(const Graph& g1, const Graph& g2, int rounds, int subproof_rounds,
                           std::uint64_t prover_seed, std::uint64_t verifier_seed);

}  // namespace trustydice::zkp
