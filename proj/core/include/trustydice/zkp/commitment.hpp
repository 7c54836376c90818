#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "trustydice/sha256.hpp"

namespace trustydice {
class Rng;
}

namespace trustydice::zkp {

// hash: digest of canonical payload bytes plus a 256-bit nonce.
// ideal: in-process escrow holding the payload itself; used by the exact
// distribution tests, where digest artifacts would be noise.
enum class CommitMode { ideal, hash };

struct Commitment {
    CommitMode mode = CommitMode::hash;
    Digest256 digest{};
    std::vector<std::uint8_t> escrow;  // ideal mode only
};

struct Opening {
    std::vector<std::uint8_t> payload;
    std::array<std::uint8_t, 32> nonce{};
};

std::pair<Commitment, Opening> commit(CommitMode mode, std::span<const std::uint8_t> payload,
                                      Rng& rng);

bool verify_opening(const Commitment& commitment, const Opening& opening);

}  // namespace trustydice::zkp
