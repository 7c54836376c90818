#include "trustydice/zkp/commitment.hpp"

#include "trustydice/rng.hpp"

namespace trustydice::zkp {

namespace {

Digest256 commitment_digest(std::span<const std::uint8_t> payload,
                            const std::array<std::uint8_t, 32>& nonce) {
    std::vector<std::uint8_t> buffer;
    buffer.reserve(payload.size() + nonce.size());
    buffer.insert(buffer.end(), payload.begin(), payload.end());
    buffer.insert(buffer.end(), nonce.begin(), nonce.end());
    return sha256(buffer);
}

}  // namespace

std::pair<Commitment, Opening> commit(CommitMode mode, std::span<const std::uint8_t> payload,
                                      Rng& rng) {
    Commitment commitment;
    commitment.mode = mode;
    Opening opening;
    opening.payload.assign(payload.begin(), payload.end());
    if (mode == CommitMode::hash) {
        for (std::size_t i = 0; i < 4; ++i) {
            const std::uint64_t word = rng.next_u64();
            for (std::size_t b = 0; b < 8; ++b) {
                opening.nonce[8 * i + b] = static_cast<std::uint8_t>(word >> (8 * b));
            }
        }
        commitment.digest = commitment_digest(payload, opening.nonce);
    } else {
        commitment.escrow = opening.payload;
    }
    return {commitment, opening};
}

bool verify_opening(const Commitment& commitment, const Opening& opening) {
    if (commitment.mode == CommitMode::hash) {
        return commitment_digest(opening.payload, opening.nonce) == commitment.digest;
    }
    return commitment.escrow == opening.payload;
}

}  // namespace trustydice::zkp
