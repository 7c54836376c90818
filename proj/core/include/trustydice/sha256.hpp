#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace trustydice {

using Digest256 = std::array<std::uint8_t, 32>;

// FIPS 180-4 SHA-256 over a byte span.
Digest256 sha256(std::span<const std::uint8_t> data);

std::string digest_to_hex(const Digest256& digest);

}  // namespace trustydice
