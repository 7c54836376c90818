#pragma once

#include <cstdint>
#include <string>

namespace trustydice {

// Bitstrings in files are big-endian ASCII 0/1: the leftmost character is
// the most significant bit of the integer value.
std::uint32_t parse_bits(const std::string& s, int n);
std::string format_bits(std::uint32_t x, int n);

inline int parity64(std::uint64_t x) { return __builtin_parityll(x); }

}  // namespace trustydice
