#pragma once

namespace trustydice {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kFormats =
    "samples.v1 source.v1 tally.v1 graph.v1 coloring.v1 spec.v1 transcript.v1";

}  // namespace trustydice
