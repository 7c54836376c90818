#pragma once

#include <cstdint>
#include <string>

#include <CLI11.hpp>

namespace trustydice::cli {

// Exit-code contract: 0 success/accept, 1 verdict-reject (protocol rejected,
// lemma bound violated, tail bound missed), 2 usage/validation, 3 capacity.
inline constexpr int kExitOk = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

struct GlobalConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;
    std::string output = "json";
    bool pretty() const { return output == "pretty"; }
};

void register_estimate(CLI::App& app, GlobalConfig& config, int& exit_code);
void register_extract(CLI::App& app, GlobalConfig& config, int& exit_code);
void register_lottery(CLI::App& app, GlobalConfig& config, int& exit_code);
void register_zk(CLI::App& app, GlobalConfig& config, int& exit_code);
void register_bench(CLI::App& app, GlobalConfig& config, int& exit_code);

}  // namespace trustydice::cli
