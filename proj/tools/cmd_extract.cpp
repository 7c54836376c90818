#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "trustydice/bits.hpp"
#include "trustydice/errors.hpp"
#include "trustydice/extractor.hpp"
#include "trustydice/io.hpp"

namespace trustydice::cli {

namespace {

extractor::HashFamily make_family(const std::string& kind, int n, int k) {
    if (kind == "toeplitz") return extractor::HashFamily::toeplitz(n, k);
    if (kind == "xor_shift") {
        if (k != 0 && k != n) throw ValidationError("xor_shift family has k = n");
        return extractor::HashFamily::xor_shift(n);
    }
    throw ValidationError("unknown family '" + kind + "' (toeplitz|xor_shift)");
}

}  // namespace

void register_extract(CLI::App& app, GlobalConfig& config, int& exit_code) {
    auto* cmd = app.add_subcommand("extract", "leftover-hash-lemma extractor tools");
    cmd->require_subcommand(1);

    auto* verify = cmd->add_subcommand(
        "verify", "check L1 <= L2 < 2^{-s/2} for a source/family instance");
    auto source_path = std::make_shared<std::string>();
    auto verify_family = std::make_shared<std::string>("toeplitz");
    auto verify_k = std::make_shared<int>(1);
    verify->add_option("--source", *source_path, "source file: {n, probs}")->required();
    verify->add_option("--family", *verify_family, "toeplitz|xor_shift");
    verify->add_option("--k", *verify_k, "output bits")->required();
    verify->callback([&, source_path, verify_family, verify_k]() {
        const auto source = io::parse_source(io::read_file(*source_path));
        const auto family = make_family(*verify_family, source.n, *verify_k);
        const auto joint = extractor::joint_distribution(source, family, config.budget);
        const auto report = extractor::distances(joint, source.renyi, family.k());
        std::cout << io::distance_report_json(report, source.renyi, source.n, family.k(),
                                              family.t(), config.pretty())
                  << "\n";
        exit_code = report.holds ? kExitOk : kExitReject;
    });

    auto* run = cmd->add_subcommand("run", "apply f_h to a stream of bitstrings");
    auto key_hex = std::make_shared<std::string>();
    auto in_path = std::make_shared<std::string>();
    auto run_family = std::make_shared<std::string>("toeplitz");
    auto run_n = std::make_shared<int>(0);
    auto run_k = std::make_shared<int>(0);
    run->add_option("--key", *key_hex, "hash key, hex")->required();
    run->add_option("--in", *in_path, "one bitstring per line, big-endian 0/1")->required();
    run->add_option("--family", *run_family, "toeplitz|xor_shift");
    run->add_option("--n", *run_n, "input bits (default: first line's length)");
    run->add_option("--k", *run_k, "output bits")->required();
    run->callback([&, key_hex, in_path, run_family, run_n, run_k]() {
        std::ifstream in(*in_path);
        if (!in) throw ValidationError("cannot open file '" + *in_path + "'");
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
        if (lines.empty()) {
            exit_code = kExitOk;
            return;
        }
        const int n = (*run_n > 0) ? *run_n : static_cast<int>(lines.front().size());
        const auto family = make_family(*run_family, n, *run_k);
        std::uint64_t key = 0;
        try {
            key = std::stoull(*key_hex, nullptr, 16);
        } catch (const std::exception&) {
            throw ValidationError("key must be hexadecimal");
        }
        std::vector<std::uint32_t> xs;
        xs.reserve(lines.size());
        for (const auto& l : lines) xs.push_back(parse_bits(l, n));
        const auto ys = extractor::extract_stream(family, key, xs);
        for (std::uint32_t y : ys) std::cout << format_bits(y, family.k()) << "\n";
        exit_code = kExitOk;
    });
}

}  // namespace trustydice::cli
