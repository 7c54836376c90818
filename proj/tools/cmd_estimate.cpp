#include <iostream>

#include "commands.hpp"
#include "trustydice/estimator.hpp"
#include "trustydice/io.hpp"

namespace trustydice::cli {

void register_estimate(CLI::App& app, GlobalConfig& config, int& exit_code) {
    auto* cmd = app.add_subcommand("estimate", "robust mean estimate from a samples file");
    auto input = std::make_shared<std::string>();
    auto epsilon = std::make_shared<double>(1.0);
    auto mode = std::make_shared<std::string>("tight");
    cmd->add_option("--in", *input, "samples file: JSON array of {value, b}")->required();
    cmd->add_option("--epsilon", *epsilon, "accuracy target")->required();
    cmd->add_option("--mode", *mode, "tight|simple")->check(CLI::IsMember({"tight", "simple"}));
    cmd->callback([&, input, epsilon, mode]() {
        const auto batch = io::parse_samples(io::read_file(*input), *epsilon);
        const auto m = (*mode == "tight") ? estimator::Mode::tight : estimator::Mode::simple;
        const auto result = estimator::estimate(batch, m);
        std::cout << io::estimate_result_json(result, config.pretty()) << "\n";
        exit_code = kExitOk;
    });
}

}  // namespace trustydice::cli
