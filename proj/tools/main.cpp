#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "trustydice/errors.hpp"
#include "trustydice/version.hpp"

using namespace trustydice;

int main(int argc, char** argv) {
    CLI::App app{"trusty-dice: robust mean estimation, randomness extraction, "
                 "post-poll lotteries and envelope proofs"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::GlobalConfig config;
    if (const char* env_seed = std::getenv("TRUSTY_DICE_SEED")) {
        config.seed = std::strtoull(env_seed, nullptr, 10);
    }
    app.add_option("--seed", config.seed, "master seed for all randomness");
    app.add_option("--budget", config.budget, "work cap for exhaustive enumerations");
    app.add_option("--output", config.output, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    app.set_version_flag("--version", std::string("trusty-dice ") + kVersion +
                                          " (formats: " + kFormats + ")");

    int exit_code = cli::kExitOk;
    cli::register_estimate(app, config, exit_code);
    cli::register_extract(app, config, exit_code);
    cli::register_lottery(app, config, exit_code);
    cli::register_zk(app, config, exit_code);
    cli::register_bench(app, config, exit_code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return cli::kExitCapacity;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
    return exit_code;
}
