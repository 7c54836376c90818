#include <iostream>

#include "commands.hpp"
#include "trustydice/io.hpp"
#include "trustydice/lottery.hpp"
#include "trustydice/rng.hpp"

namespace trustydice::cli {

void register_lottery(CLI::App& app, GlobalConfig& config, int& exit_code) {
    auto* cmd = app.add_subcommand("lottery", "post-poll lottery with quadratic odds");
    cmd->require_subcommand(1);

    auto* odds_cmd = cmd->add_subcommand("odds", "exact win probabilities for a tally");
    auto odds_tally = std::make_shared<std::string>();
    auto exponent = std::make_shared<unsigned>(2);
    odds_cmd->add_option("--tally", *odds_tally, "tally file: JSON {candidate: votes}")
        ->required();
    odds_cmd->add_option("--exponent", *exponent, "odds ~ votes^exponent (default 2)");
    odds_cmd->callback([&, odds_tally, exponent]() {
        const auto tally = io::parse_tally(io::read_file(*odds_tally));
        const auto odds = lottery::power_odds(tally, *exponent);
        std::cout << io::odds_table_json(odds, config.pretty()) << "\n";
        exit_code = kExitOk;
    });

    auto* draw_cmd = cmd->add_subcommand("draw", "draw the winner for a tally");
    auto draw_tally = std::make_shared<std::string>();
    auto draw_exponent = std::make_shared<unsigned>(2);
    auto smooth = std::make_shared<bool>(false);
    draw_cmd->add_option("--tally", *draw_tally, "tally file")->required();
    draw_cmd->add_option("--exponent", *draw_exponent, "odds ~ votes^exponent");
    draw_cmd->add_flag("--smooth", *smooth, "discard a random half of the ballots first");
    draw_cmd->callback([&, draw_tally, draw_exponent, smooth]() {
        auto tally = io::parse_tally(io::read_file(*draw_tally));
        if (*smooth) tally = lottery::noise_smooth(tally, derive_seed(config.seed, 1));
        const auto odds = lottery::power_odds(tally, *draw_exponent);
        const auto winner = lottery::draw(odds, derive_seed(config.seed, 2));
        if (config.pretty()) {
            std::cout << "winner: " << winner << "\n";
        } else {
            std::cout << "{\"winner\":\"" << winner << "\"}\n";
        }
        exit_code = kExitOk;
    });
}

}  // namespace trustydice::cli
