#include <iostream>

#include "commands.hpp"
#include "trustydice/errors.hpp"
#include "trustydice/io.hpp"
#include "trustydice/rng.hpp"
#include "trustydice/zkp/coloring.hpp"
#include "trustydice/zkp/iso.hpp"
#include "trustydice/zkp/protocol.hpp"

namespace trustydice::cli {

namespace {

zkp::Coloring resolve_coloring(const zkp::Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) == g.nodes) {
        if (!zkp::is_proper(g, colors)) throw ValidationError("coloring is not proper");
        if (!zkp::is_balanced(g, colors)) throw ValidationError("coloring is not balanced");
        return colors;
    }
    // Component-1 coloring: spread over the other two components by rotation.
    return zkp::balance_coloring(g, colors);
}

}  // namespace

void register_zk(CLI::App& app, GlobalConfig& config, int& exit_code) {
    auto* cmd = app.add_subcommand("zk", "three-envelope and isomorphism proofs");
    cmd->require_subcommand(1);

    auto* color = cmd->add_subcommand("color", "3-coloring proof over envelope commitments");
    auto color_graph = std::make_shared<std::string>();
    auto color_file = std::make_shared<std::string>();
    auto color_rounds = std::make_shared<int>(1);
    auto commit_mode = std::make_shared<std::string>("hash");
    color->add_option("--graph", *color_graph, "graph file: {nodes, edges}")->required();
    color->add_option("--coloring", *color_file,
                      "coloring file: {colors: [...]} for component 1 or all nodes")
        ->required();
    color->add_option("--rounds", *color_rounds, "repetitions k");
    color->add_option("--commit", *commit_mode, "hash|ideal")
        ->check(CLI::IsMember({"hash", "ideal"}));
    color->callback([&, color_graph, color_file, color_rounds, commit_mode]() {
        const auto g = io::parse_graph(io::read_file(*color_graph));
        zkp::three_component_witness(g);  // protocol runs on 3-component graphs
        const auto coloring = resolve_coloring(g, io::parse_colors(io::read_file(*color_file)));
        const auto mode =
            (*commit_mode == "hash") ? zkp::CommitMode::hash : zkp::CommitMode::ideal;
        const auto transcript =
            zkp::run_coloring_protocol(g, coloring, *color_rounds, derive_seed(config.seed, 1),
                                       derive_seed(config.seed, 2), mode);
        std::cout << zkp::transcript_to_json(transcript, config.pretty()) << "\n";
        exit_code = transcript.accepted ? kExitOk : kExitReject;
    });

    auto* iso = cmd->add_subcommand("iso", "knowledge-of-isomorphism proof");
    auto iso_g1 = std::make_shared<std::string>();
    auto iso_g2 = std::make_shared<std::string>();
    auto iso_rounds = std::make_shared<int>(20);
    iso->add_option("--g1", *iso_g1, "first graph file")->required();
    iso->add_option("--g2", *iso_g2, "second graph file")->required();
    iso->add_option("--rounds", *iso_rounds, "repetitions k");
    iso->callback([&, iso_g1, iso_g2, iso_rounds]() {
        const auto g1 = io::parse_graph(io::read_file(*iso_g1));
        const auto g2 = io::parse_graph(io::read_file(*iso_g2));
        const auto witness = zkp::find_isomorphism(g1, g2);
        if (!witness) {
            std::cerr << "no isomorphism between the graphs; nothing to prove\n";
            exit_code = kExitReject;
            return;
        }
        const auto transcript = zkp::iso_protocol(g1, g2, *witness, *iso_rounds,
                                                  derive_seed(config.seed, 1),
                                                  derive_seed(config.seed, 2));
        std::cout << zkp::transcript_to_json(transcript, config.pretty()) << "\n";
        exit_code = transcript.accepted ? kExitOk : kExitReject;
    });

    auto* noniso = cmd->add_subcommand("noniso", "non-isomorphism game");
    auto ni_g1 = std::make_shared<std::string>();
    auto ni_g2 = std::make_shared<std::string>();
    auto ni_rounds = std::make_shared<int>(10);
    auto ni_subrounds = std::make_shared<int>(20);
    noniso->add_option("--g1", *ni_g1, "first graph file")->required();
    noniso->add_option("--g2", *ni_g2, "second graph file")->required();
    noniso->add_option("--rounds", *ni_rounds, "repetitions k");
    noniso->add_option("--subrounds", *ni_subrounds, "verifier's knowledge-subproof rounds");
    noniso->callback([&, ni_g1, ni_g2, ni_rounds, ni_subrounds]() {
        const auto g1 = io::parse_graph(io::read_file(*ni_g1));
        const auto g2 = io::parse_graph(io::read_file(*ni_g2));
        const auto transcript =
            zkp::noniso_protocol(g1, g2, *ni_rounds, *ni_subrounds,
                                 derive_seed(config.seed, 1), derive_seed(config.seed, 2));
        std::cout << zkp::transcript_to_json(transcript, config.pretty()) << "\n";
        exit_code = transcript.accepted ? kExitOk : kExitReject;
    });
}

}  // namespace trustydice::cli
