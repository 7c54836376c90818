#include "trustydice/zkp/transcript.hpp"

#include <json.hpp>

namespace trustydice::zkp {

namespace {

using json = nlohmann::ordered_json;

json graph_to_json(const Graph& g) {
    json j;
    j["nodes"] = g.nodes;
    json edges = json::array();
    for (const auto& [a, b] : g.edges) {
        if (a < b) edges.push_back(json::array({a, b}));
    }
    j["edges"] = edges;
    return j;
}

json opened_to_json(const OpenedPair& opened) {
    json j;
    j["pair"] = pair_name(opened.which);
    if (opened.e1) {
        j["p"] = opened.e1->p;
        j["r"] = opened.e1->r;
    }
    if (opened.e2) j["e2"] = *opened.e2;
    if (opened.e3) j["e3"] = *opened.e3;
    return j;
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes) {
    static const char* hex = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(hex[b >> 4]);
        s.push_back(hex[b & 0xf]);
    }
    return s;
}

struct EventWriter {
    json operator()(const CommitEvent& e) const {
        json j;
        j["type"] = "commit";
        j["round"] = e.round;
        j["mode"] = e.mode == CommitMode::hash ? "hash" : "ideal";
        json digests = json::array();
        for (const auto& c : e.commitments) {
            digests.push_back(e.mode == CommitMode::hash ? digest_to_hex(c.digest) : "escrow");
        }
        j["digests"] = digests;
        return j;
    }
    json operator()(const ChallengeEvent& e) const {
        return json{{"type", "challenge"}, {"round", e.round}, {"choice", e.choice}};
    }
    json operator()(const OpenEvent& e) const {
        json j;
        j["type"] = "open";
        j["round"] = e.round;
        j["opened"] = opened_to_json(e.opened);
        json nonces = json::array();
        for (const auto& opening : e.openings) nonces.push_back(bytes_to_hex(opening.nonce));
        j["nonces"] = nonces;
        return j;
    }
    json operator()(const RoundVerdictEvent& e) const {
        json j{{"type", "verdict"}, {"round", e.round}, {"ok", e.ok}};
        if (!e.ok) j["rule"] = e.rule;
        return j;
    }
    json operator()(const GraphSentEvent& e) const {
        return json{{"type", "graph"}, {"round", e.round}, {"h", graph_to_json(e.h)}};
    }
    json operator()(const IsoAnswerEvent& e) const {
        return json{{"type", "iso-answer"}, {"round", e.round}, {"mapping", e.mapping}};
    }
    json operator()(const NonIsoAnswerEvent& e) const {
        return json{{"type", "noniso-answer"},
                    {"round", e.round},
                    {"swapped", e.swapped},
                    {"correct", e.correct}};
    }
    json operator()(const SubproofEvent& e) const {
        return json{{"type", "subproof"}, {"round", e.round}, {"accepted", e.accepted}};
    }
    json operator()(const FinalEvent& e) const {
        return json{{"type", "final"}, {"accepted", e.accepted}};
    }
};

}  // namespace

std::string transcript_to_json(const Transcript& transcript, bool pretty) {
    json j;
    j["protocol"] = transcript.protocol;
    j["accepted"] = transcript.accepted;
    json events = json::array();
    for (const auto& event : transcript.events) {
        events.push_back(std::visit(EventWriter{}, event));
    }
    j["events"] = events;
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace trustydice::zkp
