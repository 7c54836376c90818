#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trustydice/zkp/commitment.hpp"
#include "trustydice/zkp/envelopes.hpp"
#include "trustydice/zkp/graph.hpp"

namespace trustydice::zkp {

// Ordered event record of one protocol run. Replaying the checks over the
// recorded openings reproduces every verdict.

struct CommitEvent {
    int round = 0;
    CommitMode mode = CommitMode::hash;
    std::array<Commitment, 3> commitments;
};

struct ChallengeEvent {
    int round = 0;
    int choice = 0;  // pair index for coloring, i in {1,2} for isomorphism
};

struct OpenEvent {
    int round = 0;
    OpenedPair opened;
    std::array<Opening, 2> openings;  // raw payloads + nonces, E-index order
};

struct RoundVerdictEvent {
    int round = 0;
    bool ok = false;
    std::string rule;  // failing rule id, empty when ok
};

struct GraphSentEvent {
    int round = 0;
    Graph h;
};

struct IsoAnswerEvent {
    int round = 0;
    std::vector<int> mapping;
};

struct NonIsoAnswerEvent {
    int round = 0;
    bool swapped = false;
    bool correct = false;
};

struct SubproofEvent {
    int round = 0;
    bool accepted = false;
};

struct FinalEvent {
    bool accepted = false;
};

using TranscriptEvent =
    std::variant<CommitEvent, ChallengeEvent, OpenEvent, RoundVerdictEvent, GraphSentEvent,
                 IsoAnswerEvent, NonIsoAnswerEvent, SubproofEvent, FinalEvent>;

struct Transcript {
    std::string protocol;  // "coloring" | "isomorphism" | "non-isomorphism"
    std::vector<TranscriptEvent> events;
    bool accepted = false;
};

// JSON event list; implementation lives with the other JSON I/O.
std::string transcript_to_json(const Transcript& transcript, bool pretty);

}  // namespace trustydice::zkp
