#include "trustydice/lottery.hpp"

#include <set>

#include "trustydice/errors.hpp"
#include "trustydice/rng.hpp"

namespace trustydice::lottery {

void validate_tally(const Tally& tally) {
    if (tally.entries.empty()) throw ValidationError("tally: no candidates");
    std::set<std::string> seen;
    bool any_votes = false;
    for (const auto& [id, votes] : tally.entries) {
        if (id.empty()) throw ValidationError("tally: empty candidate id");
        if (!seen.insert(id).second) throw ValidationError("tally: duplicate candidate id '" + id + "'");
        if (votes > 0) any_votes = true;
    }
    if (!any_votes) throw ValidationError("tally: all candidates have zero votes");
}

OddsTable power_odds(const Tally& tally, unsigned exponent) {
    validate_tally(tally);
    if (exponent < 1) throw ValidationError("power_odds: exponent must be >= 1");

    OddsTable table;
    table.exponent = exponent;
    for (const auto& [id, votes] : tally.entries) {
        BigUint w = (votes == 0) ? BigUint(0) : BigUint::pow(votes, exponent);
        table.denominator += w;
        table.entries.push_back({id, Rational(), std::move(w)});
    }
    for (auto& entry : table.entries) {
        entry.probability = Rational(entry.weight, table.denominator);
    }
    return table;
}

std::string draw(const OddsTable& odds, std::uint64_t seed) {
    if (odds.entries.empty() || odds.denominator.is_zero()) {
        throw ValidationError("draw: empty odds table");
    }
    Rng rng(derive_seed(seed, 0x716f6464ull));  // lottery draw stream
    const BigUint r = BigUint::random_below(odds.denominator, rng);
    BigUint cumulative;
    for (const auto& entry : odds.entries) {
        cumulative += entry.weight;
        if (r < cumulative) return entry.id;
    }
    return odds.entries.back().id;  // unreachable: weights sum to denominator
}

Tally noise_smooth(const Tally& tally, std::uint64_t seed) {
    validate_tally(tally);
    std::uint64_t total = 0;
    for (const auto& [id, votes] : tally.entries) total += votes;
    if (total < 2) throw ValidationError("noise_smooth: needs at least 2 votes in total");

    // Sequential uniform sampling of the discarded ballots: walking the
    // pooled ballots in order, discard each with exact probability
    // remaining_discards / remaining_ballots.
    Rng rng(derive_seed(seed, 0x736d6f6full));  // smoothing stream
    std::uint64_t to_discard = total / 2;
    std::uint64_t remaining = total;
    Tally out;
    out.entries.reserve(tally.entries.size());
    for (const auto& [id, votes] : tally.entries) {
        std::uint64_t kept = 0;
        for (std::uint64_t ballot = 0; ballot < votes; ++ballot) {
            if (to_discard > 0 && rng.below(remaining) < to_discard) {
                --to_discard;
            } else {
                ++kept;
            }
            --remaining;
        }
        out.entries.emplace_back(id, kept);
    }
    return out;
}

}  // namespace trustydice::lottery
