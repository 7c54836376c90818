// Acceptance suite: one criterion per line, [PASS]/[FAIL] verdicts, exit 0
// only if every criterion passes. Run a subset by passing a name substring.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trustydice/estimator.hpp"
#include "trustydice/extractor.hpp"
#include "trustydice/harness.hpp"
#include "trustydice/lottery.hpp"
#include "trustydice/rational.hpp"
#include "trustydice/rng.hpp"
#include "trustydice/zkp/exactness.hpp"
#include "trustydice/zkp/iso.hpp"
#include "trustydice/zkp/protocol.hpp"

using namespace trustydice;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

char buffer[1024];

template <typename... Args>
std::string fmt(const char* format, Args... args) {
    std::snprintf(buffer, sizeof(buffer), format, args...);
    return buffer;
}

// ---------------------------------------------------------------- lottery

Result lottery_exactness() {
    const auto start = std::chrono::steady_clock::now();
    lottery::Tally tally{{{"leader", 60},
                          {"rival", 25},
                          {"third", 10},
                          {"p1", 1},
                          {"p2", 1},
                          {"p3", 1},
                          {"p4", 1},
                          {"p5", 1}}};
    const auto odds = lottery::power_odds(tally, 2);

    bool ok = odds.denominator == BigUint(4330);
    ok = ok && odds.entries[0].probability == Rational(3600, 4330);
    ok = ok && odds.entries[1].probability == Rational(625, 4330);
    ok = ok && odds.entries[2].probability == Rational(100, 4330);
    Rational protest(0, 1);
    for (int i = 3; i < 8; ++i) protest = protest + odds.entries[static_cast<std::size_t>(i)].probability;
    ok = ok && protest == Rational(1, 866);

    const double leader_gap = std::abs(odds.entries[0].probability.to_double() - 5.0 / 6.0);
    const double rival_gap = std::abs(odds.entries[1].probability.to_double() - 1.0 / 7.0);
    const double third_gap = std::abs(odds.entries[2].probability.to_double() - 1.0 / 43.0);
    ok = ok && leader_gap < 0.002 && rival_gap < 0.0015 && third_gap < 0.0003;

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && seconds < 1.0;
    return {ok, fmt("protest = %s exactly; |5/6 gap| = %.5f, |1/7 gap| = %.5f, |1/43 gap| = %.5f",
                    protest.to_string().c_str(), leader_gap, rival_gap, third_gap)};
}

// -------------------------------------------------------------- extractor

Result lemma_bound() {
    Rng rng(20250808);
    long instances = 0;
    long violations = 0;
    double worst_margin = 1e9;  // min over instances of bound - l2

    auto check_source = [&](const extractor::SourceModel& source, double m) {
        for (int k : {1, 2, 3}) {
            const auto family = extractor::HashFamily::toeplitz(8, k);
            const auto dist = extractor::joint_distribution(source, family, 20'000'000);
            const auto report = extractor::distances(dist, m, k);
            ++instances;
            if (!(report.l1 <= report.l2) || !(report.l2 < report.bound)) ++violations;
            worst_margin = std::min(worst_margin, report.bound - report.l2);
        }
    };

    // Flat sources of support 2^m over n = 8 bits, 100 random supports each.
    for (int m : {3, 4, 5, 6}) {
        const int support = 1 << m;
        for (int repeat = 0; repeat < 100; ++repeat) {
            std::vector<std::uint32_t> pool(256);
            for (std::uint32_t x = 0; x < 256; ++x) pool[x] = x;
            rng.shuffle(pool);
            std::vector<std::pair<std::uint32_t, double>> probs;
            for (int i = 0; i < support; ++i) {
                probs.emplace_back(pool[static_cast<std::size_t>(i)], 1.0 / support);
            }
            check_source(extractor::make_source(8, std::move(probs)),
                         static_cast<double>(m));
        }
    }

    // Non-flat sources with computed Renyi entropy.
    for (int repeat = 0; repeat < 100; ++repeat) {
        std::vector<std::uint32_t> pool(256);
        for (std::uint32_t x = 0; x < 256; ++x) pool[x] = x;
        rng.shuffle(pool);
        const int support = 8 + static_cast<int>(rng.below(57));
        std::vector<std::pair<std::uint32_t, double>> probs;
        double total = 0.0;
        for (int i = 0; i < support; ++i) {
            const double w = 0.05 + rng.uniform01();
            probs.emplace_back(pool[static_cast<std::size_t>(i)], w);
            total += w;
        }
        for (auto& [x, p] : probs) p /= total;
        double sum = 0.0;
        for (const auto& [x, p] : probs) sum += p;
        probs.front().second += 1.0 - sum;
        const auto source = extractor::make_source(8, std::move(probs));
        check_source(source, source.renyi);
    }

    return {violations == 0,
            fmt("%ld instances (n=8, k in {1,2,3}), %ld violations; min(bound - l2) = %.6f",
                instances, violations, worst_margin)};
}

// -------------------------------------------------------------- estimator

Result estimator_tail() {
    bool all = true;
    std::string detail;
    const double frozen_tight_bound = 0.019932455839480497;
    for (const char* generator : {"chebyshev_extremal", "student_t"}) {
        for (auto mode : {estimator::Mode::tight, estimator::Mode::simple}) {
            harness::TrialSpec spec;
            spec.generator = generator;
            spec.gen_b = std::sqrt(6.0);
            spec.gen_df = 3;
            spec.true_mean = 3.25;
            spec.trials = 100'000;
            spec.batch_size = 60;
            spec.master_seed = 0xf00dull + (mode == estimator::Mode::simple);
            const auto report =
                harness::run_tail_trials(spec, harness::EstimatorConfig{1.0, mode});
            bool ok = report.pass && report.n_groups == 10;
            if (mode == estimator::Mode::tight) {
                ok = ok && std::abs(report.bound - frozen_tight_bound) < 1e-12;
            }
            all = all && ok;
            if (!detail.empty()) detail += "; ";
            detail += fmt("%s/%s rate %.5f <= %.5f", generator,
                          mode == estimator::Mode::tight ? "tight" : "simple",
                          report.empirical_rate, report.bound + 3 * report.std_error);
        }
    }
    return {all, detail};
}

Result height_optimum() {
    double best_b = 0.0;
    double best = -1.0;
    for (double b = 1.1; b <= 10.0 + 1e-12; b += 1e-4) {
        const double v = estimator::height(b) / (b * b);
        if (v > best) {
            best = v;
            best_b = b;
        }
    }
    const bool ok = best > 1.0 / 12.0 && std::abs(best_b * best_b - 6.0) < 0.5;
    return {ok, fmt("max h/b^2 = %.8f > 1/12 = %.8f at b^2 = %.4f", best, 1.0 / 12.0,
                    best_b * best_b)};
}

// --------------------------------------------------------------------- zk

zkp::Graph base_edge() {
    return zkp::Graph::undirected(2, std::vector<std::pair<int, int>>{{0, 1}});
}

zkp::Graph base_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return zkp::Graph::undirected(n, edges);
}

zkp::Graph base_star4() {
    return zkp::Graph::undirected(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
}

zkp::Graph base_cycle4() {
    return zkp::Graph::undirected(4,
                                  std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

zkp::Graph base_triangle() {
    return zkp::Graph::undirected(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
}

zkp::Graph base_k4() {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) edges.emplace_back(a, b);
    }
    return zkp::Graph::undirected(4, edges);
}

Result zk_exactness() {
    const auto g = zkp::make_three_component(base_edge());
    const auto coloring_a = zkp::balance_coloring(g, std::vector<int>{1, 2});
    const auto coloring_b = zkp::balance_coloring(g, std::vector<int>{1, 3});
    const auto reports = zkp::zk_exactness_report(g, coloring_a, coloring_b, 50'000'000);
    bool all = true;
    std::string detail;
    for (const auto& report : reports) {
        all = all && report.colorings_identical && report.simulator_identical;
        if (!detail.empty()) detail += "; ";
        detail += fmt("%s: %llu outcomes over %llu honest / %llu simulated draws %s",
                      zkp::pair_name(report.pair),
                      static_cast<unsigned long long>(report.distinct_outcomes),
                      static_cast<unsigned long long>(report.honest_space),
                      static_cast<unsigned long long>(report.simulator_space),
                      report.colorings_identical && report.simulator_identical ? "identical"
                                                                               : "DIFFER");
    }
    return {all, detail};
}

int count_passing_pairs(const zkp::Graph& g, const zkp::EnvelopeTriple& triple) {
    int passing = 0;
    for (auto pair : {zkp::PairChoice::e1e2, zkp::PairChoice::e1e3, zkp::PairChoice::e2e3}) {
        if (zkp::check_pair(g, zkp::project_pair(triple, pair)).ok) ++passing;
    }
    return passing;
}

// Every triple either fails a pair or extracts to a proper balanced
// coloring. Returns {candidates examined, passing triples, implication
// failures, maximum passing pairs seen}.
struct SoundnessScan {
    long candidates = 0;
    long passing = 0;
    long extraction_failures = 0;
    int max_passing_pairs = 0;
};

void scan_triple(const zkp::Graph& g, const zkp::EnvelopeTriple& triple, SoundnessScan& scan) {
    ++scan.candidates;
    const int passing = count_passing_pairs(g, triple);
    scan.max_passing_pairs = std::max(scan.max_passing_pairs, passing);
    if (passing == 3) {
        ++scan.passing;
        const auto extracted = zkp::extract_coloring(g, triple);
        if (!extracted || !zkp::is_proper(g, *extracted) || !zkp::is_balanced(g, *extracted)) {
            ++scan.extraction_failures;
        }
    }
}

SoundnessScan scan_graph(const zkp::Graph& base, std::uint64_t seed) {
    const auto g = zkp::make_three_component(base);
    Rng rng(seed);
    SoundnessScan scan;

    const auto p0 = random_permutation(g.nodes, rng);
    const auto q0 = random_permutation(g.directed_edge_count(), rng);

    // Family 1: honest structure around every degree-balanced coloring
    // (proper or not), two enumerations each.
    const std::uint64_t colorings = zkp::balanced_coloring_count(g);
    for (std::uint64_t ci = 0; ci < colorings; ++ci) {
        const auto coloring = zkp::balanced_coloring_by_index(g, ci);
        scan_triple(g, zkp::build_envelopes(g, coloring, p0, q0), scan);
    }

    const auto honest_coloring = zkp::balanced_coloring_by_index(g, 0);
    const auto honest = zkp::build_envelopes(g, honest_coloring, p0, q0);
    const int labels = g.directed_edge_count();

    // Family 2: every single-entry rewrite of e2, e3, r and p.
    for (int l = 0; l < labels; ++l) {
        for (int v = 0; v < g.nodes; ++v) {
            auto cheat = honest;
            cheat.e2[static_cast<std::size_t>(l)] = v;
            scan_triple(g, cheat, scan);
        }
        for (int c = 1; c <= 3; ++c) {
            auto cheat = honest;
            cheat.e3[static_cast<std::size_t>(l)] = c;
            scan_triple(g, cheat, scan);
        }
        for (int v = 0; v < labels; ++v) {
            auto cheat = honest;
            cheat.e1.r[static_cast<std::size_t>(l)] = v;
            scan_triple(g, cheat, scan);
        }
    }
    for (int a = 0; a < g.nodes; ++a) {
        for (int v = 0; v < g.nodes; ++v) {
            auto cheat = honest;
            cheat.e1.p[static_cast<std::size_t>(a)] = v;
            scan_triple(g, cheat, scan);
        }
    }

    // Family 3: constant colors and shifted sources.
    for (int c = 1; c <= 3; ++c) {
        auto cheat = honest;
        std::fill(cheat.e3.begin(), cheat.e3.end(), c);
        scan_triple(g, cheat, scan);
    }
    {
        auto cheat = honest;
        for (auto& v : cheat.e2) v = (v + 1) % g.nodes;
        scan_triple(g, cheat, scan);
    }

    // Family 4: 10^4 random triples, half mutated-honest, half noise.
    for (int trial = 0; trial < 10'000; ++trial) {
        zkp::EnvelopeTriple triple;
        if (trial % 2 == 0) {
            const auto p = random_permutation(g.nodes, rng);
            const auto q = random_permutation(g.directed_edge_count(), rng);
            const auto coloring = zkp::random_balanced_coloring(g, rng);
            triple = zkp::build_envelopes(g, coloring, p, q);
            const int mutations = 1 + static_cast<int>(rng.below(4));
            for (int m = 0; m < mutations; ++m) {
                switch (rng.below(4)) {
                    case 0:
                        triple.e1.p[rng.below(triple.e1.p.size())] =
                            static_cast<int>(rng.below(static_cast<std::uint64_t>(g.nodes)));
                        break;
                    case 1:
                        triple.e1.r[rng.below(triple.e1.r.size())] =
                            static_cast<int>(rng.below(triple.e1.r.size()));
                        break;
                    case 2:
                        triple.e2[rng.below(triple.e2.size())] =
                            static_cast<int>(rng.below(static_cast<std::uint64_t>(g.nodes)));
                        break;
                    default:
                        triple.e3[rng.below(triple.e3.size())] =
                            1 + static_cast<int>(rng.below(3));
                }
            }
        } else {
            triple.e1.p.resize(static_cast<std::size_t>(g.nodes));
            triple.e1.r.resize(static_cast<std::size_t>(labels));
            triple.e2.resize(static_cast<std::size_t>(labels));
            triple.e3.resize(static_cast<std::size_t>(labels));
            for (auto& v : triple.e1.p) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.nodes)));
            for (auto& v : triple.e1.r) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(labels)));
            for (auto& v : triple.e2) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.nodes)));
            for (auto& v : triple.e3) v = 1 + static_cast<int>(rng.below(3));
        }
        scan_triple(g, triple, scan);
    }
    return scan;
}

Result zk_soundness() {
    bool all = true;
    long candidates = 0;
    long passing = 0;
    int k4_max_pairs = 0;
    const std::vector<zkp::Graph> bases{base_edge(),   base_path(3),  base_triangle(),
                                        base_path(4),  base_star4(),  base_cycle4(),
                                        base_k4()};
    for (std::size_t i = 0; i < bases.size(); ++i) {
        const auto scan = scan_graph(bases[i], 0xABCD + i);
        candidates += scan.candidates;
        passing += scan.passing;
        all = all && scan.extraction_failures == 0;
        if (i + 1 == bases.size()) k4_max_pairs = scan.max_passing_pairs;
    }
    // On 3 x K4 nothing passes all three pairs, so the best fixed cheat
    // escapes exactly 2 of 3 challenges per round.
    all = all && k4_max_pairs == 2;

    const auto gk4 = zkp::make_three_component(base_k4());
    Rng cheat_rng(77);
    const auto cheat_coloring = zkp::random_balanced_coloring(gk4, cheat_rng);
    const auto cheat_p = random_permutation(gk4.nodes, cheat_rng);
    const auto cheat_q = random_permutation(gk4.directed_edge_count(), cheat_rng);
    zkp::FixedTripleProver cheat(
        zkp::build_envelopes(gk4, cheat_coloring, cheat_p, cheat_q));
    const int runs = 100'000;
    const int rounds = 10;
    int accepted = 0;
    for (int run = 0; run < runs; ++run) {
        const auto transcript = zkp::run_coloring_protocol(
            gk4, cheat, rounds, derive_seed(0xAA, static_cast<std::uint64_t>(run)),
            derive_seed(0xBB, static_cast<std::uint64_t>(run)), zkp::CommitMode::ideal);
        if (transcript.accepted) ++accepted;
    }
    const double expect = std::pow(2.0 / 3.0, rounds);
    const double se = std::sqrt(expect * (1 - expect) / runs);
    const double rate = static_cast<double>(accepted) / runs;
    all = all && rate <= expect + 3 * se;

    return {all, fmt("%ld triples on 7 graphs, %ld passed all pairs, every one extracted; "
                     "3xK4 best cheat passes %d/3 pairs, 10-round acceptance %.5f <= %.5f",
                     candidates, passing, k4_max_pairs, rate, expect + 3 * se)};
}

Result iso_protocols() {
    bool all = true;

    // Honest isomorphism proofs: 10^4 runs, all accepted.
    const auto g1 = base_path(4);
    const auto witness = std::vector<int>{2, 0, 3, 1};
    const auto g2 = zkp::apply_permutation(g1, witness);
    int iso_accept = 0;
    for (int run = 0; run < 10'000; ++run) {
        const auto transcript =
            zkp::iso_protocol(g1, g2, witness, 3, derive_seed(0x15, static_cast<std::uint64_t>(run)),
                              derive_seed(0x16, static_cast<std::uint64_t>(run)));
        if (transcript.accepted) ++iso_accept;
    }
    all = all && iso_accept == 10'000;

    // Isomorphic inputs in the non-isomorphism game: success rate 2^-k.
    const int rounds = 10;
    const int runs = 100'000;
    int noniso_accept = 0;
    for (int run = 0; run < runs; ++run) {
        const auto transcript = zkp::noniso_protocol(
            g1, g2, rounds, 5, derive_seed(0x25, static_cast<std::uint64_t>(run)),
            derive_seed(0x26, static_cast<std::uint64_t>(run)));
        if (transcript.accepted) ++noniso_accept;
    }
    const double expect = std::exp2(-rounds);
    const double se = std::sqrt(expect * (1 - expect) / runs);
    const double rate = static_cast<double>(noniso_accept) / runs;
    all = all && std::abs(rate - expect) <= 3 * se;

    // Genuinely non-isomorphic graphs: the honest prover never misses.
    int honest_accept = 0;
    const int honest_runs = 2000;
    for (int run = 0; run < honest_runs; ++run) {
        const auto transcript = zkp::noniso_protocol(
            g1, base_star4(), rounds, 5, derive_seed(0x35, static_cast<std::uint64_t>(run)),
            derive_seed(0x36, static_cast<std::uint64_t>(run)));
        if (transcript.accepted) ++honest_accept;
    }
    all = all && honest_accept == honest_runs;

    return {all, fmt("honest iso %d/10000; iso-inputs noniso rate %.6f in 2^-10 +- %.6f; "
                     "non-iso honest %d/%d",
                     iso_accept, rate, 3 * se, honest_accept, honest_runs)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string filter = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"lottery-exactness", lottery_exactness},
        {"lemma-bound", lemma_bound},
        {"estimator-tail", estimator_tail},
        {"height-optimum", height_optimum},
        {"zk-exactness", zk_exactness},
        {"zk-soundness", zk_soundness},
        {"iso-protocols", iso_protocols},
    };

    bool all = true;
    for (const auto& [name, criterion] : criteria) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        const auto start = std::chrono::steady_clock::now();
        Result result;
        try {
            result = criterion();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %-18s %s (%.1fs)\n", result.pass ? "PASS" : "FAIL", name.c_str(),
                    result.detail.c_str(), seconds);
        std::fflush(stdout);
        all = all && result.pass;
    }
    return all ? 0 : 1;
}
