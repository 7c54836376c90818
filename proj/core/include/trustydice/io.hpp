#pragma once

#include <string>

#include "trustydice/estimator.hpp"
#include "trustydice/extractor.hpp"
#include "trustydice/harness.hpp"
#include "trustydice/lottery.hpp"
#include "trustydice/zkp/graph.hpp"

namespace trustydice::io {

// File formats (all JSON):
//   samples:  [{"value": x, "b": B}, ...]
//   source:   {"n": bits, "probs": {"bitstring": p, ...}}
//   tally:    {"candidate": votes, ...}  (entry order preserved)
//   graph:    {"nodes": v, "edges": [[a, b], ...]}  (auto-closed under reversal)

estimator::SampleBatch parse_samples(const std::string& text, double epsilon);
std::string estimate_result_json(const estimator::EstimateResult& result, bool pretty);

extractor::SourceModel parse_source(const std::string& text);
std::string distance_report_json(const extractor::DistanceReport& report, double renyi,
                                 int n, int k, int t, bool pretty);

lottery::Tally parse_tally(const std::string& text);
std::string odds_table_json(const lottery::OddsTable& odds, bool pretty);
std::string tally_json(const lottery::Tally& tally, bool pretty);

zkp::Graph parse_graph(const std::string& text);
std::string graph_json(const zkp::Graph& g, bool pretty);

// Coloring file: {"colors": [...]} covering either component 1 of a
// three-component graph (it gets balanced by rotation) or every node.
std::vector<int> parse_colors(const std::string& text);

harness::TrialSpec parse_trial_spec(const std::string& text, harness::EstimatorConfig& config);
std::string tail_report_json(const harness::TailReport& report, bool pretty);

std::string read_file(const std::string& path);

}  // namespace trustydice::io
