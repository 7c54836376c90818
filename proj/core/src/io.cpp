#include "trustydice/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trustydice/bits.hpp"
#include "trustydice/errors.hpp"

namespace trustydice::io {

using json = nlohmann::ordered_json;

namespace {

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError(std::string(what) + ": malformed JSON");
    return j;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

estimator::SampleBatch parse_samples(const std::string& text, double epsilon) {
    const json j = parse_or_throw(text, "samples");
    if (!j.is_array()) throw ValidationError("samples: expected a JSON array");
    estimator::SampleBatch batch;
    batch.epsilon = epsilon;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("value") || !item.contains("b")) {
            throw ValidationError("samples: entries need 'value' and 'b'");
        }
        batch.values.push_back(item["value"].get<double>());
        batch.inv_std_bounds.push_back(item["b"].get<double>());
    }
    estimator::validate_batch(batch);
    return batch;
}

std::string estimate_result_json(const estimator::EstimateResult& result, bool pretty) {
    json j;
    j["m_hat"] = result.m_hat;
    j["epsilon"] = result.epsilon;
    j["mode"] = result.mode == estimator::Mode::tight ? "tight" : "simple";
    j["k"] = result.k;
    j["n"] = result.n;
    j["failure_bound"] = result.failure_bound;
    j["group_means"] = result.group_means;
    return dump(j, pretty);
}

extractor::SourceModel parse_source(const std::string& text) {
    const json j = parse_or_throw(text, "source");
    if (!j.is_object() || !j.contains("n") || !j.contains("probs")) {
        throw ValidationError("source: expected {n, probs}");
    }
    const int n = j["n"].get<int>();
    std::vector<std::pair<std::uint32_t, double>> probs;
    for (const auto& [key, value] : j["probs"].items()) {
        probs.emplace_back(parse_bits(key, n), value.get<double>());
    }
    return extractor::make_source(n, std::move(probs));
}

std::string distance_report_json(const extractor::DistanceReport& report, double renyi,
                                 int n, int k, int t, bool pretty) {
    json j;
    j["n"] = n;
    j["k"] = k;
    j["t"] = t;
    j["renyi"] = renyi;
    j["l1"] = report.l1;
    j["l2"] = report.l2;
    j["s"] = report.s;
    j["bound"] = report.bound;
    j["holds"] = report.holds;
    return dump(j, pretty);
}

lottery::Tally parse_tally(const std::string& text) {
    const json j = parse_or_throw(text, "tally");
    if (!j.is_object()) throw ValidationError("tally: expected a JSON object");
    lottery::Tally tally;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_unsigned()) {
            throw ValidationError("tally: votes must be nonnegative integers");
        }
        tally.entries.emplace_back(key, value.get<std::uint64_t>());
    }
    lottery::validate_tally(tally);
    return tally;
}

std::string odds_table_json(const lottery::OddsTable& odds, bool pretty) {
    json j;
    j["exponent"] = odds.exponent;
    j["denominator"] = odds.denominator.to_decimal_string();
    json entries = json::array();
    for (const auto& entry : odds.entries) {
        json e;
        e["id"] = entry.id;
        e["weight"] = entry.weight.to_decimal_string();
        e["fraction"] = entry.probability.to_string();
        e["decimal"] = entry.probability.to_double();
        entries.push_back(e);
    }
    j["odds"] = entries;
    return dump(j, pretty);
}

std::string tally_json(const lottery::Tally& tally, bool pretty) {
    json j;
    for (const auto& [id, votes] : tally.entries) j[id] = votes;
    return dump(j, pretty);
}

zkp::Graph parse_graph(const std::string& text) {
    const json j = parse_or_throw(text, "graph");
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges")) {
        throw ValidationError("graph: expected {nodes, edges}");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("graph: edges are [a, b] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return zkp::Graph::undirected(j["nodes"].get<int>(), edges);
}

std::string graph_json(const zkp::Graph& g, bool pretty) {
    json j;
    j["nodes"] = g.nodes;
    json edges = json::array();
    for (const auto& [a, b] : g.edges) {
        if (a < b) edges.push_back(json::array({a, b}));
    }
    j["edges"] = edges;
    return dump(j, pretty);
}

std::vector<int> parse_colors(const std::string& text) {
    const json j = parse_or_throw(text, "coloring");
    if (!j.is_object() || !j.contains("colors") || !j["colors"].is_array()) {
        throw ValidationError("coloring: expected {colors: [...]}");
    }
    std::vector<int> colors;
    for (const auto& c : j["colors"]) colors.push_back(c.get<int>());
    return colors;
}

harness::TrialSpec parse_trial_spec(const std::string& text, harness::EstimatorConfig& config) {
    const json j = parse_or_throw(text, "trial spec");
    if (!j.is_object()) throw ValidationError("trial spec: expected a JSON object");
    harness::TrialSpec spec;
    spec.generator = j.value("generator", std::string("chebyshev_extremal"));
    spec.gen_b = j.value("b", 2.0);
    spec.gen_df = j.value("df", 3);
    spec.true_mean = j.value("mean", 0.0);
    spec.trials = j.value("trials", 10000);
    spec.batch_size = j.value("batch", 60);
    spec.master_seed = j.value("master_seed", std::uint64_t{0});
    config.epsilon = j.value("epsilon", 1.0);
    const std::string mode = j.value("mode", std::string("tight"));
    if (mode != "tight" && mode != "simple") {
        throw ValidationError("trial spec: mode must be tight or simple");
    }
    config.mode = mode == "tight" ? estimator::Mode::tight : estimator::Mode::simple;
    return spec;
}

std::string tail_report_json(const harness::TailReport& report, bool pretty) {
    json j;
    j["trials"] = report.trials;
    j["empirical_failures"] = report.empirical_failures;
    j["empirical_rate"] = report.empirical_rate;
    j["bound"] = report.bound;
    j["std_error"] = report.std_error;
    j["k"] = report.k;
    j["n_groups"] = report.n_groups;
    j["pass"] = report.pass;
    return dump(j, pretty);
}

}  // namespace trustydice::io
