#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(TRUSTY_DICE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/td_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("version flag") {
    const auto result = run("--version");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("trusty-dice") != std::string::npos);
}

TEST_CASE("unknown subcommand is a usage error") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("estimate on constant data returns the constant") {
    std::string samples = "[";
    for (int i = 0; i < 12; ++i) {
        samples += std::string(i ? "," : "") + R"({"value": 7.5, "b": 1.0})";
    }
    samples += "]";
    const auto path = write_temp("const.json", samples);
    const auto result = run("estimate --in " + path + " --epsilon 1 --mode tight");
    CHECK(result.exit_code == 0);
    const auto j = json::parse(result.out);
    CHECK(j["m_hat"].get<double>() == 7.5);
    CHECK(j["n"].get<int>() == 2);
}

TEST_CASE("estimate below the group threshold is a validation error") {
    const auto path = write_temp("small.json", R"([{"value": 1, "b": 1}, {"value": 2, "b": 1}])");
    CHECK(run("estimate --in " + path + " --epsilon 1 --mode tight").exit_code == 2);
}

TEST_CASE("estimate output is byte-identical across runs") {
    const auto path =
        write_temp("det.json", R"([{"value": 3, "b": 1}, {"value": 1, "b": 2}, {"value": 4, "b": 1},
                                  {"value": 1, "b": 1}, {"value": 5, "b": 1}, {"value": 9, "b": 1}])");
    const auto a = run("estimate --in " + path + " --epsilon 2 --mode simple");
    const auto b = run("estimate --in " + path + " --epsilon 2 --mode simple");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("lottery odds reports exact reduced fractions") {
    const auto path = write_temp(
        "paper8.json",
        R"({"leader":60,"rival":25,"third":10,"p1":1,"p2":1,"p3":1,"p4":1,"p5":1})");
    const auto result = run("lottery odds --tally " + path);
    CHECK(result.exit_code == 0);
    const auto j = json::parse(result.out);
    CHECK(j["denominator"] == "4330");
    CHECK(j["odds"][0]["fraction"] == "360/433");   // 3600/4330 reduced
    CHECK(j["odds"][3]["fraction"] == "1/4330");    // five of these: 5/4330 = 1/866
    CHECK(j["odds"][0]["weight"] == "3600");
}

TEST_CASE("lottery draw is deterministic per seed") {
    const auto path = write_temp("two.json", R"({"a": 3, "b": 1})");
    const auto first = run("lottery draw --tally " + path + " --seed 11");
    const auto second = run("lottery draw --tally " + path + " --seed 11");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    const auto smoothed = run("lottery draw --tally " + path + " --seed 11 --smooth");
    CHECK(smoothed.exit_code == 0);
}

TEST_CASE("TRUSTY_DICE_SEED env fallback matches the --seed flag") {
    const auto path = write_temp("env.json", R"({"a": 5, "b": 5, "c": 5})");
    const auto flagged = run("lottery draw --tally " + path + " --seed 31");
    setenv("TRUSTY_DICE_SEED", "31", 1);
    const auto via_env = run("lottery draw --tally " + path);
    unsetenv("TRUSTY_DICE_SEED");
    CHECK(flagged.exit_code == 0);
    CHECK(via_env.out == flagged.out);
}

TEST_CASE("lottery rejects an all-zero tally") {
    const auto path = write_temp("zeros.json", R"({"a": 0, "b": 0})");
    CHECK(run("lottery odds --tally " + path).exit_code == 2);
}

TEST_CASE("extract verify holds on the n=4 fixture") {
    json probs;
    for (int x = 0; x < 8; ++x) {
        char buf[5];
        std::snprintf(buf, sizeof(buf), "%c%c%c%c", '0' + ((x >> 3) & 1), '0' + ((x >> 2) & 1),
                      '0' + ((x >> 1) & 1), '0' + (x & 1));
        probs[buf] = 0.125;
    }
    json source;
    source["n"] = 4;
    source["probs"] = probs;
    const auto path = write_temp("source4.json", source.dump());
    const auto result = run("extract verify --source " + path + " --family toeplitz --k 2");
    CHECK(result.exit_code == 0);
    const auto j = json::parse(result.out);
    CHECK(j["holds"].get<bool>());
    CHECK(j["renyi"].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("extract verify exceeding the budget is a capacity error") {
    json source;
    source["n"] = 8;
    json probs;
    for (int x = 0; x < 16; ++x) {
        std::string key;
        for (int bit = 7; bit >= 0; --bit) key += ((x >> bit) & 1) ? '1' : '0';
        probs[key] = 1.0 / 16;
    }
    source["probs"] = probs;
    const auto path = write_temp("source8.json", source.dump());
    CHECK(run("extract verify --source " + path + " --family toeplitz --k 3 --budget 100")
              .exit_code == 3);
}

TEST_CASE("extract run applies the xor family") {
    const auto bits = write_temp("bits.txt", "0000\n1010\n1111\n");
    const auto result = run("extract run --key a --in " + bits + " --family xor_shift --n 4 --k 4");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "1010\n0000\n0101\n");
}

TEST_CASE("zk color accepts an honest proof") {
    const auto graph = write_temp("g6.json", R"({"nodes": 6, "edges": [[0,1],[2,3],[4,5]]})");
    const auto colors = write_temp("c6.json", R"({"colors": [1, 2]})");
    const auto result = run("zk color --graph " + graph + " --coloring " + colors +
                            " --rounds 4 --seed 3 --commit hash");
    CHECK(result.exit_code == 0);
    const auto j = json::parse(result.out);
    CHECK(j["accepted"].get<bool>());
    CHECK(j["protocol"] == "coloring");
    // Deterministic transcript for fixed seed.
    const auto again = run("zk color --graph " + graph + " --coloring " + colors +
                           " --rounds 4 --seed 3 --commit hash");
    CHECK(again.out == result.out);
}

TEST_CASE("zk color rejects an improper coloring file") {
    const auto graph = write_temp("g6b.json", R"({"nodes": 6, "edges": [[0,1],[2,3],[4,5]]})");
    const auto colors = write_temp("c6b.json", R"({"colors": [1, 1]})");
    CHECK(run("zk color --graph " + graph + " --coloring " + colors + " --seed 3").exit_code == 2);
}

TEST_CASE("zk iso proves isomorphic graphs and refuses others") {
    const auto g1 = write_temp("iso1.json", R"({"nodes": 4, "edges": [[0,1],[1,2],[2,3]]})");
    const auto g2 = write_temp("iso2.json", R"({"nodes": 4, "edges": [[2,0],[0,3],[3,1]]})");
    const auto ok = run("zk iso --g1 " + g1 + " --g2 " + g2 + " --rounds 8 --seed 5");
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out)["accepted"].get<bool>());

    const auto star = write_temp("iso3.json", R"({"nodes": 4, "edges": [[0,1],[0,2],[0,3]]})");
    CHECK(run("zk iso --g1 " + g1 + " --g2 " + star + " --rounds 8 --seed 5").exit_code == 1);
}

TEST_CASE("zk noniso accepts distinguishable graphs") {
    const auto g1 = write_temp("ni1.json", R"({"nodes": 4, "edges": [[0,1],[1,2],[2,3]]})");
    const auto star = write_temp("ni2.json", R"({"nodes": 4, "edges": [[0,1],[0,2],[0,3]]})");
    const auto result =
        run("zk noniso --g1 " + g1 + " --g2 " + star + " --rounds 5 --subrounds 4 --seed 2");
    CHECK(result.exit_code == 0);
    CHECK(json::parse(result.out)["accepted"].get<bool>());
}

TEST_CASE("bench tail passes on a quick spec") {
    const auto spec = write_temp("spec.json",
                                 R"({"generator": "chebyshev_extremal", "b": 2.449489742783178,
                                     "mean": 1.25, "trials": 400, "batch": 60, "epsilon": 1.0,
                                     "mode": "tight", "master_seed": 7})");
    const auto result = run("bench tail --spec " + spec);
    CHECK(result.exit_code == 0);
    const auto j = json::parse(result.out);
    CHECK(j["pass"].get<bool>());
    CHECK(j["n_groups"].get<int>() == 10);
}

TEST_CASE("malformed input files are validation errors") {
    const auto bad = write_temp("bad.json", "{nope");
    CHECK(run("estimate --in " + bad + " --epsilon 1").exit_code == 2);
    CHECK(run("lottery odds --tally " + bad).exit_code == 2);
    CHECK(run("zk color --graph " + bad + " --coloring " + bad).exit_code == 2);
    CHECK(run("estimate --in /nonexistent.json --epsilon 1").exit_code == 2);
}

TEST_SUITE_END();
