#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "trustydice/errors.hpp"
#include "trustydice/extractor.hpp"
#include "trustydice/rng.hpp"

using namespace trustydice;
using namespace trustydice::extractor;

namespace {

// Independent bit-by-bit Toeplitz evaluator: explicit matrix walk, no
// masks or parity tricks. Oracle for the production evaluator.
std::uint32_t toeplitz_oracle(int n, int k, std::uint64_t key, std::uint32_t x) {
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i) {
        int bit = static_cast<int>((key >> (n + k - 1 + i)) & 1);  // affine offset
        for (int j = 0; j < n; ++j) {
            const int t_ij = static_cast<int>((key >> (i + j)) & 1);
            const int x_j = static_cast<int>((x >> j) & 1);
            bit ^= t_ij & x_j;
        }
        out |= static_cast<std::uint32_t>(bit) << i;
    }
    return out;
}

// Brute-force joint distribution over explicit maps.
std::map<std::uint64_t, double> joint_oracle(const SourceModel& source,
                                             const HashFamily& family) {
    std::map<std::uint64_t, double> table;
    const std::uint64_t keys = 1ull << family.t();
    for (std::uint64_t h = 0; h < keys; ++h) {
        for (const auto& [x, p] : source.probs) {
            table[(h << family.k()) | family.eval(h, x)] +=
                p / static_cast<double>(keys);
        }
    }
    return table;
}

SourceModel flat_source(int n, const std::vector<std::uint32_t>& support) {
    std::vector<std::pair<std::uint32_t, double>> probs;
    const double p = 1.0 / static_cast<double>(support.size());
    for (std::uint32_t x : support) probs.emplace_back(x, p);
    return make_source(n, std::move(probs));
}

SourceModel random_source(int n, int support_size, bool flat, Rng& rng) {
    std::vector<std::uint32_t> pool(1u << n);
    for (std::uint32_t x = 0; x < pool.size(); ++x) pool[x] = x;
    rng.shuffle(pool);
    std::vector<std::pair<std::uint32_t, double>> probs;
    double total = 0.0;
    for (int i = 0; i < support_size; ++i) {
        const double w = flat ? 1.0 : 0.05 + rng.uniform01();
        probs.emplace_back(pool[static_cast<std::size_t>(i)], w);
        total += w;
    }
    for (auto& [x, p] : probs) p /= total;
    // Renormalize the largest entry so the total is exactly double-rounded 1.
    double sum = 0.0;
    for (const auto& [x, p] : probs) sum += p;
    probs.front().second += 1.0 - sum;
    return make_source(n, std::move(probs));
}

}  // namespace

TEST_SUITE_BEGIN("extractor");

TEST_CASE("renyi entropy reference values") {
    std::vector<std::uint32_t> all16(16);
    for (std::uint32_t i = 0; i < 16; ++i) all16[i] = i;
    CHECK(renyi_entropy(flat_source(4, all16)) == doctest::Approx(4.0).epsilon(1e-12));

    const auto point = make_source(4, {{9, 1.0}});
    CHECK(renyi_entropy(point) == doctest::Approx(0.0));
    CHECK(point.renyi == doctest::Approx(0.0));

    std::vector<std::uint32_t> eight{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(renyi_entropy(flat_source(4, eight)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("source validation") {
    CHECK_THROWS_AS(make_source(4, {}), ValidationError);
    CHECK_THROWS_AS(make_source(4, {{1, 0.5}}), ValidationError);           // sums to 0.5
    CHECK_THROWS_AS(make_source(4, {{1, 0.5}, {1, 0.5}}), ValidationError); // duplicate
    CHECK_THROWS_AS(make_source(2, {{7, 1.0}}), ValidationError);           // too wide
    CHECK_THROWS_AS(make_source(4, {{1, -0.25}, {2, 1.25}}), ValidationError);
}

TEST_CASE("toeplitz evaluator matches the bit-by-bit oracle") {
    const auto family = HashFamily::toeplitz(4, 2);
    REQUIRE(family.t() == 7);
    for (std::uint64_t key = 0; key < (1ull << 7); ++key) {
        for (std::uint32_t x = 0; x < 16; ++x) {
            CHECK(family.eval(key, x) == toeplitz_oracle(4, 2, key, x));
        }
    }
}

TEST_CASE("collision fractions of the built-in families") {
    SUBCASE("toeplitz collides on exactly 2^-k of keys, every pair") {
        const auto family = HashFamily::toeplitz(4, 2);
        for (std::uint32_t x = 0; x < 16; ++x) {
            for (std::uint32_t y = 0; y < 16; ++y) {
                if (x == y) continue;
                CHECK(collision_fraction(family, x, y) == 0.25);
            }
        }
        const auto wide = HashFamily::toeplitz(5, 3);
        Rng rng(3);
        for (int i = 0; i < 20; ++i) {
            const auto x = static_cast<std::uint32_t>(rng.below(32));
            auto y = static_cast<std::uint32_t>(rng.below(32));
            if (y == x) y = (y + 1) % 32;
            CHECK(collision_fraction(wide, x, y) == 0.125);
        }
    }
    SUBCASE("xor family never collides") {
        const auto family = HashFamily::xor_shift(4);
        CHECK(collision_fraction(family, 3, 12) == 0.0);
    }
    SUBCASE("constant custom family always collides") {
        const auto family =
            HashFamily::custom(4, 2, 4, [](std::uint64_t, std::uint32_t) { return 0u; });
        CHECK(collision_fraction(family, 1, 2) == 1.0);
    }
    SUBCASE("x = y is out of domain") {
        const auto family = HashFamily::xor_shift(4);
        CHECK_THROWS_AS(collision_fraction(family, 5, 5), ValidationError);
    }
}

TEST_CASE("joint distribution reference cases") {
    SUBCASE("xor family on a uniform source is uniform on (h, a)") {
        std::vector<std::uint32_t> all4{0, 1, 2, 3};
        const auto source = flat_source(2, all4);
        const auto dist = joint_distribution(source, HashFamily::xor_shift(2));
        REQUIRE(dist.probs.size() == 16);
        for (const auto& [z, p] : dist.probs) CHECK(p == doctest::Approx(1.0 / 16).epsilon(1e-14));
    }
    SUBCASE("point mass: P(h, a) = 2^-t [f_h(x0) = a]") {
        const auto source = make_source(3, {{5, 1.0}});
        const auto family = HashFamily::toeplitz(3, 1);
        const auto dist = joint_distribution(source, family);
        REQUIRE(dist.probs.size() == 1u << family.t());
        for (const auto& [z, p] : dist.probs) {
            const std::uint64_t h = z >> 1;
            const std::uint64_t a = z & 1;
            CHECK(a == family.eval(h, 5));
            CHECK(p == doctest::Approx(std::exp2(-family.t())).epsilon(1e-14));
        }
    }
    SUBCASE("toeplitz n=4 k=1 on a flat 8-string source matches the oracle") {
        std::vector<std::uint32_t> low8{0, 1, 2, 3, 4, 5, 6, 7};
        const auto source = flat_source(4, low8);
        const auto family = HashFamily::toeplitz(4, 1);
        const auto dist = joint_distribution(source, family);
        const auto oracle = joint_oracle(source, family);
        REQUIRE(dist.probs.size() == oracle.size());
        for (const auto& [z, p] : dist.probs) {
            REQUIRE(oracle.count(z) == 1);
            CHECK(p == doctest::Approx(oracle.at(z)).epsilon(1e-12));
        }
    }
    SUBCASE("budget guard") {
        std::vector<std::uint32_t> all16(16);
        for (std::uint32_t i = 0; i < 16; ++i) all16[i] = i;
        const auto source = flat_source(4, all16);
        CHECK_THROWS_AS(joint_distribution(source, HashFamily::toeplitz(4, 2), 100),
                        CapacityError);
    }
}

TEST_CASE("distance reference cases") {
    SUBCASE("uniform P has zero distances") {
        std::vector<std::uint32_t> all4{0, 1, 2, 3};
        const auto dist = joint_distribution(flat_source(2, all4), HashFamily::xor_shift(2));
        const auto report = distances(dist, 2.0, 2);
        CHECK(report.l1 == 0.0);
        CHECK(report.l2 == 0.0);
        CHECK(report.holds);
    }
    SUBCASE("point mass on one pair, i = 2: l1 = 3/2, l2 = sqrt(3)") {
        JointDistribution dist;
        dist.t = 1;
        dist.k = 1;
        dist.i = 2;
        dist.probs = {{0, 1.0}};
        const auto report = distances(dist, 0.0, 1);
        CHECK(report.l1 == doctest::Approx(1.5).epsilon(1e-14));
        CHECK(report.l2 == doctest::Approx(1.7320508075688772).epsilon(1e-14));
        CHECK(report.l1 <= report.l2);
    }
    SUBCASE("s and bound bookkeeping") {
        std::vector<std::uint32_t> all4{0, 1, 2, 3};
        const auto dist = joint_distribution(flat_source(2, all4), HashFamily::xor_shift(2));
        const auto report = distances(dist, 5.0, 2);
        CHECK(report.s == doctest::Approx(2.0));
        CHECK(report.bound == doctest::Approx(0.5));
    }
}

TEST_CASE("leftover hash lemma holds on random sources (small scale)") {
    Rng rng(2024);
    for (int n : {3, 4, 5}) {
        for (int k : {1, 2}) {
            const auto family = HashFamily::toeplitz(n, k);
            for (int trial = 0; trial < 10; ++trial) {
                const bool flat = trial % 2 == 0;
                const int max_support = 1 << n;
                const int support = 2 + static_cast<int>(rng.below(
                                            static_cast<std::uint64_t>(max_support - 1)));
                const auto source = random_source(n, support, flat, rng);
                const auto dist = joint_distribution(source, family);
                const auto report = distances(dist, source.renyi, k);
                CHECK(report.l1 <= report.l2);
                CHECK(report.l2 < report.bound);
                CHECK(report.holds);
            }
        }
    }
}

TEST_CASE("extract_stream") {
    SUBCASE("empty stream") {
        const auto family = HashFamily::xor_shift(4);
        CHECK(extract_stream(family, 0b1010, {}).empty());
    }
    SUBCASE("xor identity") {
        const auto family = HashFamily::xor_shift(4);
        const std::vector<std::uint32_t> xs{0b0000};
        const auto ys = extract_stream(family, 0b1010, xs);
        REQUIRE(ys.size() == 1);
        CHECK(ys[0] == 0b1010);
    }
    SUBCASE("toeplitz stream matches the oracle") {
        const auto family = HashFamily::toeplitz(4, 2);
        const std::uint64_t key = 0b0110101;
        const std::vector<std::uint32_t> xs{0, 3, 9, 15, 6};
        const auto ys = extract_stream(family, key, xs);
        REQUIRE(ys.size() == xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            CHECK(ys[i] == toeplitz_oracle(4, 2, key, xs[i]));
        }
    }
    SUBCASE("input wider than n rejected") {
        const auto family = HashFamily::xor_shift(4);
        const std::vector<std::uint32_t> xs{17};
        CHECK_THROWS_AS(extract_stream(family, 1, xs), ValidationError);
    }
}

TEST_SUITE_END();
