#include "trustydice/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "trustydice/bits.hpp"
#include "trustydice/errors.hpp"

namespace trustydice::extractor {

namespace {

void check_bits(int n, const char* what) {
    if (n < 1 || n > 30) {
        throw ValidationError(std::string(what) + " bit width out of range [1, 30]");
    }
}

}  // namespace

SourceModel make_source(int n, std::vector<std::pair<std::uint32_t, double>> probs) {
    check_bits(n, "source");
    if (probs.empty()) throw ValidationError("source: empty support");
    std::sort(probs.begin(), probs.end());
    long double total = 0.0L;
    long double sq = 0.0L;
    std::uint32_t prev = 0;
    bool first = true;
    for (const auto& [x, p] : probs) {
        if (!first && x == prev) throw ValidationError("source: duplicate support string");
        prev = x;
        first = false;
        if (x >> n) throw ValidationError("source: support string wider than n bits");
        if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("source: invalid probability");
        total += p;
        sq += static_cast<long double>(p) * p;
    }
    if (std::abs(static_cast<double>(total) - 1.0) > 1e-12) {
        throw ValidationError("source: probabilities sum to " +
                              std::to_string(static_cast<double>(total)) + ", not 1");
    }
    SourceModel source;
    source.n = n;
    source.probs = std::move(probs);
    source.renyi = -std::log2(static_cast<double>(sq));
    return source;
}

double renyi_entropy(const SourceModel& source) {
    long double sq = 0.0L;
    for (const auto& [x, p] : source.probs) sq += static_cast<long double>(p) * p;
    return -std::log2(static_cast<double>(sq));
}

HashFamily::HashFamily(int n, int k, int t, FamilyKind kind,
                       std::function<std::uint32_t(std::uint64_t, std::uint32_t)> eval)
    : n_(n), k_(k), t_(t), kind_(kind), eval_(std::move(eval)) {}

HashFamily HashFamily::toeplitz(int n, int k) {
    check_bits(n, "input");
    check_bits(k, "output");
    const int t = n + 2 * k - 1;
    if (t > 62) throw ValidationError("toeplitz: key too wide");
    const std::uint64_t n_mask = (1ull << n) - 1;
    auto eval = [n, k, n_mask](std::uint64_t key, std::uint32_t x) -> std::uint32_t {
        // Row i of the Toeplitz matrix is diagonal bits [i, i+n); output
        // bit i = <row_i, x> + offset_i over GF(2).
        const std::uint64_t diag = key;                 // low n+k-1 bits
        const std::uint64_t offset = key >> (n + k - 1);  // next k bits
        std::uint32_t out = 0;
        for (int i = 0; i < k; ++i) {
            const std::uint64_t row = (diag >> i) & n_mask;
            const std::uint32_t bit =
                static_cast<std::uint32_t>(parity64(row & x) ^ static_cast<int>((offset >> i) & 1));
            out |= bit << i;
        }
        return out;
    };
    return HashFamily(n, k, t, FamilyKind::toeplitz, eval);
}

HashFamily HashFamily::xor_shift(int n) {
    check_bits(n, "input");
    const std::uint64_t mask = (1ull << n) - 1;
    auto eval = [mask](std::uint64_t key, std::uint32_t x) -> std::uint32_t {
        return static_cast<std::uint32_t>((key & mask) ^ x);
    };
    return HashFamily(n, n, n, FamilyKind::xor_shift, eval);
}

HashFamily HashFamily::custom(int n, int k, int t,
                              std::function<std::uint32_t(std::uint64_t, std::uint32_t)> eval) {
    check_bits(n, "input");
    check_bits(k, "output");
    if (t < 1 || t > 62) throw ValidationError("custom family: key width out of range");
    return HashFamily(n, k, t, FamilyKind::custom, std::move(eval));
}

std::uint32_t HashFamily::eval(std::uint64_t key, std::uint32_t x) const {
    if (key >> t_) throw ValidationError("hash key wider than t bits");
    if (x >> n_) throw ValidationError("hash input wider than n bits");
    return eval_(key, x) & ((1u << k_) - 1u);
}

double collision_fraction(const HashFamily& family, std::uint32_t x, std::uint32_t y) {
    if (x == y) throw ValidationError("collision_fraction: x and y must differ");
    if (family.t() > kMaxKeyBits) {
        throw CapacityError("collision_fraction: key space 2^" + std::to_string(family.t()) +
                            " too large for exhaustive enumeration");
    }
    const std::uint64_t keys = 1ull << family.t();
    std::uint64_t hits = 0;
    for (std::uint64_t h = 0; h < keys; ++h) {
        if (family.eval(h, x) == family.eval(h, y)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(keys);
}

JointDistribution joint_distribution(const SourceModel& source, const HashFamily& family,
                                     std::uint64_t budget) {
    if (family.n() != source.n) throw ValidationError("joint_distribution: family n != source n");
    if (family.t() > kMaxKeyBits) {
        throw CapacityError("joint_distribution: key space 2^" + std::to_string(family.t()) +
                            " exceeds the enumeration cap");
    }
    const std::uint64_t keys = 1ull << family.t();
    const std::uint64_t work = keys * static_cast<std::uint64_t>(source.probs.size());
    if (work > budget) {
        throw CapacityError("joint_distribution: work " + std::to_string(work) +
                            " exceeds budget " + std::to_string(budget));
    }

    JointDistribution dist;
    dist.t = family.t();
    dist.k = family.k();
    dist.i = dist.t + dist.k;
    const double key_weight = std::exp2(-static_cast<double>(dist.t));

    if (dist.i <= 22) {
        std::vector<double> dense(1ull << dist.i, 0.0);
        for (std::uint64_t h = 0; h < keys; ++h) {
            for (const auto& [x, p] : source.probs) {
                const std::uint64_t z = (h << family.k()) | family.eval(h, x);
                dense[z] += key_weight * p;
            }
        }
        for (std::uint64_t z = 0; z < dense.size(); ++z) {
            if (dense[z] != 0.0) dist.probs.emplace_back(z, dense[z]);
        }
    } else {
        std::unordered_map<std::uint64_t, double> sparse;
        sparse.reserve(source.probs.size() * 4);
        for (std::uint64_t h = 0; h < keys; ++h) {
            for (const auto& [x, p] : source.probs) {
                const std::uint64_t z = (h << family.k()) | family.eval(h, x);
                sparse[z] += key_weight * p;
            }
        }
        dist.probs.assign(sparse.begin(), sparse.end());
        std::sort(dist.probs.begin(), dist.probs.end());
    }
    validate_joint(dist);
    return dist;
}

void validate_joint(const JointDistribution& dist) {
    long double total = 0.0L;
    for (const auto& [z, p] : dist.probs) {
        if (!(p >= 0.0)) throw ValidationError("joint distribution: negative probability");
        total += p;
    }
    if (std::abs(static_cast<double>(total) - 1.0) > 1e-12) {
        throw ValidationError("joint distribution: total probability != 1");
    }
    // Key marginal: for each h present, sum_a P(h, a) = 2^-t.
    const double per_key = std::exp2(-static_cast<double>(dist.t));
    long double acc = 0.0L;
    for (std::size_t idx = 0; idx < dist.probs.size(); ++idx) {
        acc += dist.probs[idx].second;
        const std::uint64_t h = dist.probs[idx].first >> dist.k;
        const bool last_of_key = (idx + 1 == dist.probs.size()) ||
                                 ((dist.probs[idx + 1].first >> dist.k) != h);
        if (last_of_key) {
            if (std::abs(static_cast<double>(acc) - per_key) > 1e-12) {
                throw ValidationError("joint distribution: key marginal is not uniform");
            }
            acc = 0.0L;
        }
    }
}

DistanceReport distances(const JointDistribution& dist, double m, int k) {
    const double u = std::exp2(-static_cast<double>(dist.i));
    const double space = std::exp2(static_cast<double>(dist.i));
    long double l1 = 0.0L;
    long double sq = 0.0L;
    for (const auto& [z, p] : dist.probs) {
        const double d = p - u;
        l1 += std::abs(d);
        sq += static_cast<long double>(d) * d;
    }
    // Entries omitted from the sparse map are exact zeros.
    const double zero_count = space - static_cast<double>(dist.probs.size());
    l1 += static_cast<long double>(zero_count) * u;
    sq += static_cast<long double>(zero_count) * u * u;

    DistanceReport report;
    report.l1 = static_cast<double>(l1);
    report.l2 = std::sqrt(static_cast<double>(static_cast<long double>(space) * sq));
    report.s = m - k - 1;
    report.bound = std::exp2(-report.s / 2.0);
    report.holds = report.l1 <= report.l2 && report.l2 < report.bound;
    return report;
}

std::vector<std::uint32_t> extract_stream(const HashFamily& family, std::uint64_t key,
                                          std::span<const std::uint32_t> xs) {
    if (key >> family.t()) throw ValidationError("extract_stream: key wider than t bits");
    std::vector<std::uint32_t> out;
    out.reserve(xs.size());
    for (std::uint32_t x : xs) {
        if (x >> family.n()) throw ValidationError("extract_stream: input wider than n bits");
        out.push_back(family.eval(key, x));
    }
    return out;
}

}  // namespace trustydice::extractor
