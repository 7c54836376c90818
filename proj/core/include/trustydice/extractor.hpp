#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace trustydice::extractor {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr int kMaxKeyBits = 24;

// Explicit distribution G over n-bit strings; zero entries omitted.
struct SourceModel {
    int n = 0;
    std::vector<std::pair<std::uint32_t, double>> probs;  // sorted by string value
    double renyi = 0.0;  // order-2 Renyi entropy: -log2 sum G(x)^2
};

SourceModel make_source(int n, std::vector<std::pair<std::uint32_t, double>> probs);
double renyi_entropy(const SourceModel& source);

enum class FamilyKind { toeplitz, xor_shift, custom };

// Keyed family f_h : {0,1}^n -> {0,1}^k, h in {0,1}^t. The built-in kinds
// collide on exactly a 2^-k fraction of keys (Toeplitz) or never (XOR).
class HashFamily {
public:
    // GF(2) Toeplitz matrix with an affine offset. The key packs n+k-1
    // diagonal bits (low) and k offset bits (high): t = n + 2k - 1.
    static HashFamily toeplitz(int n, int k);
    // f_h(x) = x xor h, with n = k = t.
    static HashFamily xor_shift(int n);
    static HashFamily custom(int n, int k, int t,
                             std::function<std::uint32_t(std::uint64_t, std::uint32_t)> eval);

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    FamilyKind kind() const { return kind_; }

    std::uint32_t eval(std::uint64_t key, std::uint32_t x) const;

private:
    HashFamily(int n, int k, int t, FamilyKind kind,
               std::function<std::uint32_t(std::uint64_t, std::uint32_t)> eval);
    int n_, k_, t_;
    FamilyKind kind_;
    std::function<std::uint32_t(std::uint64_t, std::uint32_t)> eval_;
};

// Exact fraction of keys h with f_h(x) = f_h(y), enumerated over all 2^t keys.
double collision_fraction(const HashFamily& family, std::uint32_t x, std::uint32_t y);

// P(h, a) = 2^-t * G(f_h^{-1}(a)) on i = t + k bits; zero entries omitted.
struct JointDistribution {
    int t = 0;
    int k = 0;
    int i = 0;  // t + k
    std::vector<std::pair<std::uint64_t, double>> probs;  // key (h << k) | a, sorted
};

JointDistribution joint_distribution(const SourceModel& source, const HashFamily& family,
                                     std::uint64_t budget = kDefaultBudget);

void validate_joint(const JointDistribution& dist);

// L1 and L2 distances from the uniform distribution on i bits, with
// s = m - k - 1 and the Leftover Hash Lemma bound 2^{-s/2}.
struct DistanceReport {
    double l1 = 0.0;
    double l2 = 0.0;
    double s = 0.0;
    double bound = 0.0;
    bool holds = false;  // l1 <= l2 and l2 < bound
};

DistanceReport distances(const JointDistribution& dist, double m, int k);

// Applies f_h elementwise; the caller owns the uniform sampling of h,
// which may be reused across many inputs.
std::vector<std::uint32_t> extract_stream(const HashFamily& family, std::uint64_t key,
                                          std::span<const std::uint32_t> xs);

}  // namespace trustydice::extractor
