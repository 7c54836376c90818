#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace trustydice::estimator {

// Independent observations X_i with per-sample lower bounds B_i on the
// inverse standard deviation (B_i^2 <= 1/variance_i) and accuracy target
// epsilon. Nothing else is assumed about the distributions.
struct SampleBatch {
    std::vector<double> values;
    std::vector<double> inv_std_bounds;
    double epsilon = 1.0;
};

enum class Mode { tight, simple };

// Greedy in-order partition of the samples into groups whose combined
// inverse-variance bound b_j^2 = sum of (B_i * epsilon)^2 crosses the
// mode threshold: 6 in tight mode, (sqrt(2)+1)^2 in simple mode.
struct GroupPlan {
    // Contiguous [begin, end) index ranges, in input order.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    std::vector<double> b;  // per-group combined inverse-std bound
    std::vector<double> h;  // per-group height
    double k = 0.0;         // sum of heights
    std::size_t n = 0;      // group count
    Mode mode = Mode::tight;
};

struct EstimateResult {
    double m_hat = 0.0;
    double epsilon = 1.0;
    double k = 0.0;
    std::size_t n = 0;
    double failure_bound = 0.0;  // 2^{-k} * sqrt(5/n), bounds P(|M - m| >= epsilon)
    std::vector<double> group_means;
    Mode mode = Mode::tight;
};

// log2((b + 1/b) / 2). Symmetric under b <-> 1/b, zero at b = 1,
// strictly increasing for b > 1.
double height(double b);

double tight_threshold_sq();   // 6, the optimum of h(b)/b^2
double simple_threshold_sq();  // (sqrt(2)+1)^2

void validate_batch(const SampleBatch& batch);

GroupPlan plan_groups(const SampleBatch& batch, Mode mode);

// Sum w_i x_i / sum w_i.
double group_mean(std::span<const double> values, std::span<const double> weights);

// Smallest point whose cumulative weight reaches half the total, points
// sorted ascending. Invariant under positive rescaling of the weights.
double weighted_median(std::span<const double> points, std::span<const double> weights);

EstimateResult estimate(const SampleBatch& batch, Mode mode);

double failure_bound(double k, std::size_t n);

}  // namespace trustydice::estimator
