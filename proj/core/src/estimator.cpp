#include "trustydice/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trustydice/errors.hpp"

namespace trustydice::estimator {

namespace {

// Neumaier-compensated running sum.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

double height(double b) {
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw ValidationError("height: b must be positive and finite");
    }
    return std::log2((b + 1.0 / b) / 2.0);
}

double tight_threshold_sq() { return 6.0; }

double simple_threshold_sq() {
    const double b = std::sqrt(2.0) + 1.0;
    return b * b;
}

void validate_batch(const SampleBatch& batch) {
    if (batch.values.empty() || batch.values.size() != batch.inv_std_bounds.size()) {
        throw ValidationError("SampleBatch: values and inv_std_bounds must have equal nonzero length");
    }
    if (!(batch.epsilon > 0.0) || !std::isfinite(batch.epsilon)) {
        throw ValidationError("SampleBatch: epsilon must be positive and finite");
    }
    for (double v : batch.values) {
        if (!std::isfinite(v)) throw ValidationError("SampleBatch: non-finite value");
    }
    for (double b : batch.inv_std_bounds) {
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw ValidationError("SampleBatch: inv_std_bounds must be positive and finite");
        }
    }
}

GroupPlan plan_groups(const SampleBatch& batch, Mode mode) {
    validate_batch(batch);
    const double threshold_sq = (mode == Mode::tight) ? tight_threshold_sq() : simple_threshold_sq();

    const std::size_t count = batch.values.size();
    std::vector<double> weights(count);
    KahanSum total;
    for (std::size_t i = 0; i < count; ++i) {
        const double be = batch.inv_std_bounds[i] * batch.epsilon;
        weights[i] = be * be;
        total.add(weights[i]);
    }
    if (total.value() < threshold_sq) {
        throw InsufficientDataError(
            "insufficient data for one group: total weight " + std::to_string(total.value()) +
                " below required minimum " + std::to_string(threshold_sq),
            threshold_sq);
    }

    GroupPlan plan;
    plan.mode = mode;
    std::size_t begin = 0;
    KahanSum acc;
    for (std::size_t i = 0; i < count; ++i) {
        acc.add(weights[i]);
        if (acc.value() >= threshold_sq) {
            plan.groups.emplace_back(begin, i + 1);
            plan.b.push_back(std::sqrt(acc.value()));
            begin = i + 1;
            acc = KahanSum{};
        }
    }
    if (begin < count) {
        // Trailing remainder below the threshold: merge into the last
        // closed group (never discard data; its b_j only grows).
        auto& last = plan.groups.back();
        KahanSum merged;
        for (std::size_t i = last.first; i < count; ++i) merged.add(weights[i]);
        last.second = count;
        plan.b.back() = std::sqrt(merged.value());
    }

    plan.n = plan.groups.size();
    const double simple_h = 0.5;  // height(sqrt(2) + 1) exactly
    KahanSum k_sum;
    for (double b : plan.b) {
        const double h = (mode == Mode::tight) ? height(b) : simple_h;
        plan.h.push_back(h);
        k_sum.add(h);
    }
    plan.k = k_sum.value();
    return plan;
}

double group_mean(std::span<const double> values, std::span<const double> weights) {
    if (values.empty() || values.size() != weights.size()) {
        throw ValidationError("group_mean: equal nonzero lengths required");
    }
    KahanSum num;
    KahanSum den;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(weights[i] > 0.0)) throw ValidationError("group_mean: weights must be positive");
        num.add(weights[i] * values[i]);
        den.add(weights[i]);
    }
    return num.value() / den.value();
}

double weighted_median(std::span<const double> points, std::span<const double> weights) {
    if (points.empty() || points.size() != weights.size()) {
        throw ValidationError("weighted_median: equal nonzero lengths required");
    }
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw ValidationError("weighted_median: weights must be positive and finite");
        }
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    KahanSum total;
    for (double w : weights) total.add(w);
    const double half = total.value() / 2.0;
    KahanSum cum;
    for (std::size_t idx : order) {
        cum.add(weights[idx]);
        if (cum.value() >= half) return points[idx];
    }
    return points[order.back()];
}

double failure_bound(double k, std::size_t n) {
    return std::exp2(-k) * std::sqrt(5.0 / static_cast<double>(n));
}

EstimateResult estimate(const SampleBatch& batch, Mode mode) {
    validate_batch(batch);

    // Normalize to epsilon = 1: values /= eps, bounds *= eps. The grouping
    // keys (B_i * eps)^2 are unchanged, so the plan is scale-stable.
    const double eps = batch.epsilon;
    SampleBatch normalized;
    normalized.epsilon = 1.0;
    normalized.values.reserve(batch.values.size());
    normalized.inv_std_bounds.reserve(batch.values.size());
    for (std::size_t i = 0; i < batch.values.size(); ++i) {
        normalized.values.push_back(batch.values[i] / eps);
        normalized.inv_std_bounds.push_back(batch.inv_std_bounds[i] * eps);
    }

    GroupPlan plan = plan_groups(normalized, mode);

    std::vector<double> weights(normalized.values.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = normalized.inv_std_bounds[i] * normalized.inv_std_bounds[i];
    }

    std::vector<double> means;
    std::vector<double> median_weights;
    means.reserve(plan.n);
    median_weights.reserve(plan.n);
    for (std::size_t j = 0; j < plan.n; ++j) {
        const auto [gb, ge] = plan.groups[j];
        means.push_back(group_mean(std::span(normalized.values).subspan(gb, ge - gb),
                                   std::span(weights).subspan(gb, ge - gb)));
        median_weights.push_back(std::log2(plan.b[j]));
    }

    EstimateResult result;
    result.epsilon = eps;
    result.mode = mode;
    result.k = plan.k;
    result.n = plan.n;
    result.failure_bound = failure_bound(plan.k, plan.n);
    result.m_hat = eps * weighted_median(means, median_weights);
    result.group_means.reserve(plan.n);
    for (double x : means) result.group_means.push_back(eps * x);
    return result;
}

}  // namespace trustydice::estimator
