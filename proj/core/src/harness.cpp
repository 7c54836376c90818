#include "trustydice/harness.hpp"

#include <cmath>
#include <string>

#include "trustydice/errors.hpp"

namespace trustydice::harness {

double gen_chebyshev_extremal(double mean, double b, Rng& rng) {
    if (!(b > 1.0) || !std::isfinite(b)) {
        throw ValidationError("gen_chebyshev_extremal: b must exceed 1");
    }
    const double upper_mass = 1.0 / (b * b + 1.0);
    return rng.uniform01() <= upper_mass ? mean + b : mean - 1.0 / b;
}

double gen_student_t(int df, Rng& rng) {
    if (df < 3) throw ValidationError("gen_student_t: df must be >= 3 for finite variance");
    // t_df = Z / sqrt(chi2_df / df) with chi2_df a sum of df squared
    // normals; fixed draw count per sample keeps streams aligned.
    double z = 0.0;
    double chi2 = 0.0;
    int produced = 0;
    while (produced < df + 1) {
        const auto [a, b] = rng.normal_pair();
        if (produced == 0) {
            z = a;
        } else {
            chi2 += a * a;
        }
        ++produced;
        if (produced < df + 1) {
            chi2 += b * b;
            ++produced;
        }
    }
    const double t = z / std::sqrt(chi2 / static_cast<double>(df));
    // Var(t_df) = df / (df - 2); rescale to unit variance.
    return t * std::sqrt(static_cast<double>(df - 2) / static_cast<double>(df));
}

namespace {

double draw_sample(const TrialSpec& spec, Rng& rng) {
    if (spec.generator == "chebyshev_extremal") {
        return gen_chebyshev_extremal(spec.true_mean, spec.gen_b, rng);
    }
    if (spec.generator == "student_t") {
        return spec.true_mean + gen_student_t(spec.gen_df, rng);
    }
    if (spec.generator == "constant") {
        return spec.true_mean;
    }
    throw ValidationError("unknown generator '" + spec.generator + "'");
}

}  // namespace

TailReport run_tail_trials(const TrialSpec& spec, const EstimatorConfig& config) {
    if (spec.trials < 1 || spec.batch_size < 1) {
        throw ValidationError("run_tail_trials: trials and batch_size must be positive");
    }
    TailReport report;
    report.trials = spec.trials;

    estimator::SampleBatch batch;
    batch.epsilon = config.epsilon;
    batch.values.resize(static_cast<std::size_t>(spec.batch_size));
    batch.inv_std_bounds.assign(static_cast<std::size_t>(spec.batch_size), 1.0);

    for (int trial = 0; trial < spec.trials; ++trial) {
        Rng rng(derive_seed(spec.master_seed, static_cast<std::uint64_t>(trial)));
        for (auto& value : batch.values) value = draw_sample(spec, rng);
        const auto result = estimator::estimate(batch, config.mode);
        if (trial == 0) {
            report.bound = result.failure_bound;
            report.k = result.k;
            report.n_groups = static_cast<long>(result.n);
        }
        if (std::abs(result.m_hat - spec.true_mean) >= config.epsilon) {
            ++report.empirical_failures;
        }
    }
    report.empirical_rate =
        static_cast<double>(report.empirical_failures) / static_cast<double>(report.trials);
    report.std_error =
        std::sqrt(report.bound * (1.0 - report.bound) / static_cast<double>(report.trials));
    report.pass = report.empirical_rate <= report.bound + 3.0 * report.std_error;
    return report;
}

void enumerate_exact(std::span<const std::uint64_t> radices, std::uint64_t budget,
                     const std::function<void(std::span<const std::uint64_t>)>& visit) {
    std::uint64_t total = 1;
    for (std::uint64_t r : radices) {
        if (r == 0) return;  // empty space
        if (total > budget / r) {
            throw CapacityError("enumerate_exact: space exceeds budget " + std::to_string(budget));
        }
        total *= r;
    }
    std::vector<std::uint64_t> digits(radices.size(), 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        visit(digits);
        for (std::size_t pos = radices.size(); pos-- > 0;) {
            if (++digits[pos] < radices[pos]) break;
            digits[pos] = 0;
        }
    }
}

}  // namespace trustydice::harness
