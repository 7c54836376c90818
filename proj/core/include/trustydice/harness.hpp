#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "trustydice/estimator.hpp"
#include "trustydice/rng.hpp"

namespace trustydice::harness {

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

// Two-point law attaining one-sided Chebyshev equality: mean + b with
// probability 1/(b^2+1), mean - 1/b otherwise. Mean exactly `mean`,
// variance exactly 1 -- the estimator's worst-case shape.
double gen_chebyshev_extremal(double mean, double b, Rng& rng);

// Student-t with df >= 3 degrees of freedom, scaled to unit variance,
// mean 0. Heavy tails, no Chernoff-style decay.
double gen_student_t(int df, Rng& rng);

struct TrialSpec {
    std::string generator;  // "chebyshev_extremal" | "student_t" | "constant"
    double gen_b = 2.0;     // chebyshev_extremal parameter
    int gen_df = 3;         // student_t parameter
    double true_mean = 0.0;
    int trials = 0;
    int batch_size = 0;
    std::uint64_t master_seed = 0;
};

struct EstimatorConfig {
    double epsilon = 1.0;
    estimator::Mode mode = estimator::Mode::tight;
};

struct TailReport {
    long empirical_failures = 0;
    long trials = 0;
    double empirical_rate = 0.0;
    double bound = 0.0;       // 2^{-k} sqrt(5/n) from the fixed group plan
    double std_error = 0.0;   // sqrt(bound (1-bound) / trials)
    double k = 0.0;
    long n_groups = 0;
    bool pass = false;        // empirical rate <= bound + 3 std errors
};

// Per trial: draw a batch (unit-variance samples, B_i = 1), estimate, and
// count |M - true_mean| >= epsilon. Trial i's stream depends only on
// (master_seed, i), so order of execution is irrelevant.
TailReport run_tail_trials(const TrialSpec& spec, const EstimatorConfig& config);

// Visits every tuple of the mixed-radix space exactly once in row-major
// order (last radix fastest). Deterministic, budget-guarded.
void enumerate_exact(std::span<const std::uint64_t> radices, std::uint64_t budget,
                     const std::function<void(std::span<const std::uint64_t>)>& visit);

}  // namespace trustydice::harness
