#pragma once
#include <cstdint>
#include <vector>

#include "tbp/instance.hpp"
#include "tbp/policy.hpp"

namespace tbp {

struct ExperimentConfig {
    BanditInstance instance;
    int setup_id = 0; // 1..6 for the named setups, 0 for custom means
    std::vector<long long> budgets;
    std::vector<PolicyConfig> policies;
    long long runs = 1000;
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<double> alphas; // used by the alpha sweep only
};

struct RegretSummary {
    std::vector<long long> budgets;
    std::vector<PolicyConfig> policies;
    // per_run[policy][budget][run]: misclassified arms in that run
    std::vector<std::vector<std::vector<int>>> per_run;
    std::vector<std::vector<double>> mean_regret; // [policy][budget]
    std::vector<std::vector<double>> se_regret;
    std::vector<std::vector<double>> log10_mean; // -inf when the mean is 0
};

// Runs every (policy, budget, run) cell. Run r of every policy consumes the
// same counter-based reward streams (common random numbers), so per-run
// regrets are paired across policies. Worker threads split the cells but
// cannot affect any value; the output is a pure function of the config.
RegretSummary run_experiment(const ExperimentConfig& config);

struct PairwiseComparison {
    std::size_t baseline = 0;
    std::vector<std::size_t> others;
    std::vector<std::vector<double>> p_value;   // [other][budget]
    std::vector<std::vector<double>> mean_diff; // baseline mean - other mean
};

// Paired t-tests of the baseline policy against each listed other (all
// non-baseline policies when `others` is empty).
PairwiseComparison compare_policies(const RegretSummary& summary,
                                    std::size_t baseline,
                                    std::vector<std::size_t> others = {});
PairwiseComparison compare_policies(const ExperimentConfig& config,
                                    std::size_t baseline,
                                    std::vector<std::size_t> others = {});

} // namespace tbp
