#pragma once
#include <span>
#include <string>
#include <vector>

#include "tbp/instance.hpp"
#include "tbp/rng.hpp"

namespace tbp {

enum class PolicyKind { LSA, APT, UCBE, OptKG, Uniform };

struct PolicyConfig {
    PolicyKind kind = PolicyKind::LSA;
    double alpha = 1.35;   // LSA: weight of the empirical-gap term
    double epsilon = 0.0;  // APT: precision added to the empirical gap
    int exponent = 0;      // UCBE: a = 4^exponent * (T - K) / H
    double prior_a = 1.0;  // Opt-KG: Beta prior
    double prior_b = 1.0;

    std::string name() const;
    std::string params() const; // "alpha=1.35", "a=1;b=1", "" for Uniform
};

// Throws std::invalid_argument when a parameter is out of range for its kind.
void validate_policy(const PolicyConfig& config);

// Sufficient statistics a sampling rule may look at.
struct PolicyState {
    std::vector<long long> pulls;
    std::vector<double> reward_sums;
    long long round = 0; // total pulls so far

    explicit PolicyState(int num_arms);
    double mean(int i) const;
};

// Instance facts available to a policy. budget and hardness are tuning
// inputs for UCBE (hardness is computed from the true gaps); the other
// policies ignore them.
struct InstanceMeta {
    int num_arms = 0;
    double threshold = 0.5;
    long long budget = 0;
    double hardness = 0.0;
};

// Next arm once every arm has at least one pull. Ties resolve to the lowest
// index. Uniform is positional (round mod K); the others minimize a per-arm
// score:
//   LSA:    alpha * n_i * gap_i^2 + 0.5 * ln(n_i)
//   APT:    sqrt(n_i) * (gap_i + epsilon)
//   UCBE:   gap_i - sqrt(a / n_i)
//   Opt-KG: largest one-step gain in expected labeling accuracy under
//           Beta posteriors (threshold 0.5 only), i.e. an argmax.
int select_arm(const PolicyState& state, const PolicyConfig& config,
               const InstanceMeta& meta);

struct RunResult {
    std::vector<char> decisions; // 1 = labeled at-or-above the threshold
    std::vector<long long> pulls;
    std::vector<double> means;
};

// Pull each arm once, then follow the sampling rule until exactly `budget`
// pulls are spent. Decision for arm i is (empirical mean >= threshold).
RunResult run_policy(const BanditInstance& instance, const PolicyConfig& config,
                     long long budget, RunRewards& rewards);

// Number of arms whose decision disagrees with the true label.
int aggregate_regret(const std::vector<char>& decisions,
                     const BanditInstance& instance);

namespace detail {

// Score of one arm for the score-based policies; pure in (pulls, sums).
double policy_score(const PolicyState& state, int arm,
                    const PolicyConfig& config, const InstanceMeta& meta);

int argmin_lowest(std::span<const double> values);

// Expected labeling accuracy of a Beta(a, b) posterior at threshold 1/2,
// and the optimistic one-step gain from one more sample.
double optkg_accuracy(double a, double b);
double optkg_gain(double a, double b);

} // namespace detail
} // namespace tbp
