#include "tbp/policy.hpp"

#include <cmath>
#include <stdexcept>

#include "tbp/csv.hpp"

namespace tbp {

std::string PolicyConfig::name() const {
    switch (kind) {
    case PolicyKind::LSA: return "LSA";
    case PolicyKind::APT: return "APT";
    case PolicyKind::UCBE: return "UCBE";
    case PolicyKind::OptKG: return "OptKG";
    case PolicyKind::Uniform: return "Uniform";
    }
    throw std::logic_error("unreachable policy kind");
}

std::string PolicyConfig::params() const {
    switch (kind) {
    case PolicyKind::LSA: return "alpha=" + format_double(alpha);
    case PolicyKind::APT: return "epsilon=" + format_double(epsilon);
    case PolicyKind::UCBE: return "exponent=" + std::to_string(exponent);
    case PolicyKind::OptKG:
        return "a=" + format_double(prior_a) + ";b=" + format_double(prior_b);
    case PolicyKind::Uniform: return "";
    }
    throw std::logic_error("unreachable policy kind");
}

void validate_policy(const PolicyConfig& config) {
    switch (config.kind) {
    case PolicyKind::LSA:
        if (!(config.alpha > 0.0))
            throw std::invalid_argument("LSA: alpha must be positive");
        return;
    case PolicyKind::APT:
        if (!(config.epsilon >= 0.0))
            throw std::invalid_argument("APT: epsilon must be non-negative");
        return;
    case PolicyKind::UCBE:
        return; // any integer exponent is allowed
    case PolicyKind::OptKG:
        if (!(config.prior_a > 0.0) || !(config.prior_b > 0.0))
            throw std::invalid_argument("Opt-KG: prior parameters must be positive");
        return;
    case PolicyKind::Uniform:
        return;
    }
    throw std::invalid_argument("unknown policy kind");
}

PolicyState::PolicyState(int num_arms) {
    if (num_arms < 1) throw std::invalid_argument("PolicyState: need at least one arm");
    pulls.assign(static_cast<std::size_t>(num_arms), 0);
    reward_sums.assign(static_cast<std::size_t>(num_arms), 0.0);
}

double PolicyState::mean(int i) const {
    auto idx = static_cast<std::size_t>(i);
    if (pulls.at(idx) <= 0) throw std::logic_error("mean of an unsampled arm");
    return reward_sums[idx] / static_cast<double>(pulls[idx]);
}

namespace detail {

int argmin_lowest(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("argmin of empty range");
    int best = 0;
    for (int i = 1; i < static_cast<int>(values.size()); ++i)
        if (values[static_cast<std::size_t>(i)] < values[static_cast<std::size_t>(best)])
            best = i;
    return best;
}

double optkg_accuracy(double a, double b) { return std::max(a, b) / (a + b); }

double optkg_gain(double a, double b) {
    return std::max(optkg_accuracy(a + 1.0, b), optkg_accuracy(a, b + 1.0)) -
           optkg_accuracy(a, b);
}

double policy_score(const PolicyState& state, int arm,
                    const PolicyConfig& config, const InstanceMeta& meta) {
    auto idx = static_cast<std::size_t>(arm);
    long long n = state.pulls.at(idx);
    if (n <= 0) throw std::logic_error("policy_score: arm has no samples yet");
    double nd = static_cast<double>(n);
    double gap = std::abs(state.reward_sums[idx] / nd - meta.threshold);
    switch (config.kind) {
    case PolicyKind::LSA:
        return config.alpha * nd * gap * gap + 0.5 * std::log(nd);
    case PolicyKind::APT:
        return std::sqrt(nd) * (gap + config.epsilon);
    case PolicyKind::UCBE: {
        double a = std::pow(4.0, config.exponent) *
                   static_cast<double>(meta.budget - meta.num_arms) / meta.hardness;
        return gap - std::sqrt(a / nd);
    }
    case PolicyKind::OptKG: {
        double pa = config.prior_a + state.reward_sums[idx];
        double pb = config.prior_b + nd - state.reward_sums[idx];
        return -optkg_gain(pa, pb); // argmax gain == argmin of the negation
    }
    case PolicyKind::Uniform:
        throw std::logic_error("Uniform has no per-arm score");
    }
    throw std::logic_error("unreachable policy kind");
}

} // namespace detail

int select_arm(const PolicyState& state, const PolicyConfig& config,
               const InstanceMeta& meta) {
    if (meta.num_arms < 1 || meta.num_arms != static_cast<int>(state.pulls.size()))
        throw std::invalid_argument("select_arm: state and meta disagree on arm count");
    if (config.kind == PolicyKind::Uniform)
        return static_cast<int>(state.round % meta.num_arms);
    std::vector<double> scores(static_cast<std::size_t>(meta.num_arms));
    for (int i = 0; i < meta.num_arms; ++i)
        scores[static_cast<std::size_t>(i)] = detail::policy_score(state, i, config, meta);
    return detail::argmin_lowest(scores);
}

RunResult run_policy(const BanditInstance& instance, const PolicyConfig& config,
                     long long budget, RunRewards& rewards) {
    const int K = instance.num_arms();
    validate_policy(config);
    if (budget < K)
        throw std::invalid_argument("budget must cover one pull per arm");
    if (config.kind == PolicyKind::OptKG && instance.threshold != 0.5)
        throw std::invalid_argument("Opt-KG supports threshold 0.5 only");
    if (rewards.num_arms() < K)
        throw std::invalid_argument("reward source has too few arms");

    PolicyState state(K);
    InstanceMeta meta{K, instance.threshold, budget, instance.hardness()};
    auto pull = [&](int i) {
        auto idx = static_cast<std::size_t>(i);
        double r = rewards.next_uniform(i) < instance.means[idx] ? 1.0 : 0.0;
        state.pulls[idx] += 1;
        state.reward_sums[idx] += r;
        state.round += 1;
    };

    for (int i = 0; i < K; ++i) pull(i);

    if (config.kind == PolicyKind::Uniform) {
        for (long long t = K; t < budget; ++t) pull(static_cast<int>(t % K));
    } else {
        // Scores depend only on the scoring arm's own statistics, so only the
        // pulled arm needs a refresh; the cached values stay bit-identical to
        // what select_arm would recompute.
        std::vector<double> scores(static_cast<std::size_t>(K));
        for (int i = 0; i < K; ++i)
            scores[static_cast<std::size_t>(i)] = detail::policy_score(state, i, config, meta);
        for (long long t = K; t < budget; ++t) {
            int i = detail::argmin_lowest(scores);
            pull(i);
            scores[static_cast<std::size_t>(i)] = detail::policy_score(state, i, config, meta);
        }
    }

    RunResult out;
    out.decisions.resize(static_cast<std::size_t>(K));
    out.means.resize(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) {
        auto idx = static_cast<std::size_t>(i);
        out.means[idx] = state.mean(i);
        out.decisions[idx] = out.means[idx] >= instance.threshold ? 1 : 0;
    }
    out.pulls = std::move(state.pulls);
    return out;
}

int aggregate_regret(const std::vector<char>& decisions,
                     const BanditInstance& instance) {
    if (static_cast<int>(decisions.size()) != instance.num_arms())
        throw std::invalid_argument("decision vector does not match the instance");
    int wrong = 0;
    for (int i = 0; i < instance.num_arms(); ++i)
        wrong += (decisions[static_cast<std::size_t>(i)] != 0) != instance.label(i);
    return wrong;
}

} // namespace tbp
