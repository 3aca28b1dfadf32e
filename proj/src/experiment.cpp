#include "tbp/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tbp/stats.hpp"

namespace tbp {
namespace {

void validate_experiment(const ExperimentConfig& config) {
    const int K = config.instance.num_arms();
    if (config.budgets.empty())
        throw std::invalid_argument("experiment needs at least one budget");
    for (long long T : config.budgets)
        if (T < K)
            throw std::invalid_argument("every budget must cover one pull per arm");
    if (config.policies.empty())
        throw std::invalid_argument("experiment needs at least one policy");
    for (const auto& p : config.policies) {
        validate_policy(p);
        if (p.kind == PolicyKind::OptKG && config.instance.threshold != 0.5)
            throw std::invalid_argument("Opt-KG supports threshold 0.5 only");
    }
    if (config.runs < 1) throw std::invalid_argument("runs must be at least 1");
    if (config.threads < 1) throw std::invalid_argument("threads must be at least 1");
}

} // namespace

RegretSummary run_experiment(const ExperimentConfig& config) {
    validate_experiment(config);
    const int K = config.instance.num_arms();
    const std::size_t P = config.policies.size();
    const std::size_t B = config.budgets.size();
    const std::size_t R = static_cast<std::size_t>(config.runs);

    RegretSummary summary;
    summary.budgets = config.budgets;
    summary.policies = config.policies;
    summary.per_run.assign(P, std::vector<std::vector<int>>(B, std::vector<int>(R, 0)));

    // Cells are independent: run r of any policy reads only the counter
    // streams keyed by (seed, r, arm, t), and each cell writes its own slot.
    const std::size_t total = P * B * R;
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto worker = [&]() {
        try {
            for (;;) {
                std::size_t w = next.fetch_add(1, std::memory_order_relaxed);
                if (w >= total) return;
                std::size_t r = w % R;
                std::size_t b = (w / R) % B;
                std::size_t p = w / (R * B);
                RunRewards rewards(config.seed, static_cast<std::uint64_t>(r), K);
                RunResult res = run_policy(config.instance, config.policies[p],
                                           config.budgets[b], rewards);
                summary.per_run[p][b][r] = aggregate_regret(res.decisions, config.instance);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (config.threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(config.threads));
        for (int i = 0; i < config.threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    summary.mean_regret.assign(P, std::vector<double>(B, 0.0));
    summary.se_regret.assign(P, std::vector<double>(B, 0.0));
    summary.log10_mean.assign(P, std::vector<double>(B, 0.0));
    std::vector<double> cell(R);
    for (std::size_t p = 0; p < P; ++p) {
        for (std::size_t b = 0; b < B; ++b) {
            for (std::size_t r = 0; r < R; ++r)
                cell[r] = static_cast<double>(summary.per_run[p][b][r]);
            MeanSe ms = summarize(cell);
            summary.mean_regret[p][b] = ms.mean;
            summary.se_regret[p][b] = ms.se;
            summary.log10_mean[p][b] = ms.mean > 0.0
                                           ? std::log10(ms.mean)
                                           : -std::numeric_limits<double>::infinity();
        }
    }
    return summary;
}

PairwiseComparison compare_policies(const RegretSummary& summary,
                                    std::size_t baseline,
                                    std::vector<std::size_t> others) {
    const std::size_t P = summary.policies.size();
    const std::size_t B = summary.budgets.size();
    if (baseline >= P) throw std::invalid_argument("baseline index out of range");
    if (others.empty()) {
        for (std::size_t p = 0; p < P; ++p)
            if (p != baseline) others.push_back(p);
    }
    for (std::size_t p : others)
        if (p >= P) throw std::invalid_argument("comparison index out of range");

    PairwiseComparison cmp;
    cmp.baseline = baseline;
    cmp.others = std::move(others);
    cmp.p_value.assign(cmp.others.size(), std::vector<double>(B, 1.0));
    cmp.mean_diff.assign(cmp.others.size(), std::vector<double>(B, 0.0));

    const std::size_t R = summary.per_run[baseline].empty()
                              ? 0
                              : summary.per_run[baseline][0].size();
    std::vector<double> x(R), y(R);
    for (std::size_t o = 0; o < cmp.others.size(); ++o) {
        std::size_t other = cmp.others[o];
        for (std::size_t b = 0; b < B; ++b) {
            for (std::size_t r = 0; r < R; ++r) {
                x[r] = static_cast<double>(summary.per_run[baseline][b][r]);
                y[r] = static_cast<double>(summary.per_run[other][b][r]);
            }
            cmp.p_value[o][b] = paired_ttest(x, y);
            cmp.mean_diff[o][b] =
                summary.mean_regret[baseline][b] - summary.mean_regret[other][b];
        }
    }
    return cmp;
}

PairwiseComparison compare_policies(const ExperimentConfig& config,
                                    std::size_t baseline,
                                    std::vector<std::size_t> others) {
    return compare_policies(run_experiment(config), baseline, std::move(others));
}

} // namespace tbp
