#include "tbp/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace tbp {
namespace {

std::string setup_label(int setup_id) {
    return setup_id > 0 ? std::to_string(setup_id) : "custom";
}

const char* kRegretHeader = "mean_regret,stderr,log10_mean_regret";

std::string regret_cells(const RegretSummary& s, std::size_t p, std::size_t b) {
    return format_double(s.mean_regret[p][b]) + "," + format_double(s.se_regret[p][b]) +
           "," + format_double(s.log10_mean[p][b]);
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc())
        throw std::runtime_error("double formatting failed");
    return std::string(buf, res.ptr);
}

std::string setups_csv() {
    std::string out = "setup,arm,mean,threshold,gap,label\n";
    for (int id = 1; id <= 6; ++id) {
        BanditInstance inst = make_setup(id);
        for (int i = 0; i < inst.num_arms(); ++i) {
            out += std::to_string(id) + "," + std::to_string(i) + "," +
                   format_double(inst.means[static_cast<std::size_t>(i)]) + "," +
                   format_double(inst.threshold) + "," + format_double(inst.gap(i)) +
                   "," + (inst.label(i) ? "1" : "0") + "\n";
        }
    }
    return out;
}

std::string run_csv(const ExperimentConfig& config, const RegretSummary& summary) {
    std::string out = std::string("setup,policy,params,T,runs,seed,") + kRegretHeader + "\n";
    for (std::size_t p = 0; p < summary.policies.size(); ++p) {
        for (std::size_t b = 0; b < summary.budgets.size(); ++b) {
            out += setup_label(config.setup_id) + "," + summary.policies[p].name() + "," +
                   summary.policies[p].params() + "," +
                   std::to_string(summary.budgets[b]) + "," +
                   std::to_string(config.runs) + "," + std::to_string(config.seed) +
                   "," + regret_cells(summary, p, b) + "\n";
        }
    }
    return out;
}

std::string ttest_csv(const ExperimentConfig& config, const RegretSummary& summary,
                      const PairwiseComparison& comparison) {
    std::string out =
        "setup,baseline,baseline_params,policy,params,T,runs,seed,"
        "mean_baseline,mean_policy,p_value\n";
    const auto& base = summary.policies[comparison.baseline];
    for (std::size_t o = 0; o < comparison.others.size(); ++o) {
        const auto& other = summary.policies[comparison.others[o]];
        for (std::size_t b = 0; b < summary.budgets.size(); ++b) {
            out += setup_label(config.setup_id) + "," + base.name() + "," +
                   base.params() + "," + other.name() + "," + other.params() + "," +
                   std::to_string(summary.budgets[b]) + "," +
                   std::to_string(config.runs) + "," + std::to_string(config.seed) +
                   "," + format_double(summary.mean_regret[comparison.baseline][b]) +
                   "," + format_double(summary.mean_regret[comparison.others[o]][b]) +
                   "," + format_double(comparison.p_value[o][b]) + "\n";
        }
    }
    return out;
}

std::string allocation_csv(std::span<const double> gaps,
                           const AllocationSolution& solution) {
    std::string out = "arm,gap,x,water_level,objective\n";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        out += std::to_string(i) + "," + format_double(gaps[i]) + "," +
               format_double(solution.x[i]) + "," + format_double(solution.water_level) +
               "," + format_double(solution.objective) + "\n";
    }
    return out;
}

std::string profile_csv(std::span<const double> gaps, const LambdaProfile& profile,
                        double upper_bound) {
    std::string out = "arm,gap,lambda,level,scaled_budget,upper_bound\n";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        out += std::to_string(i) + "," + format_double(gaps[i]) + "," +
               format_double(profile.per_arm[i]) + "," + format_double(profile.level) +
               "," + format_double(profile.scaled_budget) + "," +
               format_double(upper_bound) + "\n";
    }
    return out;
}

std::string vclb_csv(const VclbConfig& config, const VclbOutcome& outcome) {
    std::string out = "horizon,a,b,mu,trials,seed,bound,violations,rate\n";
    out += std::to_string(config.horizon) + "," + format_double(config.a) + "," +
           format_double(config.b) + "," + format_double(config.mu) + "," +
           std::to_string(config.trials) + "," + std::to_string(config.seed) + "," +
           format_double(vclb_bound(config.a, config.b)) + "," +
           std::to_string(outcome.violations) + "," + format_double(outcome.rate) + "\n";
    return out;
}

std::string sweep_csv(const ExperimentConfig& config, const RegretSummary& summary) {
    std::string out = std::string("setup,alpha,T,runs,seed,") + kRegretHeader + "\n";
    for (std::size_t p = 0; p < summary.policies.size(); ++p) {
        if (summary.policies[p].kind != PolicyKind::LSA)
            throw std::invalid_argument("alpha sweep rows must all be LSA");
        for (std::size_t b = 0; b < summary.budgets.size(); ++b) {
            out += setup_label(config.setup_id) + "," +
                   format_double(summary.policies[p].alpha) + "," +
                   std::to_string(summary.budgets[b]) + "," +
                   std::to_string(config.runs) + "," + std::to_string(config.seed) +
                   "," + regret_cells(summary, p, b) + "\n";
        }
    }
    return out;
}

std::string hard_instance_csv(const std::string& instance_name,
                              const ExperimentConfig& config,
                              const RegretSummary& summary,
                              bool with_header) {
    std::string out;
    if (with_header)
        out = std::string("instance,policy,params,T,runs,seed,") + kRegretHeader + "\n";
    for (std::size_t p = 0; p < summary.policies.size(); ++p) {
        for (std::size_t b = 0; b < summary.budgets.size(); ++b) {
            out += instance_name + "," + summary.policies[p].name() + "," +
                   summary.policies[p].params() + "," +
                   std::to_string(summary.budgets[b]) + "," +
                   std::to_string(config.runs) + "," + std::to_string(config.seed) +
                   "," + regret_cells(summary, p, b) + "\n";
        }
    }
    return out;
}

} // namespace tbp
