#pragma once
#include <span>
#include <string>

#include "tbp/allocation.hpp"
#include "tbp/concentration.hpp"
#include "tbp/experiment.hpp"

namespace tbp {

// Shortest round-trip decimal form via std::to_chars: locale-independent
// and byte-stable. Infinities print as "inf"/"-inf".
std::string format_double(double v);

// All emitters produce LF-terminated lines and a fixed column order.

// setup,arm,mean,threshold,gap,label
std::string setups_csv();

// setup,policy,params,T,runs,seed,mean_regret,stderr,log10_mean_regret
std::string run_csv(const ExperimentConfig& config, const RegretSummary& summary);

// setup,baseline,baseline_params,policy,params,T,runs,seed,mean_baseline,mean_policy,p_value
std::string ttest_csv(const ExperimentConfig& config, const RegretSummary& summary,
                      const PairwiseComparison& comparison);

// arm,gap,x,water_level,objective
std::string allocation_csv(std::span<const double> gaps,
                           const AllocationSolution& solution);

// arm,gap,lambda,level,scaled_budget,upper_bound
std::string profile_csv(std::span<const double> gaps, const LambdaProfile& profile,
                        double upper_bound);

// horizon,a,b,mu,trials,seed,bound,violations,rate
std::string vclb_csv(const VclbConfig& config, const VclbOutcome& outcome);

// setup,alpha,T,runs,seed,mean_regret,stderr,log10_mean_regret
// (policies must all be LSA; one row per alpha and budget)
std::string sweep_csv(const ExperimentConfig& config, const RegretSummary& summary);

// instance,policy,params,T,runs,seed,mean_regret,stderr,log10_mean_regret
std::string hard_instance_csv(const std::string& instance_name,
                              const ExperimentConfig& config,
                              const RegretSummary& summary,
                              bool with_header);

} // namespace tbp
