#pragma once
#include <span>

namespace tbp {

// Sum with pairwise splitting (error O(log n) ulps instead of O(n)).
double pairwise_sum(std::span<const double> values);

struct MeanSe {
    double mean = 0.0;
    double se = 0.0; // sample standard error; 0 when n == 1
};
MeanSe summarize(std::span<const double> values);

// I_x(a, b), continued-fraction evaluation, absolute accuracy ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value of a t statistic: I_{nu/(nu + t^2)}(nu / 2, 1/2).
double student_t_two_sided_p(double t_stat, double dof);

// Two-sided paired t-test on per-run values of two policies. Degenerate
// samples follow fixed conventions: all differences zero -> 1, all
// differences equal and nonzero -> 0. Requires equal lengths, n >= 2.
double paired_ttest(std::span<const double> x, std::span<const double> y);

} // namespace tbp
